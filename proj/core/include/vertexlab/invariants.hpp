#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

#include "vertexlab/weights.hpp"

namespace vertexlab {

using Matrix16 = Eigen::Matrix<cplx, 16, 16>;

// 4x4 repackaging of the sixteen weights: the class with bond legs
// (up, down, left, right) sits at M(2*down + left, 2*up + right), so row 0
// reads (w1, v5, v3, w8).
Eigen::Matrix4cd m_matrix(const Weights16& wt);
Weights16 weights_from_m(const Eigen::Matrix4cd& m);

// Pair of unit-determinant 2x2 matrices acting by conjugation with S (x) T.
struct SL2Pair {
  Eigen::Matrix2cd S, T;
};
// Throws std::invalid_argument unless both determinants are 1 to within tol.
SL2Pair make_sl2_pair(const Eigen::Matrix2cd& S, const Eigen::Matrix2cd& T, double tol = 1e-12);

// M -> (S(x)T)^{-1} M (S(x)T), repackaged as weights.  In the slot convention
// above this is a gauge transformation on lattice edges (S on vertical bonds,
// T on horizontal ones), so it preserves the torus partition function exactly
// for every pair, and the thirteen invariants below along with it.
Weights16 sl2_transform(const Weights16& wt, const SL2Pair& g);

// The same action written as a 16x16 matrix on (w1..w8, v1..v8).  Identity at
// the identity pair; determinant +1.
Matrix16 sl2_matrix(const SL2Pair& g);

// The tabulated quartic-monomial form of the transformation.  It carries a
// fixed two-sided relabeling relative to the group action:
//   sl2_matrix_tabulated(g)(i, j) ==
//       sl2_matrix(g)(kTabulatedRowRelabeling[i], kTabulatedColumnRelabeling[j]),
// so at the identity pair it reduces to a fixed permutation of the weights
// rather than the identity.  That permutation is odd, hence det = -1 while
// sl2_matrix has det = +1.
Matrix16 sl2_matrix_tabulated(const SL2Pair& g);

extern const std::array<int, 16> kTabulatedRowRelabeling;
extern const std::array<int, 16> kTabulatedColumnRelabeling;

// Scalar / vector / divector pieces of the weight tensor.  u and v transform
// with R(S), R(T); W0 is fixed; W transforms two-sidedly.
struct CovariantSet {
  cplx W0{};
  Eigen::Vector3cd u, v;
  Eigen::Matrix3cd W;
};
CovariantSet covariants(const Weights16& wt);
Weights16 weights_from_covariants(const CovariantSet& cov);

// 3x3 rotation attached to a unit-determinant 2x2; satisfies R^{-1} = R^T.
Eigen::Matrix3cd rotation_matrix(const Eigen::Matrix2cd& S);

// The thirteen polynomial invariants, indexed 1-based as in the literature.
struct InvariantSet {
  std::array<cplx, 13> I{};
  cplx operator[](int k) const { return I.at(static_cast<std::size_t>(k) - 1); }
};
InvariantSet invariants(const Weights16& wt);

enum class Parity { even, odd };

// Closed forms valid for a pure even or pure odd model; throws
// std::invalid_argument if wt does not match the declared parity.
InvariantSet closed_form_invariants(const Weights16& wt, Parity parity, double tol = 1e-9);

// Relation sets defining the even / odd equivalence classes, plus the
// free-fermion refinements.  All relations are evaluated with cleared
// denominators; each residual is scaled by its largest monomial magnitude.
enum class InvariantClass { odd, even, ff_odd, ff_even };

struct ClassCheckResult {
  bool ok = false;
  std::vector<double> residuals;
};
ClassCheckResult class_check(const InvariantSet& inv, InvariantClass which, double tol = 1e-9);

// The three even<->odd mappings built from equal invariants.  The direction
// is inferred from the parity of wt; every sign/branch choice is returned
// (deduplicated).  Even-side partners use the canonical split w5=w6, w7=w8
// (principal roots), which is harmless on the torus where only the products
// enter.  Throws std::invalid_argument if wt is neither even nor odd or
// violates the case constraints beyond tol.
std::vector<Weights16> invariant_mapping(const Weights16& wt, int which, double tol = 1e-9);

}  // namespace vertexlab
