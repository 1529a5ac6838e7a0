#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vertexlab/lattice.hpp"
#include "vertexlab/weights.hpp"

namespace vertexlab {

// Free-fermion conditions; the *_ti variants are the stronger
// temperature-independent product equalities.
enum class FFCondition { even, odd, even_ti, odd_ti };

// left minus right of the selected condition
cplx ff_residual(const Weights16& wt, FFCondition which);

// Closed-form free-energy integrand families.  The *_s4 pair and even_homog
// are the five-cosine displays; the rest come from the staggered determinant
// expansions (bipartite and column sublattices, even and odd parity) and
// their homogeneous specializations.
enum class IntegrandFamily {
  even_homog,      // quadratic coefficients, prefactor 1/(8 pi^2)
  odd_homog_s4,    // quartic five-term display (see free_energy note below)
  odd_bipartite,
  odd_homog_e1,
  odd_column,
  odd_homog_e2,
  even_bipartite,
  even_homog_e3,
  even_column,
  even_homog_e4,
};

std::string family_name(IntegrandFamily f);
std::optional<IntegrandFamily> family_from_name(const std::string& name);

// Which cosine combinations pair with which named coefficient.
enum class AnglePattern {
  five_term,        // A + 2B c1 + 2C c2 + 2D c(1-2) + 2E c(1+2)
  bipartite,        // five_term + 2F c(2 t1) + 2G c(2 t2)
  bipartite_homog,  // 2A + 2D c1 + 2E c2 + 2F c(1-2) + 2G c(1+2)
  column,           // five_term + 2G c(2 t2) + 2H c(t1 - 2 t2) + 2I c(t1 + 2 t2)
  column_homog,     // A + 2B c1 + 2G c2 + 2H c(1-2) + 2I c(1+2)
};

struct IntegrandCoeffs {
  IntegrandFamily family{};
  AnglePattern pattern{};
  double prefactor = 0.0;        // 1/(8 pi^2) or 1/(16 pi^2)
  std::array<cplx, 9> coeff{};   // A..I; letters outside the pattern stay 0

  cplx operator[](char letter) const { return coeff[static_cast<std::size_t>(letter - 'A')]; }
  cplx& operator[](char letter) { return coeff[static_cast<std::size_t>(letter - 'A')]; }
};

// trigonometric polynomial under the log
cplx integrand_value(const IntegrandCoeffs& c, double theta1, double theta2);

// Degree of the coefficients in the weights; fixes the shift of -beta f
// under weight scaling (prefactor * 4 pi^2 * degree * ln lambda).
int homogeneity_degree(IntegrandFamily f);

// Exact polynomial coefficients of the selected family.  Staggered families
// accept a spec with the matching staggering, or a homogeneous spec (equal
// cells); homogeneous families require a homogeneous spec.  Every cell must
// satisfy the matching free-fermion condition to tol (the dual forms of the
// even five-term D and E coefficients only agree on that manifold).
IntegrandCoeffs integrand_coeffs(const LatticeSpec& spec, IntegrandFamily family,
                                 double tol = 1e-9);

struct FreeEnergyResult {
  double minus_beta_f = 0.0;    // per lattice site, at the fine grid
  int grid = 0;
  double coarse = 0.0;          // same quadrature at grid/2
  double converged_delta = 0.0; // |fine - coarse|
};

// prefactor * iint ln(integrand) by the uniform periodic rule on a G x G
// grid with half-step offset (the trapezoid rule on the shifted grid), so
// integrable zeros pinned at corner angles stay off the sample set.  Every
// sample must be real and strictly positive.
//
// Note: the odd_homog_s4 display does not reproduce transfer-matrix strip
// free energies (its samples can even turn negative where the e1/e2 forms
// stay positive); the e1/e2 forms are the reliable odd integrands.
FreeEnergyResult free_energy(const IntegrandCoeffs& c, int grid = 256);

struct Omega2 {
  cplx value;
};

// Order parameter combination for even free-fermion weights.  Line 1 is
// 1 + P1/(16 w5w6w7w8), line 2 is P2/(16 w1w2w3w4); P2 = P1 + 16 w1w2w3w4
// identically, so the lines agree exactly when w1w2w3w4 = w5w6w7w8.
Omega2 omega2(const Weights16& wt, int line = 1);

// 0 for real Omega^2 <= 1, else (1 - Omega^-2)^{1/8}
double magnetization(const Omega2& o);

enum class OmegaLabel { disorder, critical, ordered, generic };
// |value| <= tol -> disorder; |value - 1| <= tol or value <= -1/tol ->
// critical; value >= 1/tol -> ordered; anything else -> generic.
OmegaLabel omega2_label(const Omega2& o, double tol = 1e-9);
std::string omega_label_name(OmegaLabel l);

struct CriticalCondition {
  std::string label;
  cplx residual;
};

enum class CriticalFamily { odd_homog, even_bipartite, even_column };
std::string critical_family_name(CriticalFamily f);
std::optional<CriticalFamily> critical_family_from_name(const std::string& name);

// Residuals of the displayed transition conditions.  odd_homog reads cellA of
// a homogeneous spec (its first condition is a pair of expressions, reported
// as two entries); the even families read both cells of a staggered spec.
std::vector<CriticalCondition> critical_conditions(const LatticeSpec& spec,
                                                   CriticalFamily family);

// sign choices of the even-from-odd free-energy mapping; each must be +-1
struct FFMapSigns {
  int A = +1, B = +1, C = +1, D = +1;
};

// Thermodynamic-limit map from an odd free-fermion model to an even one with
// the same integrand (so f_odd = (1/2) f_even per site under the five-term
// unit convention).  The products w5w6 and w7w8 are split evenly with
// principal square roots; the image satisfies the even FF condition exactly.
Weights16 ff_even_from_odd(const Weights16& odd, const FFMapSigns& signs = {},
                           double tol = 1e-9);

// One of the displayed column<->bipartite matching condition sets, evaluated
// on both cells.
struct BipToColSet {
  std::string label;
  cplx cell_a, cell_b;
};

// The three displayed sets.  When one vanishes, the bipartite coefficient G
// (or F) and the column pair {E, I} (or {D, H}) vanish, allowing the two
// staggered integrands to be matched term by term.
std::vector<BipToColSet> biptocol_conditions(const LatticeSpec& spec);

}  // namespace vertexlab
