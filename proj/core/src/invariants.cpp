#include "vertexlab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace vertexlab {

namespace {

constexpr cplx kI{0.0, 1.0};

// Slot of each weight class inside the 4x4 repackaging: the class with bond
// legs (up, down, left, right) sits at row 2*down + left, column 2*up + right.
// Conjugating by S (x) T then acts as a gauge transformation on the lattice
// edges, S on vertical bonds and T on horizontal ones, so it cancels around
// every cycle of a torus and leaves the partition function unchanged.
constexpr int slot_row(int cls) {
  const unsigned p = kClassPattern[static_cast<std::size_t>(cls)];
  return static_cast<int>(2 * ((p >> 2) & 1u) + ((p >> 1) & 1u));
}
constexpr int slot_col(int cls) {
  const unsigned p = kClassPattern[static_cast<std::size_t>(cls)];
  return static_cast<int>(2 * ((p >> 3) & 1u) + (p & 1u));
}
constexpr std::array<int, 16> make_rows() {
  std::array<int, 16> r{};
  for (int c = 0; c < 16; ++c) r[static_cast<std::size_t>(c)] = slot_row(c);
  return r;
}
constexpr std::array<int, 16> make_cols() {
  std::array<int, 16> r{};
  for (int c = 0; c < 16; ++c) r[static_cast<std::size_t>(c)] = slot_col(c);
  return r;
}
constexpr std::array<int, 16> kRow = make_rows();
constexpr std::array<int, 16> kCol = make_cols();

Eigen::Matrix2cd adjugate(const Eigen::Matrix2cd& S) {
  Eigen::Matrix2cd a;
  a << S(1, 1), -S(0, 1), -S(1, 0), S(0, 0);
  return a;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& A, const Eigen::Matrix2cd& B) {
  Eigen::Matrix4cd K;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) K.block<2, 2>(2 * i, 2 * j) = A(i, j) * B;
  return K;
}

void require_unit_det(const Eigen::Matrix2cd& S, const char* name, double tol) {
  const cplx det = S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
  if (std::abs(det - 1.0) > tol)
    throw std::invalid_argument(std::string("sl2 pair: det ") + name + " must be 1");
}

cplx dot_plain(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

// one signed quartic monomial sign * s_a s_b t_c t_d (1-based indices into
// row-major matrix entries)
struct Mono {
  int sign, a, b, c, d;
};

// the tabulated 16x16 transformation, rows/columns ordered w1..w8, v1..v8
constexpr Mono kTabulated[16][16] = {
    {{+1, 1, 4, 3, 4}, {+1, 2, 3, 1, 2}, {+1, 3, 4, 1, 4}, {+1, 1, 2, 2, 3}, {-1, 3, 4, 2, 3}, {-1, 1, 2, 1, 4}, {+1, 2, 3, 2, 3}, {+1, 1, 2, 1, 2}, {-1, 1, 2, 3, 4}, {-1, 2, 3, 1, 4}, {-1, 1, 4, 2, 3}, {-1, 3, 4, 1, 2}, {+1, 3, 4, 3, 4}, {+1, 1, 4, 1, 4}, {-1, 1, 4, 1, 2}, {-1, 2, 3, 3, 4}},
    {{+1, 2, 3, 3, 4}, {+1, 1, 4, 1, 2}, {+1, 3, 4, 2, 3}, {+1, 1, 2, 1, 4}, {-1, 3, 4, 1, 4}, {-1, 1, 2, 2, 3}, {+1, 1, 4, 1, 4}, {+1, 1, 2, 1, 2}, {-1, 1, 2, 3, 4}, {-1, 1, 4, 2, 3}, {-1, 2, 3, 1, 4}, {-1, 3, 4, 1, 2}, {+1, 3, 4, 3, 4}, {+1, 2, 3, 2, 3}, {-1, 2, 3, 1, 2}, {-1, 1, 4, 3, 4}},
    {{-1, 2, 3, 3, 4}, {-1, 1, 4, 1, 2}, {-1, 3, 4, 1, 4}, {-1, 1, 2, 2, 3}, {+1, 3, 4, 2, 3}, {+1, 1, 2, 1, 4}, {-1, 1, 4, 2, 3}, {-1, 1, 2, 1, 2}, {+1, 1, 2, 3, 4}, {+1, 1, 4, 1, 4}, {+1, 2, 3, 2, 3}, {+1, 3, 4, 1, 2}, {-1, 3, 4, 3, 4}, {-1, 2, 3, 1, 4}, {+1, 2, 3, 1, 2}, {+1, 1, 4, 3, 4}},
    {{-1, 1, 4, 3, 4}, {-1, 2, 3, 1, 2}, {-1, 3, 4, 2, 3}, {-1, 1, 2, 1, 4}, {+1, 3, 4, 1, 4}, {+1, 1, 2, 2, 3}, {-1, 2, 3, 1, 4}, {-1, 1, 2, 1, 2}, {+1, 1, 2, 3, 4}, {+1, 2, 3, 2, 3}, {+1, 1, 4, 1, 4}, {+1, 3, 4, 1, 2}, {-1, 3, 4, 3, 4}, {-1, 1, 4, 2, 3}, {+1, 1, 4, 1, 2}, {+1, 2, 3, 3, 4}},
    {{-1, 1, 3, 4, 4}, {-1, 1, 3, 2, 2}, {-1, 3, 3, 2, 4}, {-1, 1, 1, 2, 4}, {+1, 3, 3, 2, 4}, {+1, 1, 1, 2, 4}, {-1, 1, 3, 2, 4}, {-1, 1, 1, 2, 2}, {+1, 1, 1, 4, 4}, {+1, 1, 3, 2, 4}, {+1, 1, 3, 2, 4}, {+1, 3, 3, 2, 2}, {-1, 3, 3, 4, 4}, {-1, 1, 3, 2, 4}, {+1, 1, 3, 2, 2}, {+1, 1, 3, 4, 4}},
    {{-1, 2, 4, 3, 3}, {-1, 2, 4, 1, 1}, {-1, 4, 4, 1, 3}, {-1, 2, 2, 1, 3}, {+1, 4, 4, 1, 3}, {+1, 2, 2, 1, 3}, {-1, 2, 4, 1, 3}, {-1, 2, 2, 1, 1}, {+1, 2, 2, 3, 3}, {+1, 2, 4, 1, 3}, {+1, 2, 4, 1, 3}, {+1, 4, 4, 1, 1}, {-1, 4, 4, 3, 3}, {-1, 2, 4, 1, 3}, {+1, 2, 4, 1, 1}, {+1, 2, 4, 3, 3}},
    {{+1, 1, 3, 3, 3}, {+1, 1, 3, 1, 1}, {+1, 3, 3, 1, 3}, {+1, 1, 1, 1, 3}, {-1, 3, 3, 1, 3}, {-1, 1, 1, 1, 3}, {+1, 1, 3, 1, 3}, {+1, 1, 1, 1, 1}, {-1, 1, 1, 3, 3}, {-1, 1, 3, 1, 3}, {-1, 1, 3, 1, 3}, {-1, 3, 3, 1, 1}, {+1, 3, 3, 3, 3}, {+1, 1, 3, 1, 3}, {-1, 1, 3, 1, 1}, {-1, 1, 3, 3, 3}},
    {{+1, 2, 4, 4, 4}, {+1, 2, 4, 2, 2}, {+1, 4, 4, 2, 4}, {+1, 2, 2, 2, 4}, {-1, 4, 4, 2, 4}, {-1, 2, 2, 2, 4}, {+1, 2, 4, 2, 4}, {+1, 2, 2, 2, 2}, {-1, 2, 2, 4, 4}, {-1, 2, 4, 2, 4}, {-1, 2, 4, 2, 4}, {-1, 4, 4, 2, 2}, {+1, 4, 4, 4, 4}, {+1, 2, 4, 2, 4}, {-1, 2, 4, 2, 2}, {-1, 2, 4, 4, 4}},
    {{-1, 1, 4, 3, 3}, {-1, 2, 3, 1, 1}, {-1, 3, 4, 1, 3}, {-1, 1, 2, 1, 3}, {+1, 3, 4, 1, 3}, {+1, 1, 2, 1, 3}, {-1, 2, 3, 1, 3}, {-1, 1, 2, 1, 1}, {+1, 1, 2, 3, 3}, {+1, 2, 3, 1, 3}, {+1, 1, 4, 1, 3}, {+1, 3, 4, 1, 1}, {-1, 3, 4, 3, 3}, {-1, 1, 4, 1, 3}, {+1, 1, 4, 1, 1}, {+1, 2, 3, 3, 3}},
    {{-1, 2, 3, 4, 4}, {-1, 1, 4, 2, 2}, {-1, 3, 4, 2, 4}, {-1, 1, 2, 2, 4}, {+1, 3, 4, 2, 4}, {+1, 1, 2, 2, 4}, {-1, 1, 4, 2, 4}, {-1, 1, 2, 2, 2}, {+1, 1, 2, 4, 4}, {+1, 1, 4, 2, 4}, {+1, 2, 3, 2, 4}, {+1, 3, 4, 2, 2}, {-1, 3, 4, 4, 4}, {-1, 2, 3, 2, 4}, {+1, 2, 3, 2, 2}, {+1, 1, 4, 4, 4}},
    {{+1, 2, 3, 3, 3}, {+1, 1, 4, 1, 1}, {+1, 3, 4, 1, 3}, {+1, 1, 2, 1, 3}, {-1, 3, 4, 1, 3}, {-1, 1, 2, 1, 3}, {+1, 1, 4, 1, 3}, {+1, 1, 2, 1, 1}, {-1, 1, 2, 3, 3}, {-1, 1, 4, 1, 3}, {-1, 2, 3, 1, 3}, {-1, 3, 4, 1, 1}, {+1, 3, 4, 3, 3}, {+1, 2, 3, 1, 3}, {-1, 2, 3, 1, 1}, {-1, 1, 4, 3, 3}},
    {{+1, 1, 4, 4, 4}, {+1, 2, 3, 2, 2}, {+1, 3, 4, 2, 4}, {+1, 1, 2, 2, 4}, {-1, 3, 4, 2, 4}, {-1, 1, 2, 2, 4}, {+1, 2, 3, 2, 4}, {+1, 1, 2, 2, 2}, {-1, 1, 2, 4, 4}, {-1, 2, 3, 2, 4}, {-1, 1, 4, 2, 4}, {-1, 3, 4, 2, 2}, {+1, 3, 4, 4, 4}, {+1, 1, 4, 2, 4}, {-1, 1, 4, 2, 2}, {-1, 2, 3, 4, 4}},
    {{+1, 1, 3, 3, 4}, {+1, 1, 3, 1, 2}, {+1, 3, 3, 2, 3}, {+1, 1, 1, 1, 4}, {-1, 3, 3, 1, 4}, {-1, 1, 1, 2, 3}, {+1, 1, 3, 1, 4}, {+1, 1, 1, 1, 2}, {-1, 1, 1, 3, 4}, {-1, 1, 3, 2, 3}, {-1, 1, 3, 1, 4}, {-1, 3, 3, 1, 2}, {+1, 3, 3, 3, 4}, {+1, 1, 3, 2, 3}, {-1, 1, 3, 1, 2}, {-1, 1, 3, 3, 4}},
    {{+1, 2, 4, 3, 4}, {+1, 2, 4, 1, 2}, {+1, 4, 4, 1, 4}, {+1, 2, 2, 2, 3}, {-1, 4, 4, 2, 3}, {-1, 2, 2, 1, 4}, {+1, 2, 4, 2, 3}, {+1, 2, 2, 1, 2}, {-1, 2, 2, 3, 4}, {-1, 2, 4, 1, 4}, {-1, 2, 4, 2, 3}, {-1, 4, 4, 1, 2}, {+1, 4, 4, 3, 4}, {+1, 2, 4, 1, 4}, {-1, 2, 4, 1, 2}, {-1, 2, 4, 3, 4}},
    {{-1, 2, 4, 3, 4}, {-1, 2, 4, 1, 2}, {-1, 4, 4, 2, 3}, {-1, 2, 2, 1, 4}, {+1, 4, 4, 1, 4}, {+1, 2, 2, 2, 3}, {-1, 2, 4, 1, 4}, {-1, 2, 2, 1, 2}, {+1, 2, 2, 3, 4}, {+1, 2, 4, 2, 3}, {+1, 2, 4, 1, 4}, {+1, 4, 4, 1, 2}, {-1, 4, 4, 3, 4}, {-1, 2, 4, 2, 3}, {+1, 2, 4, 1, 2}, {+1, 2, 4, 3, 4}},
    {{-1, 1, 3, 3, 4}, {-1, 1, 3, 1, 2}, {-1, 3, 3, 1, 4}, {-1, 1, 1, 2, 3}, {+1, 3, 3, 2, 3}, {+1, 1, 1, 1, 4}, {-1, 1, 3, 2, 3}, {-1, 1, 1, 1, 2}, {+1, 1, 1, 3, 4}, {+1, 1, 3, 1, 4}, {+1, 1, 3, 2, 3}, {+1, 3, 3, 1, 2}, {-1, 3, 3, 3, 4}, {-1, 1, 3, 1, 4}, {+1, 1, 3, 1, 2}, {+1, 1, 3, 3, 4}},
};

double weights_scale(const Weights16& a) { return std::max(1.0, a.max_abs()); }

bool weights_close(const Weights16& a, const Weights16& b, double atol) {
  for (int i = 0; i < 16; ++i)
    if (std::abs(a[i] - b[i]) > atol) return false;
  return true;
}

void push_unique(std::vector<Weights16>& out, const Weights16& cand) {
  const double atol = 1e-12 * std::max(weights_scale(cand), 1.0);
  for (const auto& prev : out)
    if (weights_close(prev, cand, atol)) return;
  out.push_back(cand);
}

void require_small(cplx residual, cplx ref1, cplx ref2, double tol, const char* what) {
  const double scale = std::max({std::abs(ref1), std::abs(ref2), 1e-300});
  if (std::abs(residual) > tol * std::max(scale, 1.0))
    throw std::invalid_argument(std::string("invariant_mapping: constraint violated: ") + what);
}

// scaled residual of a polynomial relation sum(terms) = 0
double relation_residual(std::initializer_list<cplx> terms) {
  cplx sum = 0.0;
  double scale = 0.0;
  for (cplx t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  if (scale == 0.0) return 0.0;
  return std::abs(sum) / scale;
}

Weights16 interchange_case3(const Weights16& in) {
  Weights16 out = in;
  std::swap(out.w[2], out.w[3]);
  for (int k = 0; k < 4; ++k) std::swap(out.v[k], out.v[4 + k]);
  return out;
}

std::vector<Weights16> mapping_case1(const Weights16& wt, double tol);
std::vector<Weights16> mapping_case2(const Weights16& wt, double tol);

}  // namespace

Eigen::Matrix4cd m_matrix(const Weights16& wt) {
  Eigen::Matrix4cd m;
  for (int cls = 0; cls < 16; ++cls) m(kRow[cls], kCol[cls]) = wt[cls];
  return m;
}

Weights16 weights_from_m(const Eigen::Matrix4cd& m) {
  Weights16 wt;
  for (int cls = 0; cls < 16; ++cls) wt[cls] = m(kRow[cls], kCol[cls]);
  return wt;
}

SL2Pair make_sl2_pair(const Eigen::Matrix2cd& S, const Eigen::Matrix2cd& T, double tol) {
  require_unit_det(S, "S", tol);
  require_unit_det(T, "T", tol);
  return SL2Pair{S, T};
}

Weights16 sl2_transform(const Weights16& wt, const SL2Pair& g) {
  require_unit_det(g.S, "S", 1e-9);
  require_unit_det(g.T, "T", 1e-9);
  const Eigen::Matrix4cd V = kron2(g.S, g.T);
  const Eigen::Matrix4cd Vinv = kron2(adjugate(g.S), adjugate(g.T));
  return weights_from_m(Vinv * m_matrix(wt) * V);
}

Matrix16 sl2_matrix(const SL2Pair& g) {
  const Eigen::Matrix4cd V = kron2(g.S, g.T);
  const Eigen::Matrix4cd Vinv = kron2(adjugate(g.S), adjugate(g.T));
  Matrix16 L;
  for (int out = 0; out < 16; ++out)
    for (int in = 0; in < 16; ++in)
      L(out, in) = Vinv(kRow[out], kRow[in]) * V(kCol[in], kCol[out]);
  return L;
}

const std::array<int, 16> kTabulatedRowRelabeling = {0, 1,  2,  3,  4,  5,  6, 7,
                                                     14, 15, 13, 12, 11, 10, 9, 8};
const std::array<int, 16> kTabulatedColumnRelabeling = {12, 13, 10, 11, 9, 8, 1,  6,
                                                        4,  2,  3,  5,  7, 0, 14, 15};

Matrix16 sl2_matrix_tabulated(const SL2Pair& g) {
  const cplx s[4] = {g.S(0, 0), g.S(0, 1), g.S(1, 0), g.S(1, 1)};
  const cplx t[4] = {g.T(0, 0), g.T(0, 1), g.T(1, 0), g.T(1, 1)};
  Matrix16 L;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const Mono& m = kTabulated[i][j];
      L(i, j) = static_cast<double>(m.sign) * s[m.a - 1] * s[m.b - 1] * t[m.c - 1] * t[m.d - 1];
    }
  return L;
}

Eigen::Matrix3cd rotation_matrix(const Eigen::Matrix2cd& S) {
  const cplx s1 = S(0, 0), s2 = S(0, 1), s3 = S(1, 0), s4 = S(1, 1);
  Eigen::Matrix3cd R;
  R(0, 0) = 0.5 * (s1 * s1 - s2 * s2 - s3 * s3 + s4 * s4);
  R(0, 1) = -0.5 * kI * (s1 * s1 + s2 * s2 - s3 * s3 - s4 * s4);
  R(0, 2) = -s1 * s2 + s3 * s4;
  R(1, 0) = 0.5 * kI * (s1 * s1 - s2 * s2 + s3 * s3 - s4 * s4);
  R(1, 1) = 0.5 * (s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4);
  R(1, 2) = -kI * (s1 * s2 + s3 * s4);
  R(2, 0) = -s1 * s3 + s2 * s4;
  R(2, 1) = kI * (s1 * s3 + s2 * s4);
  R(2, 2) = s1 * s4 + s2 * s3;
  return R;
}

CovariantSet covariants(const Weights16& wt) {
  const auto& w = wt.w;
  const auto& v = wt.v;
  CovariantSet c;
  c.W0 = 0.25 * (w[0] + w[1] + w[2] + w[3]);
  c.u(0) = 0.25 * (v[0] + v[1] + v[2] + v[3]);
  c.u(1) = 0.25 * kI * (-v[0] + v[1] + v[2] - v[3]);
  c.u(2) = 0.25 * (w[0] - w[1] - w[2] + w[3]);
  c.v(0) = 0.25 * (v[4] + v[5] + v[6] + v[7]);
  c.v(1) = 0.25 * kI * (v[4] - v[5] - v[6] + v[7]);
  c.v(2) = 0.25 * (w[0] - w[1] + w[2] - w[3]);
  c.W(0, 0) = 0.25 * (w[4] + w[5] + w[6] + w[7]);
  c.W(0, 1) = 0.25 * kI * (w[4] - w[5] - w[6] + w[7]);
  c.W(0, 2) = 0.25 * (v[0] - v[1] + v[2] - v[3]);
  c.W(1, 0) = 0.25 * kI * (-w[4] + w[5] - w[6] + w[7]);
  c.W(1, 1) = 0.25 * (w[4] + w[5] - w[6] - w[7]);
  c.W(1, 2) = 0.25 * kI * (-v[0] - v[1] + v[2] + v[3]);
  c.W(2, 0) = 0.25 * (v[4] - v[5] + v[6] - v[7]);
  c.W(2, 1) = 0.25 * kI * (v[4] + v[5] - v[6] - v[7]);
  c.W(2, 2) = 0.25 * (w[0] + w[1] - w[2] - w[3]);
  return c;
}

Weights16 weights_from_covariants(const CovariantSet& c) {
  const cplx a = 4.0 * c.W0, b = 4.0 * c.u(2), cc = 4.0 * c.v(2), d = 4.0 * c.W(2, 2);
  const cplx e1 = 4.0 * c.u(0), e2 = -4.0 * kI * c.u(1);
  const cplx e3 = 4.0 * c.W(0, 2), e4 = -4.0 * kI * c.W(1, 2);
  const cplx f1 = 4.0 * c.v(0), f2 = -4.0 * kI * c.v(1);
  const cplx f3 = 4.0 * c.W(2, 0), f4 = -4.0 * kI * c.W(2, 1);
  const cplx g1 = 4.0 * c.W(0, 0), g2 = -4.0 * kI * c.W(0, 1);
  const cplx g3 = -4.0 * kI * c.W(1, 0), g4 = 4.0 * c.W(1, 1);
  Weights16 wt;
  wt.w[0] = 0.25 * (a + b + cc + d);
  wt.w[1] = 0.25 * (a - b - cc + d);
  wt.w[2] = 0.25 * (a - b + cc - d);
  wt.w[3] = 0.25 * (a + b - cc - d);
  wt.v[0] = 0.25 * (e1 - e2 + e3 - e4);
  wt.v[1] = 0.25 * (e1 + e2 - e3 - e4);
  wt.v[2] = 0.25 * (e1 + e2 + e3 + e4);
  wt.v[3] = 0.25 * (e1 - e2 - e3 + e4);
  wt.v[4] = 0.25 * (f1 + f2 + f3 + f4);
  wt.v[5] = 0.25 * (f1 - f2 - f3 + f4);
  wt.v[6] = 0.25 * (f1 - f2 + f3 - f4);
  wt.v[7] = 0.25 * (f1 + f2 - f3 - f4);
  wt.w[4] = 0.25 * (g1 + g2 - g3 + g4);
  wt.w[5] = 0.25 * (g1 - g2 + g3 + g4);
  wt.w[6] = 0.25 * (g1 - g2 - g3 - g4);
  wt.w[7] = 0.25 * (g1 + g2 + g3 - g4);
  return wt;
}

InvariantSet invariants(const Weights16& wt) {
  const CovariantSet c = covariants(wt);
  const Eigen::Matrix3cd Wt = c.W.transpose();
  const Eigen::Matrix3cd WWt = c.W * Wt;
  const Eigen::Matrix3cd WtW = Wt * c.W;
  const Eigen::Matrix3cd WWt2 = WWt * WWt;
  InvariantSet r;
  r.I[0] = c.W0;
  r.I[1] = dot_plain(c.u, c.u);
  r.I[2] = dot_plain(c.v, c.v);
  r.I[3] = dot_plain(c.u, c.W * c.v);
  r.I[4] = WWt.trace();
  r.I[5] = dot_plain(c.u, WWt * c.u);
  r.I[6] = dot_plain(c.v, WtW * c.v);
  r.I[7] = dot_plain(c.u, WWt * c.W * c.v);
  r.I[8] = WWt2.trace();
  r.I[9] = dot_plain(c.u, WWt2 * c.u);
  r.I[10] = dot_plain(c.v, WtW * WtW * c.v);
  r.I[11] = dot_plain(c.u, WWt2 * c.W * c.v);
  r.I[12] = (WWt2 * WWt).trace();
  return r;
}

InvariantSet closed_form_invariants(const Weights16& wt, Parity parity, double tol) {
  const double atol = tol * weights_scale(wt);
  InvariantSet r;
  if (parity == Parity::even) {
    if (!wt.is_even(atol))
      throw std::invalid_argument("closed_form_invariants: weights are not even");
    const auto& w = wt.w;
    const cplx b = w[0] - w[1] - w[2] + w[3];
    const cplx c = w[0] - w[1] + w[2] - w[3];
    const cplx d = w[0] + w[1] - w[2] - w[3];
    const cplx p = w[4] * w[5] + w[6] * w[7];
    const cplx q = w[4] * w[5] * w[6] * w[7];
    r.I[0] = 0.25 * (w[0] + w[1] + w[2] + w[3]);
    r.I[1] = b * b / 16.0;
    r.I[2] = c * c / 16.0;
    r.I[3] = c * b * d / 64.0;
    r.I[4] = d * d / 16.0 + 0.5 * p;
    r.I[5] = d * d * b * b / 256.0;
    r.I[6] = d * d * c * c / 256.0;
    r.I[7] = c * b * d * d * d / 1024.0;
    r.I[8] = d * d * d * d / 256.0 + p * p / 8.0 + 0.5 * q;
    r.I[9] = b * b * d * d * d * d / 4096.0;
    r.I[10] = c * c * d * d * d * d / 4096.0;
    r.I[11] = c * b * d * d * d * d * d / 16384.0;
    r.I[12] = std::pow(d, 6) / 4096.0 + p * p * p / 32.0 + 0.375 * q * p;
    return r;
  }
  if (!wt.is_odd(atol))
    throw std::invalid_argument("closed_form_invariants: weights are not odd");
  const auto& v = wt.v;
  const cplx a1 = v[0] - v[3], a2 = v[2] - v[1];
  const cplx b1 = v[4] - v[7], b2 = v[6] - v[5];
  const cplx pa = v[0] * v[2] - v[1] * v[3];
  const cplx pb = v[4] * v[6] - v[5] * v[7];
  r.I[0] = 0.0;
  r.I[1] = 0.25 * (v[0] + v[3]) * (v[2] + v[1]);
  r.I[2] = 0.25 * (v[4] + v[7]) * (v[6] + v[5]);
  r.I[3] = 0.0;
  r.I[4] = 0.25 * a1 * a2 + 0.25 * b1 * b2;
  r.I[5] = pa * pa / 16.0;
  r.I[6] = pb * pb / 16.0;
  r.I[7] = 0.0;
  r.I[8] = a1 * a1 * a2 * a2 / 16.0 + b1 * b1 * b2 * b2 / 16.0;
  r.I[9] = a1 * a2 * pa * pa / 64.0;
  r.I[10] = b1 * b2 * pb * pb / 64.0;
  r.I[11] = 0.0;
  r.I[12] = std::pow(a1 * a2, 3) / 64.0 + std::pow(b1 * b2, 3) / 64.0;
  return r;
}

ClassCheckResult class_check(const InvariantSet& inv, InvariantClass which, double tol) {
  const auto I = [&inv](int k) { return inv[k]; };
  ClassCheckResult res;
  auto push = [&res](double r) { res.residuals.push_back(r); };

  const bool odd_family = (which == InvariantClass::odd || which == InvariantClass::ff_odd);
  if (odd_family) {
    double imax = 0.0;
    for (int k = 1; k <= 13; ++k) imax = std::max(imax, std::abs(I(k)));
    const double iscale = std::max(imax, 1e-300);
    for (int k : {1, 4, 8, 12}) push(std::abs(I(k)) / iscale);
    // I5 = I10/I6 + I11/I7 in cleared form (shared by both presentations)
    push(relation_residual({I(5) * I(6) * I(7), -I(10) * I(7), -I(11) * I(6)}));
    // I9 = (I10/I6)^2 + (I11/I7)^2
    push(relation_residual({I(9) * I(6) * I(6) * I(7) * I(7), -I(10) * I(10) * I(7) * I(7),
                            -I(11) * I(11) * I(6) * I(6)}));
    // I13 = (I10/I6)^3 + (I11/I7)^3
    push(relation_residual({I(13) * std::pow(I(6), 3) * std::pow(I(7), 3),
                            -std::pow(I(10), 3) * std::pow(I(7), 3),
                            -std::pow(I(11), 3) * std::pow(I(6), 3)}));
    // second presentation: I6 I7 (I5^2 - I9) = 2 I10 I11
    push(relation_residual(
        {I(5) * I(5) * I(6) * I(7), -I(9) * I(6) * I(7), -2.0 * I(10) * I(11)}));
    // second presentation: I6 I7 (I5 I9 - I13) = I5 I10 I11
    push(relation_residual(
        {I(5) * I(9) * I(6) * I(7), -I(13) * I(6) * I(7), -I(5) * I(10) * I(11)}));
    if (which == InvariantClass::ff_odd)
      // I2 - I10/I6 = I3 - I11/I7
      push(relation_residual(
          {(I(2) - I(3)) * I(6) * I(7), -I(10) * I(7), I(11) * I(6)}));
  } else {
    push(relation_residual({I(4) * I(4), -I(2) * I(7)}));
    push(relation_residual({I(4) * I(4), -I(3) * I(6)}));
    // first presentation
    push(relation_residual({std::pow(I(4), 4), -I(2) * I(3) * I(3) * I(10)}));
    push(relation_residual({std::pow(I(4), 4), -I(2) * I(2) * I(3) * I(11)}));
    push(relation_residual({std::pow(I(4), 6), -I(2) * I(2) * I(3) * I(3) * I(8) * I(8)}));
    push(relation_residual(
        {std::pow(I(4), 10), -std::pow(I(2), 4) * std::pow(I(3), 4) * I(12) * I(12)}));
    // second presentation
    push(relation_residual({I(6) * I(7), -I(2) * I(11)}));
    push(relation_residual({I(6) * I(7), -I(3) * I(10)}));
    push(relation_residual({I(6) * I(11), -I(8) * I(8)}));
    push(relation_residual({I(7) * I(10), -I(8) * I(8)}));
    push(relation_residual({I(6) * I(7) * I(8) * I(8), -I(2) * I(3) * I(12) * I(12)}));
    // sextic relation shared by both presentations
    push(relation_residual({I(2) * I(3) * std::pow(I(5), 3), 2.0 * I(2) * I(3) * I(13),
                            6.0 * I(5) * I(6) * I(7), 3.0 * I(4) * I(4) * I(9),
                            -3.0 * I(2) * I(3) * I(9) * I(5),
                            -3.0 * I(4) * I(4) * I(5) * I(5), -6.0 * I(8) * I(8)}));
    if (which == InvariantClass::ff_even)
      // I1^2 + 2 I4^2/(I2 I3) = I2 + I3 + I5
      push(relation_residual({I(1) * I(1) * I(2) * I(3), 2.0 * I(4) * I(4),
                              -I(2) * I(2) * I(3), -I(2) * I(3) * I(3),
                              -I(5) * I(2) * I(3)}));
  }
  res.ok = std::all_of(res.residuals.begin(), res.residuals.end(),
                       [tol](double r) { return r <= tol; });
  return res;
}

namespace {

std::vector<Weights16> mapping_case1(const Weights16& wt, double tol) {
  std::vector<Weights16> out;
  if (wt.is_even(tol * weights_scale(wt))) {
    const auto& w = wt.w;
    require_small(w[0] + w[1], w[0], w[1], tol, "w1 = -w2");
    require_small(w[2] + w[3], w[2], w[3], tol, "w3 = -w4");
    const cplx p = w[4] * w[5] + w[6] * w[7];
    const cplx rootq = std::sqrt(w[4] * w[5] * w[6] * w[7]);
    for (int s0 : {+1, -1}) {
      const cplx alpha = -p + 2.0 * static_cast<double>(s0) * rootq;
      const cplx beta = -p - 2.0 * static_cast<double>(s0) * rootq;
      const cplx ra = std::sqrt(alpha), rb = std::sqrt(beta);
      for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
          for (int s3 : {+1, -1})
            for (int s4 : {+1, -1}) {
              const cplx sum14 = static_cast<double>(s1) * (w[0] - w[2]);
              const cplx dif14 = static_cast<double>(s2) * ra;
              const cplx sum67 = static_cast<double>(s3) * (w[0] + w[2]);
              const cplx dif76 = static_cast<double>(s4) * rb;
              Weights16 cand;
              cand.v[0] = 0.5 * (sum14 + dif14);
              cand.v[3] = 0.5 * (sum14 - dif14);
              cand.v[1] = cand.v[0];
              cand.v[2] = cand.v[3];
              cand.v[5] = 0.5 * (sum67 - dif76);
              cand.v[6] = 0.5 * (sum67 + dif76);
              cand.v[4] = cand.v[5];
              cand.v[7] = cand.v[6];
              push_unique(out, cand);
            }
    }
    return out;
  }
  if (!wt.is_odd(tol * weights_scale(wt)))
    throw std::invalid_argument("invariant_mapping: weights must be even or odd");
  const auto& v = wt.v;
  require_small(v[4] * v[6] - v[5] * v[7], v[4] * v[6], v[5] * v[7], tol, "v5 v7 = v6 v8");
  require_small(v[0] * v[2] - v[1] * v[3], v[0] * v[2], v[1] * v[3], tol, "v1 v3 = v2 v4");
  const double floor = 1e-12 * weights_scale(wt);
  if (std::abs(v[0]) <= floor || std::abs(v[5]) <= floor)
    throw std::invalid_argument("invariant_mapping: case 1 needs v1 and v6 nonzero");
  const cplx rva = std::sqrt(v[1] / v[0]);
  const cplx rvb = std::sqrt(v[4] / v[5]);
  const cplx ra = rva * (v[0] - v[3]);
  const cplx rb = rvb * (v[6] - v[5]);
  const cplx prod_a = -0.25 * (ra - rb) * (ra - rb);
  const cplx prod_b = -0.25 * (ra + rb) * (ra + rb);
  for (int t1 : {+1, -1})
    for (int t2 : {+1, -1})
      for (int t3 : {0, 1}) {
        const cplx sum13 = static_cast<double>(t1) * rvb * (v[6] + v[5]);
        const cplx dif13 = static_cast<double>(t2) * rva * (v[0] + v[3]);
        Weights16 cand;
        cand.w[0] = 0.5 * (sum13 + dif13);
        cand.w[2] = 0.5 * (sum13 - dif13);
        cand.w[1] = -cand.w[0];
        cand.w[3] = -cand.w[2];
        const cplx p56 = t3 ? prod_b : prod_a;
        const cplx p78 = t3 ? prod_a : prod_b;
        cand.w[4] = cand.w[5] = std::sqrt(p56);
        cand.w[6] = cand.w[7] = std::sqrt(p78);
        push_unique(out, cand);
      }
  return out;
}

std::vector<Weights16> mapping_case2(const Weights16& wt, double tol) {
  std::vector<Weights16> out;
  if (wt.is_even(tol * weights_scale(wt))) {
    const auto& w = wt.w;
    require_small(w[0] + w[2], w[0], w[2], tol, "w1 = -w3");
    require_small(w[1] + w[3], w[1], w[3], tol, "w2 = -w4");
    require_small(w[4] * w[5] - w[6] * w[7], w[4] * w[5], w[6] * w[7], tol, "w5 w6 = w7 w8");
    const cplx root56 = std::sqrt(w[4] * w[5]);
    for (int u1 : {+1, -1})
      for (int u2 : {+1, -1})
        for (int u3 : {+1, -1}) {
          const cplx v3m2 = static_cast<double>(u1) * (w[0] + w[1]);
          const cplx v3p2 = static_cast<double>(u2) * (w[0] - w[1]);
          Weights16 cand;
          cand.v[2] = 0.5 * (v3p2 + v3m2);
          cand.v[1] = 0.5 * (v3p2 - v3m2);
          cand.v[0] = cand.v[2];
          cand.v[3] = cand.v[1];
          cand.v[4] = static_cast<double>(u3) * root56;
          cand.v[6] = cand.v[4];
          cand.v[5] = -cand.v[6];
          cand.v[7] = -cand.v[4];
          push_unique(out, cand);
        }
    return out;
  }
  if (!wt.is_odd(tol * weights_scale(wt)))
    throw std::invalid_argument("invariant_mapping: weights must be even or odd");
  const auto& v = wt.v;
  require_small(v[4] + v[7], v[4], v[7], tol, "v5 = -v8");
  require_small(v[5] + v[6], v[5], v[6], tol, "v6 = -v7");
  require_small(v[0] * v[1] - v[2] * v[3], v[0] * v[1], v[2] * v[3], tol, "v1 v2 = v3 v4");
  const double floor = 1e-12 * weights_scale(wt);
  if (std::abs(v[2]) <= floor)
    throw std::invalid_argument("invariant_mapping: case 2 needs v3 nonzero");
  const cplx r13 = std::sqrt(v[0] / v[2]);
  const cplx w5678 = std::sqrt(v[4] * v[6]);
  for (int u1 : {+1, -1})
    for (int u2 : {+1, -1}) {
      const cplx w1p2 = static_cast<double>(u1) * r13 * (v[2] - v[1]);
      const cplx w1m2 = static_cast<double>(u2) * r13 * (v[2] + v[1]);
      Weights16 cand;
      cand.w[0] = 0.5 * (w1p2 + w1m2);
      cand.w[1] = 0.5 * (w1p2 - w1m2);
      cand.w[2] = -cand.w[0];
      cand.w[3] = -cand.w[1];
      cand.w[4] = cand.w[5] = cand.w[6] = cand.w[7] = w5678;
      push_unique(out, cand);
    }
  return out;
}

}  // namespace

std::vector<Weights16> invariant_mapping(const Weights16& wt, int which, double tol) {
  switch (which) {
    case 1:
      return mapping_case1(wt, tol);
    case 2:
      return mapping_case2(wt, tol);
    case 3: {
      std::vector<Weights16> out;
      for (const auto& partner : mapping_case2(interchange_case3(wt), tol))
        push_unique(out, interchange_case3(partner));
      return out;
    }
    default:
      throw std::invalid_argument("invariant_mapping: which must be 1, 2 or 3");
  }
}

}  // namespace vertexlab
