#include "vertexlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vertexlab {

std::string class_name(int weight_class) {
  if (weight_class < 0 || weight_class > 15) throw std::out_of_range("weight class");
  char set = weight_class < 8 ? 'w' : 'v';
  int idx = (weight_class & 7) + 1;
  return std::string(1, set) + std::to_string(idx);
}

int class_from_name(const std::string& name) {
  if (name.size() != 2) return -1;
  if (name[0] != 'w' && name[0] != 'v') return -1;
  if (name[1] < '1' || name[1] > '8') return -1;
  int idx = name[1] - '1';
  return name[0] == 'w' ? idx : 8 + idx;
}

Weights16 Weights16::even(const std::array<cplx, 8>& w) {
  Weights16 wt;
  wt.w = w;
  return wt;
}

Weights16 Weights16::odd(const std::array<cplx, 8>& v) {
  Weights16 wt;
  wt.v = v;
  return wt;
}

Weights16 Weights16::all_ones() {
  Weights16 wt;
  wt.w.fill(1.0);
  wt.v.fill(1.0);
  return wt;
}

double Weights16::max_abs() const {
  double m = 0.0;
  for (const auto& x : w) m = std::max(m, std::abs(x));
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

bool Weights16::is_even(double tol) const {
  return std::all_of(v.begin(), v.end(), [&](const cplx& x) { return std::abs(x) <= tol; });
}

bool Weights16::is_odd(double tol) const {
  return std::all_of(w.begin(), w.end(), [&](const cplx& x) { return std::abs(x) <= tol; });
}

bool Weights16::is_symmetric(double tol) const {
  for (int i = 0; i < 8; i += 2)
    if (std::abs(w[i + 1] - w[i]) > tol || std::abs(v[i + 1] - v[i]) > tol) return false;
  return true;
}

bool Weights16::is_antisymmetric(double tol) const {
  for (int i = 0; i < 8; i += 2)
    if (std::abs(w[i + 1] + w[i]) > tol || std::abs(v[i + 1] + v[i]) > tol) return false;
  return true;
}

bool Weights16::is_wu_symmetric(double tol) const {
  // group classes by solid-bond count and require equality within each group
  std::array<cplx, 5> ref{};
  std::array<bool, 5> seen{};
  for (int cls = 0; cls < 16; ++cls) {
    int k = solid_count(cls);
    const cplx& x = (*this)[cls];
    if (!seen[k]) {
      ref[k] = x;
      seen[k] = true;
    } else if (std::abs(x - ref[k]) > tol) {
      return false;
    }
  }
  return true;
}

Weights16 operator*(const cplx& s, const Weights16& wt) {
  Weights16 out = wt;
  for (auto& x : out.w) x *= s;
  for (auto& x : out.v) x *= s;
  return out;
}

cplx ff_even_lhs(const Weights16& t) {
  return t.w[0] * t.w[1] + t.w[2] * t.w[3] - t.w[4] * t.w[5] - t.w[6] * t.w[7];
}

cplx ff_odd_lhs(const Weights16& t) {
  return t.v[0] * t.v[1] + t.v[2] * t.v[3] - t.v[4] * t.v[5] - t.v[6] * t.v[7];
}

namespace {
double pair_scale(const std::array<cplx, 8>& a) {
  double s = 0.0;
  for (int i = 0; i < 8; i += 2) s = std::max(s, std::abs(a[i] * a[i + 1]));
  return s;
}
}  // namespace

double ff_even_residual(const Weights16& t) {
  double s = pair_scale(t.w);
  return s == 0.0 ? 0.0 : std::abs(ff_even_lhs(t)) / s;
}

double ff_odd_residual(const Weights16& t) {
  double s = pair_scale(t.v);
  return s == 0.0 ? 0.0 : std::abs(ff_odd_lhs(t)) / s;
}

double ti_ff_even_residual(const Weights16& t) {
  cplx p = t.w[0] * t.w[1] * t.w[2] * t.w[3];
  cplx q = t.w[4] * t.w[5] * t.w[6] * t.w[7];
  double s = std::max(std::abs(p), std::abs(q));
  return s == 0.0 ? 0.0 : std::abs(p - q) / s;
}

double ti_ff_odd_residual(const Weights16& t) {
  cplx p = t.v[0] * t.v[1] * t.v[2] * t.v[3];
  cplx q = t.v[4] * t.v[5] * t.v[6] * t.v[7];
  double s = std::max(std::abs(p), std::abs(q));
  return s == 0.0 ? 0.0 : std::abs(p - q) / s;
}

}  // namespace vertexlab
