#include "support.hpp"

#include <algorithm>
#include <cmath>

namespace testsupport {

double Rng::real(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(eng);
}

cplx Rng::complex_unit() { return {real(), real()}; }

cplx Rng::complex_away_from_zero(double lo, double hi) {
  double r = real(lo, hi);
  double phi = real(0.0, 6.283185307179586);
  return std::polar(r, phi);
}

Weights16 Rng::weights() {
  Weights16 wt;
  for (auto& x : wt.w) x = complex_unit();
  for (auto& x : wt.v) x = complex_unit();
  return wt;
}

Weights16 Rng::even_weights() {
  Weights16 wt;
  for (auto& x : wt.w) x = complex_unit();
  return wt;
}

Weights16 Rng::odd_weights() {
  Weights16 wt;
  for (auto& x : wt.v) x = complex_unit();
  return wt;
}

Weights16 Rng::even_weights_nonzero() {
  Weights16 wt;
  for (auto& x : wt.w) x = complex_away_from_zero();
  return wt;
}

Weights16 Rng::odd_weights_nonzero() {
  Weights16 wt;
  for (auto& x : wt.v) x = complex_away_from_zero();
  return wt;
}

Weights16 Rng::weights_nonzero() {
  Weights16 wt;
  for (auto& x : wt.w) x = complex_away_from_zero();
  for (auto& x : wt.v) x = complex_away_from_zero();
  return wt;
}

double rel_err(const cplx& got, const cplx& want) {
  double scale = std::max(std::abs(got), std::abs(want));
  if (scale == 0.0) return 0.0;
  return std::abs(got - want) / scale;
}

double rel_err(double got, double want) { return rel_err(cplx(got), cplx(want)); }

}  // namespace testsupport
