#include "vertexlab/weakgraph.hpp"

#include <bit>
#include <stdexcept>

namespace vertexlab {

namespace {

using Mat16 = Eigen::Matrix<double, 16, 16>;

unsigned variant_mask(int variant) {
  switch (variant) {
    case 1: return 0b0000u;
    case 2: return 0b1100u;  // vertical bond convention flipped (up, down bits)
    case 3: return 0b0011u;  // horizontal (left, right bits)
    case 4: return 0b1111u;
    default: throw std::invalid_argument("weak-graph variant must be 1..4");
  }
}

Mat16 power(Mat16 base, int e) {
  Mat16 acc = Mat16::Identity();
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

}  // namespace

Mat16 weak_graph_matrix(int variant) {
  unsigned mask = variant_mask(variant);
  Mat16 g;
  for (int a = 0; a < 16; ++a) {
    unsigned row = kClassPattern[a] ^ mask;
    for (int b = 0; b < 16; ++b)
      g(a, b) = (std::popcount(row & kClassPattern[b]) & 1) ? -0.25 : 0.25;
  }
  return g;
}

Weights16 apply_weak_graph(const Weights16& wt, int variant) {
  Mat16 g = weak_graph_matrix(variant);
  Weights16 out;
  for (int a = 0; a < 16; ++a) {
    cplx acc = 0.0;
    for (int b = 0; b < 16; ++b) acc += g(a, b) * wt[b];
    out[a] = acc;
  }
  return out;
}

CharPolyClass char_poly_class(int variant, double tol) {
  Mat16 g = weak_graph_matrix(variant);
  Mat16 id = Mat16::Identity();
  Mat16 g2 = g * g;
  Mat16 g4 = g2 * g2;

  CharPolyClass out;
  out.involution_power = power(g2 - id, 8).norm() <= tol;
  out.quartic_power = power(g4 - id, 4).norm() <= tol;
  out.mixed = (power(g4 - id, 2) * power(g2 + id, 2) * power(g - id, 4)).norm() <= tol;
  if (out.involution_power)
    out.minimal = 1;
  else if (out.quartic_power)
    out.minimal = 2;
  else if (out.mixed)
    out.minimal = 3;
  else
    throw std::logic_error("weak-graph variant admits none of the annihilating polynomials");
  return out;
}

Weights16 sym_odd_to_antisym_even(const Weights16& wt, double tol) {
  double scale = wt.max_abs();
  if (!wt.is_odd(tol * scale) || !wt.is_symmetric(tol * scale))
    throw std::invalid_argument("input must be odd with v_{2i} = v_{2i-1}");
  const cplx v1 = wt.v[0], v3 = wt.v[2], v5 = wt.v[4], v7 = wt.v[6];
  Weights16 out;
  out.w[0] = (v1 + v3 + v5 + v7) / 2.0;
  out.w[2] = (-v1 - v3 + v5 + v7) / 2.0;
  out.w[4] = (-v1 + v3 - v5 + v7) / 2.0;
  out.w[6] = (-v1 + v3 + v5 - v7) / 2.0;
  for (int i = 0; i < 8; i += 2) out.w[i + 1] = -out.w[i];
  return out;
}

Weights16 antisym_even_to_sym_odd(const Weights16& wt, double tol) {
  double scale = wt.max_abs();
  if (!wt.is_even(tol * scale) || !wt.is_antisymmetric(tol * scale))
    throw std::invalid_argument("input must be even with w_{2i} = -w_{2i-1}");
  const cplx w1 = wt.w[0], w3 = wt.w[2], w5 = wt.w[4], w7 = wt.w[6];
  Weights16 out;
  out.v[0] = (w1 - w3 - w5 - w7) / 2.0;
  out.v[2] = (w1 - w3 + w5 + w7) / 2.0;
  out.v[4] = (w1 + w3 - w5 + w7) / 2.0;
  out.v[6] = (w1 + w3 + w5 - w7) / 2.0;
  for (int i = 0; i < 8; i += 2) out.v[i + 1] = out.v[i];
  return out;
}

}  // namespace vertexlab
