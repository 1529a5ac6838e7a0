#pragma once

#include <Eigen/Dense>

#include "vertexlab/weights.hpp"

namespace vertexlab {

// Bond-splitting resummation on the torus. The sign matrix has entries
// (-1)^{|S(a) cap S(b)|}, S(cls) being the solid-bond set of the class
// pattern; scaled by 1/4 it maps weights to weights with the same Z on any
// torus. Variants 1..4 flip the horizontal and/or vertical bond-value
// convention, permuting the rows: 1 = none, 2 = vertical, 3 = horizontal,
// 4 = both.
Eigen::Matrix<double, 16, 16> weak_graph_matrix(int variant = 1);

Weights16 apply_weak_graph(const Weights16& wt, int variant = 1);

// Which of the three candidate annihilating polynomials vanish on the
// normalized matrix: (G^2-I)^8, (G^4-I)^4, (G^4-I)^2 (G^2+I)^2 (G-I)^4.
// minimal = 1-based index of the first vanishing one.
struct CharPolyClass {
  bool involution_power = false;
  bool quartic_power = false;
  bool mixed = false;
  int minimal = 0;
};
CharPolyClass char_poly_class(int variant, double tol = 1e-12);

// Specializations of the variant-1 transformation: a symmetric odd model
// (v_{2i} = v_{2i-1}) maps onto an anti-symmetric even one (w_{2i} = -w_{2i-1})
// and back; the pair composes to the identity and preserves Z.
Weights16 sym_odd_to_antisym_even(const Weights16& wt, double tol = 1e-9);
Weights16 antisym_even_to_sym_odd(const Weights16& wt, double tol = 1e-9);

}  // namespace vertexlab
