#pragma once

#include <random>

#include "vertexlab/lattice.hpp"

namespace testsupport {

using vertexlab::cplx;
using vertexlab::Weights16;

// Deterministic generator for reproducible property tests.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double real(double lo = -1.0, double hi = 1.0);
  cplx complex_unit();                    // uniform in the square [-1,1]^2
  cplx complex_away_from_zero(double lo = 0.25, double hi = 1.25);
  Weights16 weights();                    // all 16 complex, generic
  Weights16 even_weights();               // v = 0
  Weights16 odd_weights();                // w = 0
  Weights16 even_weights_nonzero();       // moduli bounded away from 0
  Weights16 odd_weights_nonzero();
  Weights16 weights_nonzero();
};

double rel_err(const cplx& got, const cplx& want);
double rel_err(double got, double want);

}  // namespace testsupport
