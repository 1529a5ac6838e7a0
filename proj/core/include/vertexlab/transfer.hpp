#pragma once

#include <Eigen/Dense>

#include "vertexlab/lattice.hpp"

namespace vertexlab {

inline constexpr int kTransferMaxWidth = 10;

using Matrix = Eigen::MatrixXcd;

// Row-to-row transfer matrix of row i: T[beta', beta] with beta the incoming
// vertical bond states below the row and beta' the outgoing states above,
// bit j of beta corresponding to column j (dashed=0). The horizontal ring is
// traced out as a product of 2x2 bond matrices around the row.
Matrix row_transfer(const LatticeSpec& spec, int row);

// Z = Tr(T_{M-1} ... T_1 T_0). Row matrices repeat with period 1 or 2, so the
// product is folded by repeated squaring for large M.
cplx partition_transfer(const LatticeSpec& spec);

struct StripFreeEnergy {
  cplx minus_beta_f{};      // per site, (1/(pN)) log lambda_max over a p-row period
  int width = 0;            // N
  int period = 1;           // rows per repeating unit
  double dominant_gap = 0;  // |lambda_2| / |lambda_1|
  bool degenerate = false;  // top two magnitudes agree within tolerance
};

// Infinite-strip free energy per site at fixed width from the dominant
// eigenvalue of the periodic row product; degeneracy of the top magnitude is
// reported rather than silently ignored.
StripFreeEnergy free_energy_strip(const LatticeSpec& spec, double degeneracy_tol = 1e-10);

}  // namespace vertexlab
