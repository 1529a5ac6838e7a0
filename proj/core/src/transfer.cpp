#include "vertexlab/transfer.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "vertexlab/enumerate.hpp"

namespace vertexlab {

namespace {

using Mat2 = Eigen::Matrix2cd;

void check_width(const LatticeSpec& spec) {
  if (spec.cols > kTransferMaxWidth)
    throw std::length_error("transfer matrix needs dimension 2^" + std::to_string(spec.cols) +
                            ", width cap is " + std::to_string(kTransferMaxWidth));
}

}  // namespace

Matrix row_transfer(const LatticeSpec& spec, int row) {
  spec.validate();
  check_width(spec);
  const int N = spec.cols;
  const long dim = 1L << N;

  // per-column decorated weight tables for this row
  std::vector<std::array<cplx, 16>> site(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    Weights16 wt = spec.cell(row, j);
    if (spec.fugacities) wt = apply_bond_fugacities(wt, *spec.fugacities);
    for (int cls = 0; cls < 16; ++cls) site[static_cast<std::size_t>(j)][cls] = wt[cls];
  }

  Matrix T(dim, dim);
  int workers = std::min<long>(worker_count(), dim);
  auto fill = [&](int worker) {
    for (long bp = worker; bp < dim; bp += workers) {
      for (long b = 0; b < dim; ++b) {
        Mat2 prod = Mat2::Identity();
        for (int j = 0; j < N; ++j) {
          unsigned up = (static_cast<unsigned long>(bp) >> j) & 1u;
          unsigned down = (static_cast<unsigned long>(b) >> j) & 1u;
          Mat2 a;
          for (unsigned l = 0; l < 2; ++l)
            for (unsigned r = 0; r < 2; ++r)
              a(l, r) = site[static_cast<std::size_t>(j)]
                            [kPatternToClass[(up << 3) | (down << 2) | (l << 1) | r]];
          prod = prod * a;
        }
        T(bp, b) = prod.trace();
      }
    }
  };
  if (workers <= 1) {
    fill(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(fill, t);
    for (auto& th : pool) th.join();
  }
  return T;
}

namespace {

int row_period(const LatticeSpec& spec) {
  return (spec.staggering == Staggering::row || spec.staggering == Staggering::bipartite) ? 2 : 1;
}

Matrix matrix_power(Matrix base, long e) {
  const long dim = base.rows();
  Matrix acc = Matrix::Identity(dim, dim);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace

cplx partition_transfer(const LatticeSpec& spec) {
  spec.validate();
  check_width(spec);
  const int M = spec.rows;
  const int p = row_period(spec);

  Matrix T0 = row_transfer(spec, 0);
  if (p == 1 || M == 1) return matrix_power(std::move(T0), M).trace();

  Matrix T1 = row_transfer(spec, 1);
  // rows stack upward: ... T1 T0, so one period is T1*T0
  Matrix period = T1 * T0;
  Matrix acc = matrix_power(std::move(period), M / 2);
  if (M & 1) acc = T0 * acc;  // leftover row M-1 has even parity when M is odd
  return acc.trace();
}

StripFreeEnergy free_energy_strip(const LatticeSpec& spec, double degeneracy_tol) {
  spec.validate();
  check_width(spec);
  const int N = spec.cols;
  const int p = row_period(spec);

  Matrix T = row_transfer(spec, 0);
  if (p == 2) T = row_transfer(spec, 1) * T;

  Eigen::ComplexEigenSolver<Matrix> solver(T, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen solve failed");
  Eigen::VectorXcd ev = solver.eigenvalues();
  std::vector<cplx> lam(ev.data(), ev.data() + ev.size());
  std::sort(lam.begin(), lam.end(),
            [](const cplx& a, const cplx& b) { return std::abs(a) > std::abs(b); });

  StripFreeEnergy out;
  out.width = N;
  out.period = p;
  cplx top = lam[0];
  if (std::abs(top) == 0.0) throw std::domain_error("transfer spectrum is identically zero");
  out.minus_beta_f = std::log(top) / static_cast<double>(p * N);
  if (lam.size() > 1) {
    out.dominant_gap = std::abs(lam[1]) / std::abs(top);
    out.degenerate = out.dominant_gap > 1.0 - degeneracy_tol;
  }
  return out;
}

}  // namespace vertexlab
