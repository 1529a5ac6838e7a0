#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <vector>

#include "support.hpp"
#include "vertexlab/enumerate.hpp"
#include "vertexlab/weakgraph.hpp"

using namespace vertexlab;
using testsupport::Rng;
using testsupport::rel_err;

namespace {

cplx image_cross_condition(const Weights16& s) {
  // w1w3 + w5w7 = v1v3 + v5v7 on the transformed model
  return s.w[0] * s.w[2] + s.w[4] * s.w[6] - s.v[0] * s.v[2] - s.v[4] * s.v[6];
}

cplx image_cross_condition_anti(const Weights16& s) {
  // On the anti-symmetric image the partner products pick up a sign flip, so
  // the equivalent statement reads w1w3 + w5w8 = v1v3 + v5v8.
  return s.w[0] * s.w[2] + s.w[4] * s.w[7] - s.v[0] * s.v[2] - s.v[4] * s.v[7];
}

}  // namespace

TEST_CASE("sign matrix structure") {
  auto g = weak_graph_matrix(1);
  for (int b = 0; b < 16; ++b) CHECK(g(0, b) == 0.25);  // empty-set row
  CHECK((g - g.transpose()).norm() == 0.0);
  CHECK((16.0 * g * g - Eigen::Matrix<double, 16, 16>::Identity() * 16.0).norm() < 1e-12);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) CHECK(std::abs(g(a, b)) == 0.25);
  // fully-packed row alternates with the parity of the column class
  for (int b = 0; b < 16; ++b) CHECK(g(1, b) == (is_even_class(b) ? 0.25 : -0.25));
  // row of the down-solid odd class against the two horizontal even classes
  CHECK(g(8, 2) == -0.25);
  CHECK(g(8, 3) == 0.25);
}

TEST_CASE("all four variants preserve Z") {
  Rng rng(81);
  for (int variant = 1; variant <= 4; ++variant) {
    Weights16 wt = rng.weights();
    Weights16 hatted = apply_weak_graph(wt, variant);
    for (auto [M, N] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
      cplx z = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, wt));
      cplx zh = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, hatted));
      CAPTURE(variant);
      CAPTURE(M);
      CAPTURE(N);
      CHECK(rel_err(zh, z) < 1e-12);
    }
  }
}

TEST_CASE("even inputs map to the symmetric model, odd to the anti-symmetric") {
  Rng rng(82);
  Weights16 even_img = apply_weak_graph(rng.even_weights(), 1);
  CHECK(even_img.is_symmetric(1e-14 * even_img.max_abs()));
  Weights16 odd_img = apply_weak_graph(rng.odd_weights(), 1);
  CHECK(odd_img.is_antisymmetric(1e-14 * odd_img.max_abs()));
}

TEST_CASE("pairwise-equal even weights land back on an even model") {
  Rng rng(83);
  Weights16 wt;
  for (int i = 0; i < 8; i += 2) wt.w[i] = wt.w[i + 1] = rng.complex_unit();
  Weights16 img = apply_weak_graph(wt, 1);
  CHECK(img.is_even(1e-14 * img.max_abs()));
}

TEST_CASE("free-fermion inputs satisfy the image cross condition") {
  Rng rng(84);
  // even: w8 chosen to close w1w2 + w3w4 = w5w6 + w7w8
  Weights16 we = rng.even_weights_nonzero();
  we.w[7] = (we.w[0] * we.w[1] + we.w[2] * we.w[3] - we.w[4] * we.w[5]) / we.w[6];
  REQUIRE(ff_even_residual(we) < 1e-12);
  Weights16 img_e = apply_weak_graph(we, 1);
  CHECK(std::abs(image_cross_condition(img_e)) < 1e-12 * img_e.max_abs() * img_e.max_abs());

  // odd analogue
  Weights16 wo = rng.odd_weights_nonzero();
  wo.v[7] = (wo.v[0] * wo.v[1] + wo.v[2] * wo.v[3] - wo.v[4] * wo.v[5]) / wo.v[6];
  REQUIRE(ff_odd_residual(wo) < 1e-12);
  Weights16 img_o = apply_weak_graph(wo, 1);
  CHECK(std::abs(image_cross_condition_anti(img_o)) < 1e-12 * img_o.max_abs() * img_o.max_abs());
}

TEST_CASE("annihilating polynomial classes") {
  auto c1 = char_poly_class(1);
  CHECK(c1.involution_power);
  CHECK(c1.minimal == 1);
  for (int variant : {2, 3, 4}) {
    auto c = char_poly_class(variant);
    CAPTURE(variant);
    CHECK(!c.involution_power);
    CHECK(c.quartic_power);
    CHECK(c.mixed);
    CHECK(c.minimal == 2);
  }
}

TEST_CASE("variants 2 and 3 are cospectral") {
  auto spectrum = [](int variant) {
    Eigen::EigenSolver<Eigen::Matrix<double, 16, 16>> solver(weak_graph_matrix(variant));
    std::vector<cplx> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + 16);
    std::sort(ev.begin(), ev.end(), [](const cplx& a, const cplx& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
  };
  auto s2 = spectrum(2), s3 = spectrum(3);
  for (int i = 0; i < 16; ++i) CHECK(std::abs(s2[i] - s3[i]) < 1e-10);
}

TEST_CASE("symmetric odd <-> anti-symmetric even") {
  SUBCASE("all-ones example") {
    Weights16 ones;
    for (auto& x : ones.v) x = 1.0;
    Weights16 img = sym_odd_to_antisym_even(ones);
    CHECK(img.w[0] == cplx(2.0));
    CHECK(img.w[2] == cplx(0.0));
    CHECK(img.w[4] == cplx(0.0));
    CHECK(img.w[6] == cplx(0.0));
    CHECK(img.is_antisymmetric(0.0));
    CHECK(img.is_even(0.0));
  }

  SUBCASE("round trip, Z equality, and agreement with the full matrix") {
    Rng rng(85);
    Weights16 odd;
    for (int i = 0; i < 8; i += 2) odd.v[i] = odd.v[i + 1] = rng.complex_unit();

    Weights16 even = sym_odd_to_antisym_even(odd);
    CHECK(even.is_antisymmetric(1e-14 * even.max_abs()));
    Weights16 full = apply_weak_graph(odd, 1);
    for (int cls = 0; cls < 16; ++cls) CHECK(std::abs(even[cls] - full[cls]) < 1e-14);

    Weights16 back = antisym_even_to_sym_odd(even);
    for (int cls = 0; cls < 16; ++cls) CHECK(std::abs(back[cls] - odd[cls]) < 1e-12);

    for (auto [M, N] : {std::pair{2, 2}, std::pair{2, 4}}) {
      cplx zo = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, odd));
      cplx ze = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, even));
      CHECK(rel_err(ze, zo) < 1e-12);
    }
  }

  SUBCASE("preconditions enforced") {
    Rng rng(86);
    CHECK_THROWS_AS(sym_odd_to_antisym_even(rng.weights()), std::invalid_argument);
    CHECK_THROWS_AS(antisym_even_to_sym_odd(rng.even_weights()), std::invalid_argument);
  }

  SUBCASE("constrained inputs map onto free-fermion partners") {
    Rng rng(87);
    // anti-symmetric even with w1w3 = w5w7 -> symmetric odd free fermion
    Weights16 even;
    for (int i = 0; i < 6; i += 2) {
      even.w[i] = rng.complex_away_from_zero();
      even.w[i + 1] = -even.w[i];
    }
    even.w[6] = even.w[0] * even.w[2] / even.w[4];
    even.w[7] = -even.w[6];
    Weights16 odd_img = antisym_even_to_sym_odd(even);
    CHECK(ff_odd_residual(odd_img) < 1e-12);

    // symmetric odd with v1v3 = -v5v7 -> anti-symmetric even free fermion
    Weights16 odd;
    for (int i = 0; i < 6; i += 2) odd.v[i] = odd.v[i + 1] = rng.complex_away_from_zero();
    odd.v[6] = odd.v[7] = -odd.v[0] * odd.v[2] / odd.v[4];
    Weights16 even_img = sym_odd_to_antisym_even(odd);
    CHECK(ff_even_residual(even_img) < 1e-12);
  }
}
