// acceptance.cpp
// End-to-end acceptance gate. Each criterion prints exactly one line:
//   criterion  N PASS  <what was checked>   (t s)
//   criterion  N FAIL  <what was checked>
// followed by indented diagnostics on failure. Exit code = number of failed
// criteria, so ctest reports the gate as a single pass/fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"
#include "vertexlab/enumerate.hpp"
#include "vertexlab/invariants.hpp"
#include "vertexlab/symmetry.hpp"
#include "vertexlab/transfer.hpp"
#include "vertexlab/weakgraph.hpp"

using namespace vertexlab;
using testsupport::Rng;
using testsupport::rel_err;

namespace {

std::vector<std::string> g_diagnostics;

void record(bool ok, const std::string& what) {
  if (!ok) g_diagnostics.push_back(what);
}

void require_le(double value, double bound, const std::string& what) {
  if (!(value <= bound))
    g_diagnostics.push_back(what + ": " + std::to_string(value) + " > " + std::to_string(bound));
}

// ---------------------------------------------------------------------------
// 1. transfer vs enumeration on random complex specs, all staggerings

void criterion_oracle_agreement() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(1001);
  const Staggering stags[] = {Staggering::homogeneous, Staggering::column, Staggering::row,
                              Staggering::bipartite};
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    int M = 1 + static_cast<int>(rng.eng() % 3);
    int N = 1 + static_cast<int>(rng.eng() % 3);
    Staggering st = stags[trial % 4];
    LatticeSpec spec = LatticeSpec::staggered_lattice(M, N, st, rng.weights(), rng.weights());
    if (trial % 5 == 0) {
      BondFugacities f;
      f.s_h = rng.complex_away_from_zero();
      f.d_v = rng.complex_away_from_zero();
      spec.fugacities = f;
    }
    cplx ze = partition_enumerate(spec);
    cplx zt = partition_transfer(spec);
    worst = std::max(worst, rel_err(zt, ze));
  }
  require_le(worst, 1e-10, "worst transfer/enumeration gap over 50 specs");
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require_le(dt, 30.0, "runtime budget (s)");
}

// ---------------------------------------------------------------------------
// 2. Z invariance under the full 32-element group on square tori

void criterion_symmetry() {
  Rng rng(1002);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Weights16 wt = rng.weights();
    cplx z2 = partition_enumerate(LatticeSpec::homogeneous_lattice(2, 2, wt));
    cplx z3 = partition_transfer(LatticeSpec::homogeneous_lattice(3, 3, wt));
    for (const auto& g : symmetry_group()) {
      Weights16 gw = apply_symmetry(g, wt);
      worst = std::max(worst,
                       rel_err(partition_enumerate(LatticeSpec::homogeneous_lattice(2, 2, gw)), z2));
      worst = std::max(
          worst, rel_err(partition_transfer(LatticeSpec::homogeneous_lattice(3, 3, gw)), z3));
    }
  }
  require_le(worst, 1e-9, "worst Z drift over 32 elements x 20 weight sets");
}

// ---------------------------------------------------------------------------
// 3. exhaustive topology constraints on 2x3 + bond-counted fugacity factor

void criterion_topology() {
  auto spec = LatticeSpec::homogeneous_lattice(2, 3, Weights16::all_ones());
  int violations = 0;
  for (std::uint64_t bits = 0; bits < (1u << 12); ++bits) {
    auto cfg = BondConfig::from_bits(2, 3, bits);
    if (!check_topology(config_stats(spec, cfg))) ++violations;
  }
  record(violations == 0,
         std::to_string(violations) + " of 4096 configurations violate a constraint");

  Rng rng(1003);
  Weights16 wt = rng.weights_nonzero();
  BondFugacities fug;
  fug.s_h = rng.complex_away_from_zero();
  fug.d_h = rng.complex_away_from_zero();
  fug.s_v = rng.complex_away_from_zero();
  fug.d_v = rng.complex_away_from_zero();

  LatticeSpec plain = LatticeSpec::homogeneous_lattice(2, 3, wt);
  LatticeSpec decorated = plain;
  decorated.fugacities = fug;

  // explicit: weight product times s^solid d^dashed tallies, config by config
  cplx z_counted = 0.0;
  for (std::uint64_t bits = 0; bits < (1u << 12); ++bits) {
    auto cfg = BondConfig::from_bits(2, 3, bits);
    auto st = config_stats(plain, cfg);
    cplx term = 1.0;
    for (int i = 0; i < 8; ++i) {
      term *= std::pow(wt.w[i], st.n[i]);
      term *= std::pow(wt.v[i], st.m[i]);
    }
    term *= std::pow(fug.s_h, st.Ns) * std::pow(fug.d_h, st.Nd);
    term *= std::pow(fug.s_v, st.Ms) * std::pow(fug.d_v, st.Md);
    z_counted += term;
  }
  require_le(rel_err(partition_enumerate(decorated), z_counted), 1e-12,
             "decorated Z vs bond-counted Z");
}

// ---------------------------------------------------------------------------
// 4. weak-graph transformation: Z preservation, image structure, annihilating
//    polynomials, even<->odd restricted maps

void criterion_weakgraph() {
  Rng rng(1004);

  double worst_z = 0.0;
  for (int variant = 1; variant <= 4; ++variant) {
    Weights16 wt = rng.weights();
    Weights16 hatted = apply_weak_graph(wt, variant);
    for (int M = 1; M <= 3; ++M)
      for (int N = M; N <= 3; ++N) {
        cplx z = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, wt));
        cplx zh = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, hatted));
        worst_z = std::max(worst_z, rel_err(zh, z));
      }
  }
  require_le(worst_z, 1e-9, "worst Z drift under (1/4)G, variants 1-4, tori up to 3x3");

  Weights16 even_img = apply_weak_graph(rng.even_weights(), 1);
  record(even_img.is_symmetric(1e-14 * even_img.max_abs()), "even image not symmetric-16");
  Weights16 odd_img = apply_weak_graph(rng.odd_weights(), 1);
  record(odd_img.is_antisymmetric(1e-14 * odd_img.max_abs()), "odd image not anti-symmetric-16");

  for (int variant = 1; variant <= 4; ++variant) {
    try {
      auto cls = char_poly_class(variant, 1e-12);
      record(cls.minimal >= 1 && cls.minimal <= 3,
             "variant " + std::to_string(variant) + ": no annihilating polynomial");
    } catch (const std::exception& e) {
      record(false, "variant " + std::to_string(variant) + ": " + e.what());
    }
  }

  Weights16 odd;
  for (int i = 0; i < 8; i += 2) odd.v[i] = odd.v[i + 1] = rng.complex_unit();
  Weights16 even = sym_odd_to_antisym_even(odd);
  Weights16 back = antisym_even_to_sym_odd(even);
  double roundtrip = 0.0;
  for (int cls = 0; cls < 16; ++cls) roundtrip = std::max(roundtrip, std::abs(back[cls] - odd[cls]));
  require_le(roundtrip, 1e-12, "even<->odd map round trip");
  for (auto [M, N] : {std::pair{2, 2}, std::pair{2, 4}}) {
    cplx zo = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, odd));
    cplx ze = partition_enumerate(LatticeSpec::homogeneous_lattice(M, N, even));
    require_le(rel_err(ze, zo), 1e-9,
               "even<->odd map Z gap on " + std::to_string(M) + "x" + std::to_string(N));
  }
}

// ---------------------------------------------------------------------------
// 5. invariants: preservation under the group action, closed forms, relation
//    sets, and the explicit matrix form of the action

// Unit-determinant pairs with all entries O(1).  The invariants are degree-6
// polynomials, so wild pairs amplify roundoff as (entry size)^12 and would
// drown the tolerances in conditioning noise rather than exercise the algebra.
SL2Pair random_sl2_pair(Rng& rng) {
  auto draw = [&rng] {
    Eigen::Matrix2cd s;
    s(0, 0) = rng.complex_away_from_zero(0.8, 1.25);
    s(0, 1) = 0.5 * rng.complex_unit();
    s(1, 0) = 0.5 * rng.complex_unit();
    s(1, 1) = (1.0 + s(0, 1) * s(1, 0)) / s(0, 0);
    return s;
  };
  return make_sl2_pair(draw(), draw());
}

double invariant_gap(const InvariantSet& a, const InvariantSet& b) {
  double scale = 1.0, d = 0.0;
  for (int k = 1; k <= 13; ++k) scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
  for (int k = 1; k <= 13; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d / scale;
}

void criterion_invariants() {
  Rng rng(1005);

  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Weights16 wt = rng.weights();
    const SL2Pair g = random_sl2_pair(rng);
    worst = std::max(worst, invariant_gap(invariants(sl2_transform(wt, g)), invariants(wt)));
  }
  require_le(worst, 1e-8, "worst invariant drift over 100 random pairs");

  double worst_closed = 0.0;
  int relation_misses = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Weights16 even = rng.even_weights();
    const Weights16 odd = rng.odd_weights();
    worst_closed = std::max(
        worst_closed, invariant_gap(closed_form_invariants(even, Parity::even), invariants(even)));
    worst_closed = std::max(
        worst_closed, invariant_gap(closed_form_invariants(odd, Parity::odd), invariants(odd)));
    if (!class_check(invariants(even), InvariantClass::even).ok) ++relation_misses;
    if (!class_check(invariants(odd), InvariantClass::odd).ok) ++relation_misses;
  }
  require_le(worst_closed, 1e-11, "worst closed-form vs generic invariant gap");
  record(relation_misses == 0, std::to_string(relation_misses) + " of 40 relation sets violated");

  double worst_action = 0.0, worst_relabel = 0.0, worst_det = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SL2Pair g = random_sl2_pair(rng);
    const Matrix16 L = sl2_matrix(g);
    const Matrix16 tab = sl2_matrix_tabulated(g);

    const Weights16 wt = rng.weights();
    Eigen::Vector<cplx, 16> x;
    for (int i = 0; i < 16; ++i) x(i) = wt[i];
    const Eigen::Vector<cplx, 16> via_matrix = L * x;
    const Weights16 via_conj = sl2_transform(wt, g);
    double num = 0.0, den = 1.0;
    for (int i = 0; i < 16; ++i) {
      num = std::max(num, std::abs(via_matrix(i) - via_conj[i]));
      den = std::max(den, std::abs(via_conj[i]));
    }
    worst_action = std::max(worst_action, num / den);

    const double scale = 1.0 + L.cwiseAbs().maxCoeff();
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        worst_relabel = std::max(worst_relabel,
                                 std::abs(tab(i, j) - L(kTabulatedRowRelabeling[i],
                                                        kTabulatedColumnRelabeling[j])) /
                                     scale);
    worst_det = std::max(worst_det, std::abs(tab.determinant() + 1.0));
  }
  require_le(worst_action, 1e-10, "matrix action vs conjugation action");
  require_le(worst_relabel, 1e-10, "tabulated form vs relabeled matrix action");
  require_le(worst_det, 1e-10, "tabulated determinant distance from -1");
}

// ---------------------------------------------------------------------------

void pending(const char* module_name) {
  throw std::runtime_error(std::string("not implemented yet: ") + module_name);
}

struct Criterion {
  int id;
  const char* what;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle agreement: transfer = enumeration, 50 specs, all staggerings",
       criterion_oracle_agreement},
      {2, "symmetry suite: Z invariant under all 32 group elements", criterion_symmetry},
      {3, "topology suite: exhaustive 2x3 constraints + bond-counted fugacities",
       criterion_topology},
      {4, "weak-graph suite: Z preservation, image structure, annihilators, even<->odd maps",
       criterion_weakgraph},
      {5, "invariant suite: SL(2) pairs, closed forms, relation sets, matrix path",
       criterion_invariants},
      {6, "finite-torus mapping suite: three even<->odd maps + two imaginary-field maps",
       [] { pending("invariants/atlas"); }},
      {7, "free-fermion integrand suite: determinant vs coefficient forms, four families",
       [] { pending("kasteleyn/freefermion"); }},
      {8, "even<->odd free-fermion mapping: coefficients, free energy, strip comparison",
       [] { pending("freefermion"); }},
      {9, "quantitative anchors: dimer free energy + strip convergence",
       [] { pending("kasteleyn"); }},
      {10, "staggered relabel suite: exact Z, FF preservation, critical integrand zeros",
       [] { pending("atlas"); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    g_diagnostics.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const std::exception& e) {
      g_diagnostics.push_back(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = g_diagnostics.empty();
    std::printf("criterion %2d %s  %s   (%.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.what, dt);
    for (const auto& d : g_diagnostics) std::printf("             - %s\n", d.c_str());
    if (!ok) ++failed;
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
