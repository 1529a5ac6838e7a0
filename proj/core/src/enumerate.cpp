#include "vertexlab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace vertexlab {

int worker_count() {
  if (const char* env = std::getenv("VERTEXLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Per-site decoding plan: bit positions of the four bonds around each site
// and the (fugacity-decorated) weight table of the site's cell.
struct SitePlan {
  int up, down, left, right;         // bit indices into the config word
  std::array<cplx, 16> weights{};    // by weight class
};

std::vector<SitePlan> build_plan(const LatticeSpec& spec) {
  spec.validate();
  const int M = spec.rows, N = spec.cols, S = M * N;
  std::array<std::array<cplx, 16>, 2> tables;
  for (int c = 0; c < 2; ++c) {
    const Weights16* wt = c == 0 ? &spec.cellA : (spec.cellB ? &*spec.cellB : &spec.cellA);
    Weights16 dec = spec.fugacities ? apply_bond_fugacities(*wt, *spec.fugacities) : *wt;
    for (int cls = 0; cls < 16; ++cls) tables[c][cls] = dec[cls];
  }
  std::vector<SitePlan> plan(static_cast<std::size_t>(S));
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < N; ++j) {
      SitePlan& p = plan[static_cast<std::size_t>(i) * N + j];
      p.right = i * N + j;
      p.left = i * N + (j + N - 1) % N;
      p.up = S + i * N + j;
      p.down = S + ((i + M - 1) % M) * N + j;
      p.weights = tables[spec.cell_index(i, j)];
    }
  return plan;
}

inline cplx config_weight(const std::vector<SitePlan>& plan, std::uint64_t bits) {
  cplx prod = 1.0;
  for (const SitePlan& p : plan) {
    unsigned code = static_cast<unsigned>((bits >> p.up) & 1u) << 3 |
                    static_cast<unsigned>((bits >> p.down) & 1u) << 2 |
                    static_cast<unsigned>((bits >> p.left) & 1u) << 1 |
                    static_cast<unsigned>((bits >> p.right) & 1u);
    prod *= p.weights[kPatternToClass[code]];
    if (prod == cplx(0.0)) return prod;
  }
  return prod;
}

// Pairwise reduction in fixed order, independent of how chunks were filled.
cplx tree_sum(std::vector<cplx> xs) {
  if (xs.empty()) return 0.0;
  while (xs.size() > 1) {
    std::size_t half = (xs.size() + 1) / 2;
    for (std::size_t i = 0; i + half < xs.size(); ++i) xs[i] += xs[i + half];
    xs.resize(half);
  }
  return xs[0];
}

}  // namespace

cplx partition_enumerate(const LatticeSpec& spec) {
  spec.validate();
  const int nb = spec.bonds();
  if (nb > kEnumerateMaxBonds)
    throw std::length_error("enumeration needs 2^" + std::to_string(nb) +
                            " configurations, cap is 2^" + std::to_string(kEnumerateMaxBonds));
  const auto plan = build_plan(spec);
  const std::uint64_t total = std::uint64_t(1) << nb;

  const std::uint64_t nchunks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t chunk_len = (total + nchunks - 1) / nchunks;
  std::vector<cplx> partial(nchunks, 0.0);

  int workers = std::min<int>(worker_count(), static_cast<int>(nchunks));
  auto run = [&](int worker) {
    for (std::uint64_t c = static_cast<std::uint64_t>(worker); c < nchunks;
         c += static_cast<std::uint64_t>(workers)) {
      const std::uint64_t lo = c * chunk_len;
      const std::uint64_t hi = std::min(total, lo + chunk_len);
      cplx acc = 0.0;
      for (std::uint64_t bits = lo; bits < hi; ++bits) acc += config_weight(plan, bits);
      partial[c] = acc;
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  return tree_sum(std::move(partial));
}

std::vector<CensusEntry> config_census(const LatticeSpec& spec) {
  spec.validate();
  const int nb = spec.bonds();
  if (nb > kCensusMaxBonds)
    throw std::length_error("census needs 2^" + std::to_string(nb) +
                            " configurations, cap is 2^" + std::to_string(kCensusMaxBonds));
  const std::uint64_t total = std::uint64_t(1) << nb;
  std::map<ConfigStats, std::uint64_t> hist;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    BondConfig cfg = BondConfig::from_bits(spec.rows, spec.cols, bits);
    ++hist[config_stats(spec, cfg)];
  }
  std::vector<CensusEntry> out;
  out.reserve(hist.size());
  for (const auto& [stats, mult] : hist) out.push_back({stats, mult});
  return out;
}

}  // namespace vertexlab
