#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vertexlab/lattice.hpp"

namespace vertexlab {

// Hard caps on exhaustive scans (2MN bond bits).
inline constexpr int kEnumerateMaxBonds = 26;
inline constexpr int kCensusMaxBonds = 20;

// Worker count: VERTEXLAB_THREADS if set, else hardware concurrency.
int worker_count();

// Exact Z by summation over all 2^(2MN) bond configurations. Partial sums
// are accumulated over a fixed chunk grid and reduced pairwise in chunk
// order, so the result is bit-stable for any worker count.
// Throws std::length_error when 2MN exceeds the cap.
cplx partition_enumerate(const LatticeSpec& spec);

struct CensusEntry {
  ConfigStats stats;
  std::uint64_t multiplicity = 0;
};

// Histogram of ConfigStats over all bond configurations (weight independent).
std::vector<CensusEntry> config_census(const LatticeSpec& spec);

}  // namespace vertexlab
