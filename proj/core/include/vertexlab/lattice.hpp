#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vertexlab/weights.hpp"

namespace vertexlab {

enum class Staggering : std::uint8_t { homogeneous, column, row, bipartite };

std::string staggering_name(Staggering s);
std::optional<Staggering> staggering_from_name(const std::string& name);

// Per-bond fugacities: s_* multiply solid bonds, d_* dashed bonds,
// subscripts h/v for horizontal/vertical. Defaults are 1 (no decoration).
struct BondFugacities {
  cplx s_h{1.0}, s_v{1.0}, d_h{1.0}, d_v{1.0};
  bool trivial() const;
  friend bool operator==(const BondFugacities&, const BondFugacities&) = default;
};

// Torus of M rows by N columns. Site (i,j) uses cellA or cellB according to
// the staggering pattern: column -> parity of j, row -> parity of i,
// bipartite -> parity of i+j.
struct LatticeSpec {
  int rows = 1;  // M
  int cols = 1;  // N
  Staggering staggering = Staggering::homogeneous;
  Weights16 cellA;
  std::optional<Weights16> cellB;
  std::optional<BondFugacities> fugacities;

  int sites() const { return rows * cols; }
  int bonds() const { return 2 * rows * cols; }

  int cell_index(int i, int j) const;
  const Weights16& cell(int i, int j) const;

  // throws std::invalid_argument on M,N < 1 or missing cellB for a staggered pattern
  void validate() const;

  static LatticeSpec homogeneous_lattice(int rows, int cols, const Weights16& wt);
  static LatticeSpec staggered_lattice(int rows, int cols, Staggering st, const Weights16& a,
                                       const Weights16& b);
};

// Explicit bond assignment. hbond(i,j) sits to the right of site (i,j) and
// vbond(i,j) above it, with torus wrap-around.
struct BondConfig {
  int rows = 0;
  int cols = 0;
  std::vector<Bond> hbonds;  // size rows*cols, index i*cols+j
  std::vector<Bond> vbonds;  // size rows*cols, index i*cols+j

  static BondConfig from_bits(int rows, int cols, std::uint64_t bits);
  std::uint64_t to_bits() const;

  Bond h(int i, int j) const { return hbonds[static_cast<std::size_t>(i) * cols + j]; }
  Bond vb(int i, int j) const { return vbonds[static_cast<std::size_t>(i) * cols + j]; }

  // bond pattern around site (i,j): up = vbond(i,j), down = vbond(i-1,j),
  // left = hbond(i,j-1), right = hbond(i,j)
  int vertex_class(int i, int j) const;

  friend bool operator==(const BondConfig&, const BondConfig&) = default;
};

// Counts per weight class plus per-direction bond tallies, each bond counted
// exactly once. Nd/Ns horizontal dashed/solid, Md/Ms vertical dashed/solid.
struct ConfigStats {
  std::array<int, 8> n{};  // n1..n8
  std::array<int, 8> m{};  // m1..m8
  int Nd = 0, Ns = 0, Md = 0, Ms = 0;

  int total_sites() const;
  friend bool operator==(const ConfigStats&, const ConfigStats&) = default;
  // strict ordering for use as an associative key
  friend auto operator<=>(const ConfigStats&, const ConfigStats&) = default;
};

ConfigStats config_stats(const LatticeSpec& spec, const BondConfig& cfg);

// Toroidal source/sink constraints:
//   n5+n8+m5+m8 = n6+n7+m6+m7
//   n5+n7+m1+m4 = n6+n8+m2+m3
// plus the four reduced bond-count identities
//   Nd = n1+n3+n5+n8+m1+m3+m5+m8      Ns = n2+n4+n5+n8+m2+m4+m5+m8
//   Md = n1+n4+n5+n7+m1+m4+m5+m7      Ms = n2+n3+n5+n7+m1+m4+m6+m8
// and Md+Ms = Nd+Ns = sum of all counts.
bool check_topology(const ConfigStats& st);

// Decorates each weight by the fugacities of its bond roots: the right half
// of a solid horizontal bond carries s_h, the left half of a dashed one d_h,
// the lower half of a solid vertical bond s_v, the upper half of a dashed
// one d_v. Summed over a torus this reproduces the factor
// s_h^Ns d_h^Nd s_v^Ms d_v^Md in front of the undecorated weight product.
Weights16 apply_bond_fugacities(const Weights16& wt, const BondFugacities& f);

// The decoration factor alone for one weight class.
cplx fugacity_factor(int weight_class, const BondFugacities& f);

}  // namespace vertexlab
