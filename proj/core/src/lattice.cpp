#include "vertexlab/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace vertexlab {

std::string staggering_name(Staggering s) {
  switch (s) {
    case Staggering::homogeneous: return "homogeneous";
    case Staggering::column: return "column";
    case Staggering::row: return "row";
    case Staggering::bipartite: return "bipartite";
  }
  throw std::logic_error("staggering");
}

std::optional<Staggering> staggering_from_name(const std::string& name) {
  if (name == "homogeneous") return Staggering::homogeneous;
  if (name == "column") return Staggering::column;
  if (name == "row") return Staggering::row;
  if (name == "bipartite") return Staggering::bipartite;
  return std::nullopt;
}

bool BondFugacities::trivial() const {
  return s_h == cplx(1.0) && s_v == cplx(1.0) && d_h == cplx(1.0) && d_v == cplx(1.0);
}

int LatticeSpec::cell_index(int i, int j) const {
  switch (staggering) {
    case Staggering::homogeneous: return 0;
    case Staggering::column: return j & 1;
    case Staggering::row: return i & 1;
    case Staggering::bipartite: return (i + j) & 1;
  }
  throw std::logic_error("staggering");
}

const Weights16& LatticeSpec::cell(int i, int j) const {
  return cell_index(i, j) == 0 ? cellA : *cellB;
}

void LatticeSpec::validate() const {
  if (rows < 1 || cols < 1) throw std::invalid_argument("lattice dimensions must be >= 1");
  if (staggering != Staggering::homogeneous && !cellB)
    throw std::invalid_argument("staggered lattice requires a second weight cell");
}

LatticeSpec LatticeSpec::homogeneous_lattice(int rows, int cols, const Weights16& wt) {
  LatticeSpec s;
  s.rows = rows;
  s.cols = cols;
  s.cellA = wt;
  s.validate();
  return s;
}

LatticeSpec LatticeSpec::staggered_lattice(int rows, int cols, Staggering st, const Weights16& a,
                                           const Weights16& b) {
  LatticeSpec s;
  s.rows = rows;
  s.cols = cols;
  s.staggering = st;
  s.cellA = a;
  s.cellB = b;
  s.validate();
  return s;
}

BondConfig BondConfig::from_bits(int rows, int cols, std::uint64_t bits) {
  BondConfig c;
  c.rows = rows;
  c.cols = cols;
  std::size_t n = static_cast<std::size_t>(rows) * cols;
  c.hbonds.resize(n);
  c.vbonds.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    c.hbonds[k] = static_cast<Bond>((bits >> k) & 1u);
    c.vbonds[k] = static_cast<Bond>((bits >> (n + k)) & 1u);
  }
  return c;
}

std::uint64_t BondConfig::to_bits() const {
  std::size_t n = hbonds.size();
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < n; ++k) {
    bits |= static_cast<std::uint64_t>(hbonds[k]) << k;
    bits |= static_cast<std::uint64_t>(vbonds[k]) << (n + k);
  }
  return bits;
}

int BondConfig::vertex_class(int i, int j) const {
  Bond up = vb(i, j);
  Bond down = vb((i + rows - 1) % rows, j);
  Bond left = h(i, (j + cols - 1) % cols);
  Bond right = h(i, j);
  return classify_vertex(up, down, left, right);
}

int ConfigStats::total_sites() const {
  int t = 0;
  for (int x : n) t += x;
  for (int x : m) t += x;
  return t;
}

ConfigStats config_stats(const LatticeSpec& spec, const BondConfig& cfg) {
  if (cfg.rows != spec.rows || cfg.cols != spec.cols)
    throw std::invalid_argument("bond configuration does not match lattice dimensions");
  ConfigStats st;
  for (int i = 0; i < spec.rows; ++i)
    for (int j = 0; j < spec.cols; ++j) {
      int cls = cfg.vertex_class(i, j);
      if (cls < 8)
        ++st.n[cls];
      else
        ++st.m[cls - 8];
    }
  for (int i = 0; i < spec.rows; ++i)
    for (int j = 0; j < spec.cols; ++j) {
      (cfg.h(i, j) == Bond::solid ? st.Ns : st.Nd)++;
      (cfg.vb(i, j) == Bond::solid ? st.Ms : st.Md)++;
    }
  return st;
}

bool check_topology(const ConfigStats& s) {
  const auto& n = s.n;
  const auto& m = s.m;
  // source/sink balance for horizontal and vertical arrows
  bool ok = (n[4] + n[7] + m[4] + m[7]) == (n[5] + n[6] + m[5] + m[6]) &&
            (n[4] + n[6] + m[0] + m[3]) == (n[5] + n[7] + m[1] + m[2]);
  // reduced single-count bond tallies
  ok = ok && s.Nd == n[0] + n[2] + n[4] + n[7] + m[0] + m[2] + m[4] + m[7];
  ok = ok && s.Ns == n[1] + n[3] + n[4] + n[7] + m[1] + m[3] + m[4] + m[7];
  ok = ok && s.Md == n[0] + n[3] + n[4] + n[6] + m[0] + m[3] + m[4] + m[6];
  ok = ok && s.Ms == n[1] + n[2] + n[4] + n[6] + m[0] + m[3] + m[5] + m[7];
  ok = ok && (s.Md + s.Ms) == s.total_sites() && (s.Nd + s.Ns) == s.total_sites();
  return ok;
}

cplx fugacity_factor(int weight_class, const BondFugacities& f) {
  unsigned p = kClassPattern[weight_class];
  bool up_solid = (p >> 3) & 1u;
  bool down_solid = (p >> 2) & 1u;
  bool left_solid = (p >> 1) & 1u;
  bool right_solid = p & 1u;
  cplx factor = 1.0;
  if (right_solid) factor *= f.s_h;
  if (!left_solid) factor *= f.d_h;
  if (down_solid) factor *= f.s_v;
  if (!up_solid) factor *= f.d_v;
  return factor;
}

Weights16 apply_bond_fugacities(const Weights16& wt, const BondFugacities& f) {
  Weights16 out = wt;
  for (int cls = 0; cls < 16; ++cls) out[cls] *= fugacity_factor(cls, f);
  return out;
}

}  // namespace vertexlab
