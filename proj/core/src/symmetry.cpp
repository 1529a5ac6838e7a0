#include "vertexlab/symmetry.hpp"

#include <stdexcept>

namespace vertexlab {

namespace {

// pattern bits: up<<3 | down<<2 | left<<1 | right
unsigned rotate_pattern(unsigned p) {
  unsigned u = (p >> 3) & 1u, d = (p >> 2) & 1u, l = (p >> 1) & 1u, r = p & 1u;
  return (r << 3) | (l << 2) | (u << 1) | d;  // east becomes north
}
unsigned reflect_pattern(unsigned p) {
  unsigned lr = p & 0b0011u;
  return (p & 0b1100u) | ((lr >> 1) | ((lr & 1u) << 1));
}
unsigned flip_h_pattern(unsigned p) { return p ^ 0b0011u; }
unsigned flip_v_pattern(unsigned p) { return p ^ 0b1100u; }

}  // namespace

std::string SymmetryElement::name() const {
  std::string s;
  if (c == 1) s += "c";
  if (c > 1) s += "c" + std::to_string(c);
  if (r) s += "r";
  if (h) s += "h";
  if (v) s += "v";
  return s.empty() ? "I" : s;
}

std::array<int, 16> SymmetryElement::class_permutation() const {
  std::array<int, 16> sigma{};
  for (int cls = 0; cls < 16; ++cls) {
    unsigned p = kClassPattern[cls];
    for (int t = 0; t < c; ++t) p = rotate_pattern(p);
    if (r) p = reflect_pattern(p);
    if (h) p = flip_h_pattern(p);
    if (v) p = flip_v_pattern(p);
    sigma[cls] = kPatternToClass[p];
  }
  return sigma;
}

const std::vector<SymmetryElement>& symmetry_group() {
  static const std::vector<SymmetryElement> group = [] {
    std::vector<SymmetryElement> g;
    g.reserve(32);
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) g.push_back({k, j != 0, a != 0, b != 0});
    return g;
  }();
  return group;
}

std::optional<SymmetryElement> symmetry_from_name(const std::string& name) {
  for (const auto& g : symmetry_group())
    if (g.name() == name) return g;
  return std::nullopt;
}

Weights16 apply_symmetry(const SymmetryElement& g, const Weights16& wt) {
  auto sigma = g.class_permutation();
  Weights16 out;
  for (int cls = 0; cls < 16; ++cls) out[cls] = wt[sigma[cls]];
  return out;
}

namespace {

SymmetryElement from_permutation(const std::array<int, 16>& sigma) {
  // the class-permutation representation is faithful
  for (const auto& g : symmetry_group())
    if (g.class_permutation() == sigma) return g;
  throw std::logic_error("permutation is not a group element");
}

}  // namespace

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
  auto sa = a.class_permutation();
  auto sb = b.class_permutation();
  std::array<int, 16> net{};
  for (int i = 0; i < 16; ++i) net[i] = sb[sa[i]];
  return from_permutation(net);
}

SymmetryElement inverse(const SymmetryElement& g) {
  const SymmetryElement id{};
  for (const auto& cand : symmetry_group())
    if (compose(g, cand) == id) return cand;
  throw std::logic_error("element without inverse");
}

int element_order(const SymmetryElement& g) {
  const SymmetryElement id{};
  SymmetryElement x = g;
  int order = 1;
  while (!(x == id)) {
    x = compose(g, x);
    ++order;
  }
  return order;
}

std::array<std::array<int, 32>, 32> group_table() {
  const auto& group = symmetry_group();
  std::array<std::array<int, 32>, 32> table{};
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) {
      SymmetryElement prod = compose(group[i], group[j]);
      int idx = -1;
      for (int k = 0; k < 32; ++k)
        if (group[k] == prod) {
          idx = k;
          break;
        }
      table[i][j] = idx;
    }
  return table;
}

}  // namespace vertexlab
