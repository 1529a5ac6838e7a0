#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vertexlab/weights.hpp"

namespace vertexlab {

// Lattice and bond-reversal symmetries of the torus partition function:
//   c  counter-clockwise quarter rotation
//   r  horizontal reflection (left <-> right)
//   h  horizontal bond reversal (dashed <-> solid on horizontal bonds)
//   v  vertical bond reversal
// Words c^k r^j h^a v^b enumerate the group; there are 32 distinct elements.
// Rotation conjugates h into v, so the group is (C2 x C2) : D8.
struct SymmetryElement {
  int c = 0;  // 0..3
  bool r = false;
  bool h = false;
  bool v = false;

  std::string name() const;  // "I", "c", "c2rhv", ...

  // sigma with (g.wt)[cls] = wt[sigma[cls]]: the weight a transformed
  // configuration picks up at a vertex of class cls.
  std::array<int, 16> class_permutation() const;

  // c and c3 exchange the torus directions (M x N -> N x M)
  bool rotates() const { return (c & 1) != 0; }

  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

// All 32 elements, fixed order: k ascending, then r, h, v flags.
const std::vector<SymmetryElement>& symmetry_group();

std::optional<SymmetryElement> symmetry_from_name(const std::string& name);

Weights16 apply_symmetry(const SymmetryElement& g, const Weights16& wt);

// Group product ab: acting on weights, b is applied first, then a, matching
// word concatenation (compose(c, r) is the element named "cr").
SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);
SymmetryElement inverse(const SymmetryElement& g);
int element_order(const SymmetryElement& g);

// table[i][j] = index into symmetry_group() of g_i * g_j
std::array<std::array<int, 32>, 32> group_table();

}  // namespace vertexlab
