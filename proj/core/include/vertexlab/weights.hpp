#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace vertexlab {

using cplx = std::complex<double>;

// Two-state bond. The spin alias maps dashed -> +1, solid -> -1.
enum class Bond : std::uint8_t { dashed = 0, solid = 1 };

constexpr int spin(Bond b) { return b == Bond::dashed ? +1 : -1; }

// Unified weight-class index: 0..7 = w1..w8 (even), 8..15 = v1..v8 (odd).
// The odd pattern v_i equals the w_i pattern with the down bond flipped.
//
// Bond pattern bits packed as (up<<3 | down<<2 | left<<1 | right), solid=1.
constexpr std::array<std::uint8_t, 16> kClassPattern = {
    0b0000, 0b1111, 0b1100, 0b0011, 0b0101, 0b1010, 0b0110, 0b1001,  // w1..w8
    0b0100, 0b1011, 0b1000, 0b0111, 0b0001, 0b1110, 0b0010, 0b1101,  // v1..v8
};

constexpr std::array<std::uint8_t, 16> make_pattern_to_class() {
  std::array<std::uint8_t, 16> inv{};
  for (int c = 0; c < 16; ++c) inv[kClassPattern[c]] = static_cast<std::uint8_t>(c);
  return inv;
}

// Inverse table: bond pattern code -> weight class.
constexpr std::array<std::uint8_t, 16> kPatternToClass = make_pattern_to_class();

constexpr int classify_code(unsigned code) { return kPatternToClass[code & 15u]; }

constexpr int classify_vertex(Bond up, Bond down, Bond left, Bond right) {
  unsigned code = (static_cast<unsigned>(up) << 3) | (static_cast<unsigned>(down) << 2) |
                  (static_cast<unsigned>(left) << 1) | static_cast<unsigned>(right);
  return classify_code(code);
}

constexpr int solid_count(int weight_class) {
  unsigned p = kClassPattern[weight_class];
  int n = 0;
  for (int b = 0; b < 4; ++b) n += (p >> b) & 1u;
  return n;
}

constexpr bool is_even_class(int weight_class) { return weight_class < 8; }

// "w3", "v5", ... (1-based labels)
std::string class_name(int weight_class);
int class_from_name(const std::string& name);  // -1 if not a weight label

// The 16 vertex weights of a single site class. w[i] is w_{i+1}, v[i] is v_{i+1}.
struct Weights16 {
  std::array<cplx, 8> w{};
  std::array<cplx, 8> v{};

  // unified access by weight class index 0..15
  cplx& operator[](int cls) { return cls < 8 ? w[cls] : v[cls - 8]; }
  const cplx& operator[](int cls) const { return cls < 8 ? w[cls] : v[cls - 8]; }

  static Weights16 even(const std::array<cplx, 8>& w);
  static Weights16 odd(const std::array<cplx, 8>& v);
  static Weights16 all_ones();

  double max_abs() const;
  bool is_even(double tol = 0.0) const;  // all v vanish
  bool is_odd(double tol = 0.0) const;   // all w vanish
  // w_{2i} = w_{2i-1} and v_{2i} = v_{2i-1}
  bool is_symmetric(double tol = 0.0) const;
  // w_{2i} = -w_{2i-1} and v_{2i} = -v_{2i-1}
  bool is_antisymmetric(double tol = 0.0) const;
  // all weights with equal solid-bond count are equal
  bool is_wu_symmetric(double tol = 0.0) const;

  friend bool operator==(const Weights16& a, const Weights16& b) = default;
};

Weights16 operator*(const cplx& s, const Weights16& wt);

// Free-fermion residuals, normalized by the largest product magnitude so a
// zero return is scale free.  ff_even: w1w2+w3w4-w5w6-w7w8, ff_odd likewise
// in v.  The ti_* variants are the temperature independent (product) forms.
cplx ff_even_lhs(const Weights16& wt);
cplx ff_odd_lhs(const Weights16& wt);
double ff_even_residual(const Weights16& wt);
double ff_odd_residual(const Weights16& wt);
double ti_ff_even_residual(const Weights16& wt);  // w1w2w3w4 - w5w6w7w8
double ti_ff_odd_residual(const Weights16& wt);   // v1v2v3v4 - v5v6v7v8

}  // namespace vertexlab
