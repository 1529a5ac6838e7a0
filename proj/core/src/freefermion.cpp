#include "vertexlab/freefermion.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "vertexlab/enumerate.hpp"

namespace vertexlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct FamilyInfo {
  const char* name;
  AnglePattern pattern;
  double prefactor;
  int degree;
  bool even_parity;      // parity of the weights the family reads
  Staggering staggering; // homogeneous for single-cell displays
};

const FamilyInfo& family_info(IntegrandFamily f) {
  static const FamilyInfo table[] = {
      {"even_homog", AnglePattern::five_term, 1.0 / (8 * kPi * kPi), 2, true,
       Staggering::homogeneous},
      {"odd_homog_s4", AnglePattern::five_term, 1.0 / (8 * kPi * kPi), 4, false,
       Staggering::homogeneous},
      {"odd_bipartite", AnglePattern::bipartite, 1.0 / (16 * kPi * kPi), 4, false,
       Staggering::bipartite},
      {"odd_homog_e1", AnglePattern::bipartite_homog, 1.0 / (16 * kPi * kPi), 4, false,
       Staggering::homogeneous},
      {"odd_column", AnglePattern::column, 1.0 / (16 * kPi * kPi), 4, false, Staggering::column},
      {"odd_homog_e2", AnglePattern::column_homog, 1.0 / (16 * kPi * kPi), 4, false,
       Staggering::homogeneous},
      {"even_bipartite", AnglePattern::bipartite, 1.0 / (16 * kPi * kPi), 4, true,
       Staggering::bipartite},
      {"even_homog_e3", AnglePattern::bipartite, 1.0 / (16 * kPi * kPi), 4, true,
       Staggering::homogeneous},
      {"even_column", AnglePattern::column, 1.0 / (16 * kPi * kPi), 4, true, Staggering::column},
      {"even_homog_e4", AnglePattern::column, 1.0 / (16 * kPi * kPi), 4, true,
       Staggering::homogeneous},
  };
  return table[static_cast<int>(f)];
}

// 1-based accessors so the code reads like the displays
struct Cell {
  const Weights16& t;
  cplx w(int i) const { return t.w[static_cast<std::size_t>(i - 1)]; }
  cplx v(int i) const { return t.v[static_cast<std::size_t>(i - 1)]; }
};

cplx sq(cplx x) { return x * x; }

void fill_even_homog(IntegrandCoeffs& c, const Cell& a) {
  auto w = [&](int i) { return a.w(i); };
  c['A'] = sq(w(1)) + sq(w(2)) + sq(w(3)) + sq(w(4));
  c['B'] = w(1) * w(3) - w(2) * w(4);
  c['C'] = w(1) * w(4) - w(2) * w(3);
  c['D'] = w(3) * w(4) - w(7) * w(8);
  c['E'] = w(3) * w(4) - w(5) * w(6);
}

void fill_odd_homog_s4(IntegrandCoeffs& c, const Cell& a) {
  auto v = [&](int i) { return a.v(i); };
  c['A'] = (v(1) * v(2) + v(3) * v(4)) * (v(5) * v(6) + v(7) * v(8)) + sq(v(1) * v(4)) +
           sq(v(2) * v(3)) + sq(v(5) * v(7)) + sq(v(6) * v(8));
  c['B'] = 2.0 * v(5) * v(6) * v(7) * v(8) - sq(v(1) * v(4)) - sq(v(2) * v(3));
  c['C'] = 2.0 * v(1) * v(2) * v(3) * v(4) - sq(v(5) * v(7)) - sq(v(6) * v(8));
  c['D'] = (v(1) * v(2) - v(7) * v(8)) * (v(5) * v(6) - v(3) * v(4));
  c['E'] = (v(1) * v(2) - v(5) * v(6)) * (v(7) * v(8) - v(3) * v(4));
}

void fill_odd_bipartite(IntegrandCoeffs& c, const Cell& a, const Cell& b) {
  auto v = [&](int i) { return a.v(i); };
  auto V = [&](int i) { return b.v(i); };
  c['A'] = sq(V(8)) * sq(v(6)) + sq(V(7)) * sq(v(5)) + sq(V(5)) * sq(v(7)) + sq(V(6)) * sq(v(8)) +
           sq(V(3)) * sq(v(1)) + sq(V(4)) * sq(v(2)) + sq(V(1)) * sq(v(3)) + sq(V(2)) * sq(v(4)) +
           2.0 * (v(8) * v(7) + v(5) * v(6)) * (V(8) * V(7) + V(5) * V(6));
  c['B'] = (v(1) * V(3) + v(2) * V(4)) * (v(7) * V(5) + v(8) * V(6)) -
           (v(3) * V(1) + v(4) * V(2)) * (v(5) * V(7) + v(6) * V(8));
  c['C'] = (v(3) * V(1) + v(4) * V(2)) * (v(7) * V(5) + v(8) * V(6)) -
           (v(1) * V(3) + v(2) * V(4)) * (v(5) * V(7) + v(6) * V(8));
  c['D'] = v(1) * v(4) * V(2) * V(3) + v(2) * v(3) * V(1) * V(4) - v(6) * v(8) * V(6) * V(8) -
           v(5) * v(7) * V(5) * V(7);
  c['E'] = v(1) * v(3) * V(1) * V(3) + v(2) * v(4) * V(2) * V(4) - v(6) * v(7) * V(5) * V(8) -
           v(5) * v(8) * V(6) * V(7);
  c['F'] = -(v(1) * v(2) - v(5) * v(6)) * (V(1) * V(2) - V(5) * V(6));
  c['G'] = -(v(1) * v(2) - v(7) * v(8)) * (V(1) * V(2) - V(7) * V(8));
}

void fill_odd_homog_e1(IntegrandCoeffs& c, const Cell& a) {
  auto v = [&](int i) { return a.v(i); };
  c['A'] = (v(1) * v(2) + v(3) * v(4)) * (v(5) * v(6) + v(7) * v(8)) +
           (sq(v(1) * v(3)) + sq(v(2) * v(4))) + (sq(v(5) * v(7)) + sq(v(6) * v(8)));
  c['D'] = 2.0 * v(1) * v(2) * v(3) * v(4) - (sq(v(5) * v(7)) + sq(v(6) * v(8)));
  c['E'] = (sq(v(1) * v(3)) + sq(v(2) * v(4))) - 2.0 * v(5) * v(6) * v(7) * v(8);
  c['F'] = (v(1) * v(2) - v(5) * v(6)) * (v(3) * v(4) - v(7) * v(8));
  c['G'] = (v(1) * v(2) - v(7) * v(8)) * (v(3) * v(4) - v(5) * v(6));
}

void fill_odd_column(IntegrandCoeffs& c, const Cell& a, const Cell& b) {
  auto v = [&](int i) { return a.v(i); };
  auto V = [&](int i) { return b.v(i); };
  c['A'] = (sq(v(5)) + sq(v(8))) * (sq(V(6)) + sq(V(7))) +
           (sq(v(6)) + sq(v(7))) * (sq(V(5)) + sq(V(8))) + 2.0 * v(1) * v(3) * V(1) * V(3) +
           2.0 * v(2) * v(4) * V(2) * V(4) + 2.0 * v(5) * v(8) * V(6) * V(7) +
           2.0 * v(6) * v(7) * V(5) * V(8);
  c['B'] = v(1) * v(2) * V(3) * V(4) + v(3) * v(4) * V(1) * V(2) - v(5) * v(6) * V(7) * V(8) -
           v(7) * v(8) * V(5) * V(6) -
           (v(5) * v(7) - v(6) * v(8)) * (V(5) * V(7) - V(6) * V(8));
  c['C'] = V(5) * V(8) * (sq(v(6)) + sq(v(7))) - V(6) * V(7) * (sq(v(5)) + sq(v(8))) -
           v(5) * v(8) * (sq(V(6)) + sq(V(7))) + v(6) * v(7) * (sq(V(5)) + sq(V(8)));
  c['D'] = (v(3) * v(4) - v(5) * v(6)) * (V(5) * V(7) - V(6) * V(8)) -
           (v(5) * v(7) - v(6) * v(8)) * (V(3) * V(4) - V(5) * V(6));
  c['E'] = (v(1) * v(2) - v(5) * v(6)) * (V(5) * V(7) - V(6) * V(8)) -
           (v(5) * v(7) - v(6) * v(8)) * (V(1) * V(2) - V(5) * V(6));
  c['G'] = v(8) * v(5) * V(7) * V(6) + v(7) * v(6) * V(8) * V(5) - v(3) * v(1) * V(3) * V(1) -
           v(4) * v(2) * V(4) * V(2);
  c['H'] = (v(1) * v(2) - v(7) * v(8)) * (V(1) * V(2) - V(7) * V(8));
  c['I'] = (v(1) * v(2) - v(5) * v(6)) * (V(1) * V(2) - V(5) * V(6));
}

void fill_odd_homog_e2(IntegrandCoeffs& c, const Cell& a) {
  auto v = [&](int i) { return a.v(i); };
  c['A'] = 2.0 * (sq(v(5)) + sq(v(8))) * (sq(v(6)) + sq(v(7))) + 2.0 * sq(v(1) * v(3)) +
           2.0 * sq(v(2) * v(4)) + 4.0 * v(5) * v(6) * v(7) * v(8);
  c['B'] = 2.0 * v(1) * v(2) * v(3) * v(4) - sq(v(5) * v(7)) - sq(v(6) * v(8));
  c['G'] = 2.0 * v(5) * v(6) * v(7) * v(8) - sq(v(1) * v(3)) - sq(v(2) * v(4));
  c['H'] = sq(v(1) * v(2) - v(7) * v(8));
  c['I'] = sq(v(1) * v(2) - v(5) * v(6));
}

void fill_even_bipartite(IntegrandCoeffs& c, const Cell& a, const Cell& b) {
  auto w = [&](int i) { return a.w(i); };
  auto W = [&](int i) { return b.w(i); };
  c['A'] = sq(w(1) * W(1)) + sq(w(2) * W(2)) + sq(w(3) * W(3)) + sq(w(4) * W(4)) +
           sq(w(5)) * sq(W(6)) + sq(w(6)) * sq(W(5)) + sq(w(7)) * sq(W(8)) + sq(w(8)) * sq(W(7)) +
           2.0 * (w(5) * w(6) + w(7) * w(8)) * (W(5) * W(6) + W(7) * W(8));
  c['B'] = -(w(1) * W(1) + w(2) * W(2)) * (w(5) * W(6) + w(6) * W(5)) +
           (w(3) * W(3) + w(4) * W(4)) * (w(7) * W(8) + w(8) * W(7));
  c['C'] = -(w(1) * W(1) + w(2) * W(2)) * (w(7) * W(8) + w(8) * W(7)) +
           (w(3) * W(3) + w(4) * W(4)) * (w(5) * W(6) + w(6) * W(5));
  c['D'] = -w(1) * w(4) * W(1) * W(4) - w(2) * w(3) * W(2) * W(3) +
           w(5) * w(7) * W(6) * W(8) + w(6) * w(8) * W(5) * W(7);
  c['E'] = -w(1) * w(3) * W(1) * W(3) - w(2) * w(4) * W(2) * W(4) +
           w(5) * w(8) * W(6) * W(7) + w(6) * w(7) * W(5) * W(8);
  c['F'] = (w(3) * w(4) - w(5) * w(6)) * (W(3) * W(4) - W(5) * W(6));
  c['G'] = (w(3) * w(4) - w(7) * w(8)) * (W(3) * W(4) - W(7) * W(8));
}

void fill_even_homog_e3(IntegrandCoeffs& c, const Cell& a) {
  auto w = [&](int i) { return a.w(i); };
  c['A'] = sq(sq(w(1))) + sq(sq(w(2))) + sq(sq(w(3))) + sq(sq(w(4))) + 4.0 * sq(w(5) * w(6)) +
           4.0 * w(5) * w(6) * w(7) * w(8) + 4.0 * sq(w(7) * w(8));
  c['B'] = 2.0 * w(7) * w(8) * (sq(w(3)) + sq(w(4))) - 2.0 * w(5) * w(6) * (sq(w(1)) + sq(w(2)));
  c['C'] = 2.0 * w(5) * w(6) * (sq(w(3)) + sq(w(4))) - 2.0 * w(7) * w(8) * (sq(w(1)) + sq(w(2)));
  c['D'] = 2.0 * w(5) * w(6) * w(7) * w(8) - sq(w(1) * w(4)) - sq(w(2) * w(3));
  c['E'] = 2.0 * w(5) * w(6) * w(7) * w(8) - sq(w(1) * w(3)) - sq(w(2) * w(4));
  c['F'] = sq(w(3) * w(4) - w(5) * w(6));
  c['G'] = sq(w(3) * w(4) - w(7) * w(8));
}

void fill_even_column(IntegrandCoeffs& c, const Cell& a, const Cell& b) {
  auto w = [&](int i) { return a.w(i); };
  auto W = [&](int i) { return b.w(i); };
  c['A'] = (sq(w(1)) + sq(w(3))) * (sq(W(1)) + sq(W(3))) +
           (sq(w(2)) + sq(w(4))) * (sq(W(2)) + sq(W(4))) +
           2.0 * (w(1) * w(3) * W(1) * W(3) + w(2) * W(2) * w(4) * W(4) +
                  w(5) * w(8) * W(6) * W(7) + w(6) * w(7) * W(5) * W(8));
  c['B'] = -(w(1) * w(4) - w(2) * w(3)) * (W(1) * W(4) - W(2) * W(3)) +
           w(1) * w(2) * W(3) * W(4) + w(3) * w(4) * W(1) * W(2) - w(5) * w(6) * W(7) * W(8) -
           w(7) * w(8) * W(6) * W(5);
  c['C'] = -w(1) * w(3) * (sq(W(1)) + sq(W(3))) - W(1) * W(3) * (sq(w(1)) + sq(w(3))) +
           w(2) * w(4) * (sq(W(2)) + sq(W(4))) + W(2) * W(4) * (sq(w(2)) + sq(w(4)));
  c['D'] = (w(1) * w(4) - w(2) * w(3)) * (W(3) * W(4) - W(5) * W(6)) +
           (W(1) * W(4) - W(2) * W(3)) * (w(3) * w(4) - w(5) * w(6));
  c['E'] = (w(1) * w(4) - w(2) * w(3)) * (W(3) * W(4) - W(7) * W(8)) +
           (W(1) * W(4) - W(2) * W(3)) * (w(3) * w(4) - w(7) * w(8));
  c['G'] = w(1) * w(3) * W(1) * W(3) + w(2) * w(4) * W(2) * W(4) - w(5) * w(8) * W(6) * W(7) -
           w(6) * w(7) * W(5) * W(8);
  c['H'] = -(w(3) * w(4) - w(5) * w(6)) * (W(3) * W(4) - W(5) * W(6));
  c['I'] = -(w(3) * w(4) - w(7) * w(8)) * (W(3) * W(4) - W(7) * W(8));
}

void fill_even_homog_e4(IntegrandCoeffs& c, const Cell& a) {
  auto w = [&](int i) { return a.w(i); };
  c['A'] = sq(sq(w(1)) + sq(w(3))) + 2.0 * sq(w(1) * w(3)) + sq(sq(w(2)) + sq(w(4))) +
           2.0 * sq(w(2) * w(4)) + 4.0 * w(5) * w(6) * w(7) * w(8);
  c['B'] = -sq(w(1) * w(4) - w(2) * w(3)) + 2.0 * w(1) * w(2) * w(3) * w(4) -
           2.0 * w(5) * w(6) * w(7) * w(8);
  c['C'] = -2.0 * w(1) * w(3) * (sq(w(1)) + sq(w(3))) + 2.0 * w(2) * w(4) * (sq(w(2)) + sq(w(4)));
  c['D'] = 2.0 * (w(1) * w(4) - w(2) * w(3)) * (w(3) * w(4) - w(5) * w(6));
  c['E'] = 2.0 * (w(1) * w(4) - w(2) * w(3)) * (w(3) * w(4) - w(7) * w(8));
  c['G'] = sq(w(1) * w(3)) + sq(w(2) * w(4)) - 2.0 * w(5) * w(6) * w(7) * w(8);
  c['H'] = -sq(w(3) * w(4) - w(5) * w(6));
  c['I'] = -sq(w(3) * w(4) - w(7) * w(8));
}

void check_ff_cell(const Weights16& wt, bool even_parity, double tol, const char* which_cell) {
  const double parity_gap = even_parity ? (wt.is_even(tol * (1.0 + wt.max_abs())) ? 0.0 : 1.0)
                                        : (wt.is_odd(tol * (1.0 + wt.max_abs())) ? 0.0 : 1.0);
  if (parity_gap != 0.0)
    throw std::invalid_argument(std::string("integrand family needs pure ") +
                                (even_parity ? "even" : "odd") + " weights in " + which_cell);
  const double res = even_parity ? ff_even_residual(wt) : ff_odd_residual(wt);
  if (res > tol)
    throw std::invalid_argument(std::string("free-fermion residual ") + std::to_string(res) +
                                " above tolerance in " + which_cell);
}

}  // namespace

cplx ff_residual(const Weights16& wt, FFCondition which) {
  const Cell a{wt};
  switch (which) {
    case FFCondition::even:
      return ff_even_lhs(wt);
    case FFCondition::odd:
      return ff_odd_lhs(wt);
    case FFCondition::even_ti:
      return a.w(1) * a.w(2) * a.w(3) * a.w(4) - a.w(5) * a.w(6) * a.w(7) * a.w(8);
    case FFCondition::odd_ti:
      return a.v(1) * a.v(2) * a.v(3) * a.v(4) - a.v(5) * a.v(6) * a.v(7) * a.v(8);
  }
  throw std::invalid_argument("unknown free-fermion condition");
}

std::string family_name(IntegrandFamily f) { return family_info(f).name; }

std::optional<IntegrandFamily> family_from_name(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (int i = 0; i < 10; ++i) {
    const auto f = static_cast<IntegrandFamily>(i);
    if (lower == family_info(f).name) return f;
  }
  return std::nullopt;
}

cplx integrand_value(const IntegrandCoeffs& c, double t1, double t2) {
  const auto cosv = [](double x) { return std::cos(x); };
  switch (c.pattern) {
    case AnglePattern::five_term:
      return c['A'] + 2.0 * c['B'] * cosv(t1) + 2.0 * c['C'] * cosv(t2) +
             2.0 * c['D'] * cosv(t1 - t2) + 2.0 * c['E'] * cosv(t1 + t2);
    case AnglePattern::bipartite:
      return c['A'] + 2.0 * c['B'] * cosv(t1) + 2.0 * c['C'] * cosv(t2) +
             2.0 * c['D'] * cosv(t1 - t2) + 2.0 * c['E'] * cosv(t1 + t2) +
             2.0 * c['F'] * cosv(2 * t1) + 2.0 * c['G'] * cosv(2 * t2);
    case AnglePattern::bipartite_homog:
      return 2.0 * c['A'] + 2.0 * c['D'] * cosv(t1) + 2.0 * c['E'] * cosv(t2) +
             2.0 * c['F'] * cosv(t1 - t2) + 2.0 * c['G'] * cosv(t1 + t2);
    case AnglePattern::column:
      return c['A'] + 2.0 * c['B'] * cosv(t1) + 2.0 * c['C'] * cosv(t2) +
             2.0 * c['D'] * cosv(t1 - t2) + 2.0 * c['E'] * cosv(t1 + t2) +
             2.0 * c['G'] * cosv(2 * t2) + 2.0 * c['H'] * cosv(t1 - 2 * t2) +
             2.0 * c['I'] * cosv(t1 + 2 * t2);
    case AnglePattern::column_homog:
      return c['A'] + 2.0 * c['B'] * cosv(t1) + 2.0 * c['G'] * cosv(t2) +
             2.0 * c['H'] * cosv(t1 - t2) + 2.0 * c['I'] * cosv(t1 + t2);
  }
  throw std::invalid_argument("unknown angle pattern");
}

int homogeneity_degree(IntegrandFamily f) { return family_info(f).degree; }

IntegrandCoeffs integrand_coeffs(const LatticeSpec& spec, IntegrandFamily family, double tol) {
  spec.validate();
  const FamilyInfo& info = family_info(family);
  if (info.staggering == Staggering::homogeneous) {
    if (spec.staggering != Staggering::homogeneous)
      throw std::invalid_argument("family " + std::string(info.name) +
                                  " needs a homogeneous lattice");
  } else if (spec.staggering != info.staggering && spec.staggering != Staggering::homogeneous) {
    throw std::invalid_argument("family " + std::string(info.name) + " needs " +
                                staggering_name(info.staggering) +
                                " (or homogeneous) staggering");
  }
  const Weights16& wa = spec.cellA;
  const Weights16& wb = spec.cellB ? *spec.cellB : spec.cellA;
  check_ff_cell(wa, info.even_parity, tol, "cell A");
  if (info.staggering != Staggering::homogeneous) check_ff_cell(wb, info.even_parity, tol, "cell B");

  IntegrandCoeffs c;
  c.family = family;
  c.pattern = info.pattern;
  c.prefactor = info.prefactor;
  const Cell a{wa}, b{wb};
  switch (family) {
    case IntegrandFamily::even_homog: fill_even_homog(c, a); break;
    case IntegrandFamily::odd_homog_s4: fill_odd_homog_s4(c, a); break;
    case IntegrandFamily::odd_bipartite: fill_odd_bipartite(c, a, b); break;
    case IntegrandFamily::odd_homog_e1: fill_odd_homog_e1(c, a); break;
    case IntegrandFamily::odd_column: fill_odd_column(c, a, b); break;
    case IntegrandFamily::odd_homog_e2: fill_odd_homog_e2(c, a); break;
    case IntegrandFamily::even_bipartite: fill_even_bipartite(c, a, b); break;
    case IntegrandFamily::even_homog_e3: fill_even_homog_e3(c, a); break;
    case IntegrandFamily::even_column: fill_even_column(c, a, b); break;
    case IntegrandFamily::even_homog_e4: fill_even_homog_e4(c, a); break;
  }
  return c;
}

namespace {

double log_integral_mean(const IntegrandCoeffs& c, int grid) {
  const double step = 2.0 * kPi / grid;
  double scale = 0.0;
  for (cplx z : c.coeff) scale += std::abs(z);
  scale = std::max(scale, 1e-300);

  const auto row_sum = [&](int i) {
    const double t1 = (i + 0.5) * step;
    double acc = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double t2 = (j + 0.5) * step;
      const cplx z = integrand_value(c, t1, t2);
      if (std::abs(z.imag()) > 1e-9 * scale)
        throw std::domain_error("integrand not real at theta1=" + std::to_string(t1) +
                                ", theta2=" + std::to_string(t2));
      if (z.real() <= 0.0)
        throw std::domain_error("nonpositive integrand at theta1=" + std::to_string(t1) +
                                ", theta2=" + std::to_string(t2));
      acc += std::log(z.real());
    }
    return acc;
  };

  std::vector<double> rows(static_cast<std::size_t>(grid));
  const int workers = std::min(worker_count(), grid);
  if (workers <= 1) {
    for (int i = 0; i < grid; ++i) rows[static_cast<std::size_t>(i)] = row_sum(i);
  } else {
    std::vector<std::future<void>> jobs;
    jobs.reserve(static_cast<std::size_t>(workers));
    for (int k = 0; k < workers; ++k)
      jobs.push_back(std::async(std::launch::async, [&, k] {
        for (int i = k; i < grid; i += workers) rows[static_cast<std::size_t>(i)] = row_sum(i);
      }));
    for (auto& j : jobs) j.get();
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return total * step * step;
}

}  // namespace

FreeEnergyResult free_energy(const IntegrandCoeffs& c, int grid) {
  if (grid < 4) throw std::invalid_argument("quadrature grid must be at least 4");
  FreeEnergyResult r;
  r.grid = grid;
  r.minus_beta_f = c.prefactor * log_integral_mean(c, grid);
  r.coarse = c.prefactor * log_integral_mean(c, grid / 2);
  r.converged_delta = std::abs(r.minus_beta_f - r.coarse);
  return r;
}

Omega2 omega2(const Weights16& wt, int line) {
  const Cell a{wt};
  auto w = [&](int i) { return a.w(i); };
  if (line == 1) {
    const cplx den = 16.0 * w(5) * w(6) * w(7) * w(8);
    if (den == cplx(0.0)) throw std::domain_error("omega2 line 1 divides by w5 w6 w7 w8 = 0");
    const cplx p1 = (w(1) - w(2) - w(3) - w(4)) * (w(1) - w(2) + w(3) + w(4)) *
                    (w(1) + w(2) - w(3) + w(4)) * (w(1) + w(2) + w(3) - w(4));
    return {1.0 + p1 / den};
  }
  if (line == 2) {
    const cplx den = 16.0 * w(1) * w(2) * w(3) * w(4);
    if (den == cplx(0.0)) throw std::domain_error("omega2 line 2 divides by w1 w2 w3 w4 = 0");
    const cplx p2 = (w(1) + w(2) + w(3) + w(4)) * (w(1) + w(2) - w(3) - w(4)) *
                    (w(1) - w(2) + w(3) - w(4)) * (w(1) - w(2) - w(3) + w(4));
    return {p2 / den};
  }
  throw std::invalid_argument("omega2 line must be 1 or 2");
}

double magnetization(const Omega2& o) {
  if (std::abs(o.value.imag()) > 1e-9 * (1.0 + std::abs(o.value)))
    throw std::domain_error("magnetization needs a real Omega^2");
  const double x = o.value.real();
  if (x <= 1.0) return 0.0;
  return std::pow(1.0 - 1.0 / x, 0.125);
}

OmegaLabel omega2_label(const Omega2& o, double tol) {
  if (std::abs(o.value) <= tol) return OmegaLabel::disorder;
  if (std::abs(o.value - 1.0) <= tol) return OmegaLabel::critical;
  if (std::abs(o.value.imag()) <= tol * std::abs(o.value)) {
    const double x = o.value.real();
    if (x >= 1.0 / tol) return OmegaLabel::ordered;
    if (x <= -1.0 / tol) return OmegaLabel::critical;
  }
  return OmegaLabel::generic;
}

std::string omega_label_name(OmegaLabel l) {
  switch (l) {
    case OmegaLabel::disorder: return "disorder";
    case OmegaLabel::critical: return "critical";
    case OmegaLabel::ordered: return "ordered";
    case OmegaLabel::generic: return "generic";
  }
  throw std::invalid_argument("unknown omega label");
}

std::string critical_family_name(CriticalFamily f) {
  switch (f) {
    case CriticalFamily::odd_homog: return "odd_homog";
    case CriticalFamily::even_bipartite: return "even_bipartite";
    case CriticalFamily::even_column: return "even_column";
  }
  throw std::invalid_argument("unknown critical family");
}

std::optional<CriticalFamily> critical_family_from_name(const std::string& name) {
  for (CriticalFamily f :
       {CriticalFamily::odd_homog, CriticalFamily::even_bipartite, CriticalFamily::even_column})
    if (name == critical_family_name(f)) return f;
  return std::nullopt;
}

std::vector<CriticalCondition> critical_conditions(const LatticeSpec& spec,
                                                   CriticalFamily family) {
  spec.validate();
  const Cell a{spec.cellA}, b{spec.cellB ? *spec.cellB : spec.cellA};
  std::vector<CriticalCondition> out;
  if (family == CriticalFamily::odd_homog) {
    auto v = [&](int i) { return a.v(i); };
    const cplx s12 = v(1) * v(2) + v(3) * v(4);
    const cplx s56 = v(5) * v(6) + v(7) * v(8);
    const cplx d13 = v(1) * v(3) - v(2) * v(4);
    const cplx d57 = v(5) * v(7) - v(6) * v(8);
    out.push_back({"v1v2+v3v4", s12});
    out.push_back({"v5v6+v7v8", s56});
    out.push_back({"v1v3+v2v4", v(1) * v(3) + v(2) * v(4)});
    out.push_back({"v5v7+v6v8", v(5) * v(7) + v(6) * v(8)});
    out.push_back({"(v1v2+v3v4)(v5v6+v7v8)+(v1v3-v2v4)^2+(v5v7-v6v8)^2",
                   s12 * s56 + d13 * d13 + d57 * d57});
    return out;
  }
  if (family == CriticalFamily::even_bipartite) {
    std::array<cplx, 8> u{};
    static constexpr int partner[8] = {1, 2, 3, 4, 6, 5, 8, 7};
    for (int i = 0; i < 8; ++i) u[static_cast<std::size_t>(i)] = a.w(i + 1) * b.w(partner[i]);
    const auto flip_sum = [&](int p, int q) {
      cplx s = 0.0;
      for (int i = 0; i < 8; ++i)
        s += (i == p || i == q) ? -u[static_cast<std::size_t>(i)] : u[static_cast<std::size_t>(i)];
      return s;
    };
    out.push_back({"-u1-u2+u3+u4+u5+u6+u7+u8", flip_sum(0, 1)});
    out.push_back({"u1+u2-u3-u4+u5+u6+u7+u8", flip_sum(2, 3)});
    out.push_back({"u1+u2+u3+u4-u5-u6+u7+u8", flip_sum(4, 5)});
    out.push_back({"u1+u2+u3+u4+u5+u6-u7-u8", flip_sum(6, 7)});
    return out;
  }
  auto w = [&](int i) { return a.w(i); };
  auto W = [&](int i) { return b.w(i); };
  const cplx p13 = (w(1) + w(3)) * (W(1) + W(3));
  const cplx m24 = (w(2) - w(4)) * (W(2) - W(4));
  const cplx p24 = (w(2) + w(4)) * (W(2) + W(4));
  const cplx m13 = (w(1) - w(3)) * (W(1) - W(3));
  out.push_back({"(w1+w3)(W1+W3)+(w2-w4)(W2-W4)", p13 + m24});
  out.push_back({"(w1+w3)(W1+W3)-(w2-w4)(W2-W4)", p13 - m24});
  out.push_back({"(w2+w4)(W2+W4)+(w1-w3)(W1-W3)", p24 + m13});
  out.push_back({"(w2+w4)(W2+W4)-(w1-w3)(W1-W3)", p24 - m13});
  return out;
}

Weights16 ff_even_from_odd(const Weights16& odd, const FFMapSigns& signs, double tol) {
  for (int s : {signs.A, signs.B, signs.C, signs.D})
    if (s != 1 && s != -1) throw std::invalid_argument("mapping signs must be +-1");
  check_ff_cell(odd, false, tol, "odd input");
  const Cell a{odd};
  auto v = [&](int i) { return a.v(i); };
  const cplx B = static_cast<double>(signs.B) * (v(1) * v(2) + v(3) * v(4));
  const cplx C = static_cast<double>(signs.C) * (v(5) * v(7) + v(6) * v(8));
  const cplx Cb = v(5) * v(7) - v(6) * v(8);
  const cplx D = static_cast<double>(signs.D) * (v(1) * v(3) + v(2) * v(4));
  const cplx Db = v(1) * v(3) - v(2) * v(4);
  const cplx E = (v(1) * v(2) - v(3) * v(4)) * (v(5) * v(6) - v(7) * v(8));
  const cplx A = static_cast<double>(signs.A) * std::sqrt(B * B + Cb * Cb + Db * Db);

  Weights16 out;
  out.w[0] = (-A + B + C + D) / 2.0;
  out.w[1] = (A - B + C + D) / 2.0;
  out.w[2] = (A + B - C + D) / 2.0;
  out.w[3] = (A + B + C - D) / 2.0;
  out.w[4] = out.w[5] = std::sqrt((A * B + C * D - E) / 2.0);
  out.w[6] = out.w[7] = std::sqrt((A * B + C * D + E) / 2.0);
  return out;
}

std::vector<BipToColSet> biptocol_conditions(const LatticeSpec& spec) {
  spec.validate();
  const Cell a{spec.cellA}, b{spec.cellB ? *spec.cellB : spec.cellA};
  const auto vdiff = [](const Cell& c, int i, int j, int k, int l) {
    return c.v(i) * c.v(j) - c.v(k) * c.v(l);
  };
  const auto wdiff = [](const Cell& c, int i, int j, int k, int l) {
    return c.w(i) * c.w(j) - c.w(k) * c.w(l);
  };
  return {
      {"v3v4-v7v8", vdiff(a, 3, 4, 7, 8), vdiff(b, 3, 4, 7, 8)},
      {"w3w4-w7w8", wdiff(a, 3, 4, 7, 8), wdiff(b, 3, 4, 7, 8)},
      {"w3w4-w5w6", wdiff(a, 3, 4, 5, 6), wdiff(b, 3, 4, 5, 6)},
  };
}

}  // namespace vertexlab
