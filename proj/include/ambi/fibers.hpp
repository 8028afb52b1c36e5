#pragma once
// Kodaira fibre types, the Tate dictionary and configuration-level formulas.

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ambi/mat2.hpp"

namespace ambi {

enum class Kodaira { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

struct FiberType {
  Kodaira kind = Kodaira::I;
  int b = 0;  // only meaningful for I_b and I*_b

  friend bool operator==(const FiberType&, const FiberType&) = default;
  friend auto operator<=>(const FiberType&, const FiberType&) = default;

  static FiberType I(int b) { return {Kodaira::I, b}; }
  static FiberType Istar(int b) { return {Kodaira::Istar, b}; }
  static FiberType of(Kodaira k) { return {k, 0}; }

  bool smooth() const { return kind == Kodaira::I && b == 0; }
  bool multiplicative() const { return kind == Kodaira::I && b > 0; }
  bool additive() const { return kind != Kodaira::I; }
  // the fibres counted separately in the dimension formula
  bool star() const {
    return kind == Kodaira::Istar || kind == Kodaira::IVstar || kind == Kodaira::IIIstar ||
           kind == Kodaira::IIstar;
  }

  std::string symbol() const {
    switch (kind) {
      case Kodaira::I: return "I" + std::to_string(b);
      case Kodaira::Istar: return "I" + std::to_string(b) + "*";
      case Kodaira::II: return "II";
      case Kodaira::III: return "III";
      case Kodaira::IV: return "IV";
      case Kodaira::IVstar: return "IV*";
      case Kodaira::IIIstar: return "III*";
      case Kodaira::IIstar: return "II*";
    }
    return "?";
  }

  static FiberType parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("unknown fibre symbol '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    bool star = s.back() == '*';
    std::string_view core = star ? s.substr(0, s.size() - 1) : s;
    if (core.size() >= 2 && core[0] == 'I' && std::isdigit(static_cast<unsigned char>(core[1]))) {
      for (char ch : core.substr(1))
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
      int b = std::stoi(std::string(core.substr(1)));
      return star ? Istar(b) : I(b);
    }
    if (core == "II") return of(star ? Kodaira::IIstar : Kodaira::II);
    if (core == "III") return of(star ? Kodaira::IIIstar : Kodaira::III);
    if (core == "IV") return of(star ? Kodaira::IVstar : Kodaira::IV);
    throw bad();
  }
};

struct FiberInvariants {
  int euler = 0;
  std::string ade;  // empty when the fibre contributes no root summand
  Mat2 monodromy;
};

inline FiberInvariants fiber_invariants(FiberType t) {
  switch (t.kind) {
    case Kodaira::I:
      return {t.b, t.b >= 2 ? "A" + std::to_string(t.b - 1) : "", {1, t.b, 0, 1}};
    case Kodaira::Istar:
      return {6 + t.b, "D" + std::to_string(4 + t.b), {-1, -t.b, 0, -1}};
    case Kodaira::II: return {2, "", {1, 1, -1, 0}};
    case Kodaira::III: return {3, "A1", {0, 1, -1, 0}};
    case Kodaira::IV: return {4, "A2", {0, 1, -1, -1}};
    case Kodaira::IVstar: return {8, "E6", {-1, -1, 1, 0}};
    case Kodaira::IIIstar: return {9, "E7", {0, -1, 1, 0}};
    case Kodaira::IIstar: return {10, "E8", {0, -1, 1, 1}};
  }
  throw std::logic_error("fiber_invariants");
}

struct VanishingOrders {
  int nu2 = 0, nu3 = 0, nuDelta = 0;
};

// One column of the Tate table; `at_least` marks entries of the form "> k".
struct TateColumn {
  FiberType type;
  int nu2;
  bool nu2_more;
  int nu3;
  bool nu3_more;
  int nuDelta;  // -1: I_k / I*_k columns, handled separately
  std::string label;
};

inline const std::vector<TateColumn>& tate_columns() {
  static const std::vector<TateColumn> cols = {
      {FiberType::I(0), 0, true, 0, false, 0, "I0 (j=0)"},
      {FiberType::I(0), 0, false, 0, true, 0, "I0 (j=1)"},
      {FiberType::I(0), 0, false, 0, false, 0, "I0"},
      {FiberType::I(1), 0, false, 0, false, -1, "Ik"},
      {FiberType::Istar(0), 2, true, 3, false, 6, "I0* (j=0)"},
      {FiberType::Istar(0), 2, false, 3, true, 6, "I0* (j=1)"},
      {FiberType::Istar(0), 2, false, 3, false, 6, "I0*"},
      {FiberType::Istar(1), 2, false, 3, false, -1, "Ik*"},
      {FiberType::of(Kodaira::II), 0, true, 1, false, 2, "II"},
      {FiberType::of(Kodaira::III), 1, false, 1, true, 3, "III"},
      {FiberType::of(Kodaira::IV), 1, true, 2, false, 4, "IV"},
      {FiberType::of(Kodaira::IVstar), 2, true, 4, false, 8, "IV*"},
      {FiberType::of(Kodaira::IIIstar), 3, false, 4, true, 9, "III*"},
      {FiberType::of(Kodaira::IIstar), 3, true, 5, false, 10, "II*"},
  };
  return cols;
}

// The j-value refinement of the I0 / I0* columns is collapsed: the match
// returns the plain type.
inline FiberType classify_fiber(VanishingOrders v) {
  if (v.nu2 < 0 || v.nu3 < 0 || v.nuDelta < 0) throw std::invalid_argument("inconsistent orders");
  if (std::min(3 * v.nu2, 2 * v.nu3) >= 12) throw std::invalid_argument("non-minimal Weierstrass datum");
  auto fits = [](int x, int base, bool more) { return more ? x > base : x == base; };
  for (const auto& c : tate_columns()) {
    if (!fits(v.nu2, c.nu2, c.nu2_more) || !fits(v.nu3, c.nu3, c.nu3_more)) continue;
    if (c.nuDelta >= 0) {
      if (v.nuDelta == c.nuDelta) return c.type;
    } else if (c.type.kind == Kodaira::I) {
      if (v.nuDelta > 0) return FiberType::I(v.nuDelta);
    } else if (v.nuDelta > 6) {
      return FiberType::Istar(v.nuDelta - 6);
    }
  }
  throw std::invalid_argument("inconsistent orders");
}

namespace detail {
inline std::int64_t gcd3(std::int64_t x, std::int64_t y, std::int64_t z) {
  return std::gcd(std::gcd(std::llabs(x), std::llabs(y)), std::llabs(z));
}
// n with m conjugate to [[1,n],[0,1]], for m parabolic with trace 2
inline std::int64_t translation(const Mat2& m) {
  std::int64_t g = gcd3(m.a - 1, m.b, m.c);
  std::int64_t sign = m.b != 0 ? (m.b > 0 ? 1 : -1) : (m.c > 0 ? -1 : 1);
  return sign * g;
}
}  // namespace detail

// Exact SL(2,Z) conjugacy class among the standard Kodaira representatives.
// Elliptic classes of equal trace come in inverse pairs; the sign of the
// lower-left entry (rotation sense) separates them.
inline std::optional<FiberType> monodromy_class(const Mat2& m) {
  if (m.det() != 1) return std::nullopt;
  if (m == Mat2{}) return FiberType::I(0);
  if (m == -Mat2{}) return FiberType::Istar(0);
  std::int64_t tr = m.trace();
  if (tr == 2) {
    std::int64_t n = detail::translation(m);
    return n > 0 ? std::optional(FiberType::I(static_cast<int>(n))) : std::nullopt;
  }
  if (tr == -2) {
    std::int64_t n = detail::translation(-m);
    return n > 0 ? std::optional(FiberType::Istar(static_cast<int>(n))) : std::nullopt;
  }
  bool positive = m.c < 0;
  if (tr == 1) return FiberType::of(positive ? Kodaira::II : Kodaira::IIstar);
  if (tr == 0) return FiberType::of(positive ? Kodaira::III : Kodaira::IIIstar);
  if (tr == -1) return FiberType::of(positive ? Kodaira::IV : Kodaira::IVstar);
  return std::nullopt;
}

// With star_hint the matrix is read projectively: if the exact class has the
// wrong star-ness, the class of -m is used instead.
inline std::set<FiberType> fiber_from_monodromy(const Mat2& m, std::optional<bool> star_hint = {}) {
  if (m.det() != 1) throw std::invalid_argument("not in SL(2,Z)");
  std::set<FiberType> out;
  auto exact = monodromy_class(m);
  auto is_star = [](FiberType t) { return t.kind == Kodaira::Istar || t.star(); };
  if (exact && (!star_hint || is_star(*exact) == *star_hint)) out.insert(*exact);
  if (star_hint && out.empty()) {
    auto flipped = monodromy_class(-m);
    if (flipped && is_star(*flipped) == *star_hint) out.insert(*flipped);
  }
  if (out.empty()) throw std::invalid_argument("not a fiber monodromy");
  return out;
}

using FiberConfiguration = std::map<FiberType, int>;

inline FiberConfiguration parse_configuration(std::string_view s) {
  FiberConfiguration c;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find('+', i);
    if (j == std::string_view::npos) j = s.size();
    std::string_view term = s.substr(i, j - i);
    while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (!term.empty()) {
      std::size_t k = 0;
      while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
      int mult = k ? std::stoi(std::string(term.substr(0, k))) : 1;
      FiberType t = FiberType::parse(term.substr(k));
      if (!t.smooth() && mult > 0) c[t] += mult;
    } else if (s.find_first_not_of(' ') != std::string_view::npos) {
      throw std::invalid_argument("empty term in configuration '" + std::string(s) + "'");
    }
    i = j + 1;
  }
  return c;
}

inline std::string format_configuration(const FiberConfiguration& c) {
  std::string s;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (!s.empty()) s += "+";
    if (it->second != 1) s += std::to_string(it->second);
    s += it->first.symbol();
  }
  return s;
}

inline int euler_sum(const FiberConfiguration& c) {
  int e = 0;
  for (const auto& [t, n] : c) e += n * fiber_invariants(t).euler;
  return e;
}

inline int trivial_rank(const FiberConfiguration& c) {
  int r = 2;
  for (const auto& [t, n] : c) {
    int e = fiber_invariants(t).euler;
    if (t.multiplicative()) r += n * (e - 1);
    else if (t.additive()) r += n * (e - 2);
  }
  return r;
}

inline bool non_isotrivial(const FiberConfiguration& c) {
  for (const auto& [t, n] : c)
    if (n > 0 && (t.multiplicative() || (t.kind == Kodaira::Istar && t.b > 0))) return true;
  return false;
}

inline int config_dimension(const FiberConfiguration& c) {
  if (!non_isotrivial(c)) throw std::invalid_argument("formula inapplicable");
  int singular = 0, star = 0, small_additive = 0;
  for (const auto& [t, n] : c) {
    singular += n;
    if (t.star()) star += n;
    if (t.kind == Kodaira::II || t.kind == Kodaira::III || t.kind == Kodaira::IV) small_additive += n;
  }
  int dim = singular + star - 6;
  int via_rank = 20 - trivial_rank(c) - small_additive;
  if (dim != via_rank)
    throw std::domain_error("dimension formulas disagree (" + std::to_string(dim) + " vs " +
                            std::to_string(via_rank) + "); Euler sum is " + std::to_string(euler_sum(c)));
  return dim;
}

inline bool ambi_typical_filter(const FiberConfiguration& c, bool contains_minus_id) {
  for (const auto& [t, n] : c) {
    if (n == 0) continue;
    switch (t.kind) {
      case Kodaira::II:
      case Kodaira::III:
      case Kodaira::IV:
      case Kodaira::IIstar:
      case Kodaira::IIIstar: return false;
      case Kodaira::IVstar:
        if (contains_minus_id) return false;
        break;
      case Kodaira::Istar:
        if (contains_minus_id && t.b > 0) return false;
        break;
      case Kodaira::I: break;
    }
  }
  return true;
}

}  // namespace ambi
