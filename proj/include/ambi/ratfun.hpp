#pragma once
// Rational self-maps of P^1 over Q: branching passports over 0, 1, oo,
// the j-functions of the low-index groups and the Weierstrass families.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambi/perm.hpp"
#include "ambi/poly.hpp"

namespace ambi {

struct RationalMap {
  UPoly num, den;

  // Cancels common factors and makes the denominator monic.
  static RationalMap make(UPoly n, UPoly d) {
    if (d.zero()) throw std::domain_error("identically-zero denominator");
    UPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = n / g;
      d = d / g;
    }
    Q l = d.lead();
    return {n * UPoly(1 / l), d * UPoly(1 / l)};
  }
  static RationalMap identity() { return {UPoly::x(), UPoly(1)}; }
  static RationalMap parse(const std::string& n, const std::string& d) { return make(parse_upoly(n), parse_upoly(d)); }

  int degree() const { return std::max(num.degree(), den.degree()); }
  friend bool operator==(const RationalMap&, const RationalMap&) = default;
  std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

// outer(inner(z)), homogenised so poles of inner are handled exactly.
inline RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const int n = outer.degree();
  auto homog = [&](const UPoly& p) {
    UPoly r;
    for (int k = 0; k <= p.degree(); ++k)
      r += UPoly(p.coeff(k)) * inner.num.pow(k) * inner.den.pow(n - k);
    return r;
  };
  return RationalMap::make(homog(outer.num), homog(outer.den));
}

// j = g2^3 / (g2^3 - 27 g3^2)
inline RationalMap j_from_weierstrass(const UPoly& g2, const UPoly& g3) {
  UPoly c = g2.pow(3);
  return RationalMap::make(c, c - UPoly(27) * g3.pow(2));
}

struct MapPassport {
  Partition p0, p1, pInf;
  friend bool operator==(const MapPassport&, const MapPassport&) = default;
};

namespace detail {
inline Partition fibre_partition(const UPoly& p, int d) {
  Partition out;
  for (const auto& [f, m] : squarefree_decomposition(p))
    for (int i = 0; i < f.degree(); ++i) out.push_back(m);
  if (int deficit = d - p.degree(); deficit > 0) out.push_back(deficit);
  std::sort(out.rbegin(), out.rend());
  return out;
}
}  // namespace detail

inline MapPassport branching_passport(const RationalMap& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("constant map");
  return {detail::fibre_partition(f.num, d), detail::fibre_partition(f.num - f.den, d),
          detail::fibre_partition(f.den, d)};
}

inline int total_ramification(const MapPassport& p, int d) {
  return 3 * d - static_cast<int>(p.p0.size() + p.p1.size() + p.pInf.size());
}

// Belyi: every finite critical point lies over 0, 1 or oo, and the
// ramification over those three values already accounts for 2d - 2.
inline bool is_belyi(const RationalMap& f) {
  const int d = f.degree();
  UPoly w = f.num.derivative() * f.den - f.num * f.den.derivative();
  UPoly rad;
  if (w.degree() > 0) {
    rad = UPoly(1);
    for (const auto& [g, m] : squarefree_decomposition(w)) rad *= g;
  }
  UPoly fibres = f.num * (f.num - f.den) * f.den;
  bool finite_ok = rad.zero() || (fibres % rad).zero();
  return finite_ok && total_ramification(branching_passport(f), d) == 2 * d - 2;
}

// ------------------------------------------------------------- j-functions

struct PolePoint {
  std::optional<Q> z;  // empty: the point at infinity
  int order;
};

struct JTableRow {
  int row;  // 1..5
  std::string group;
  std::string num, den;          // j = num / den
  std::string minus_one_num;     // numerator of j - 1 over the same denominator
  MapPassport passport;
  int e2, e3;
  std::vector<PolePoint> poles;  // stated pole orders, empty when not stated
  std::vector<PolePoint> torsion3, torsion2;  // stated non-critical points over 0 and 1
};

inline const std::vector<JTableRow>& jtable() {
  static const std::vector<JTableRow> rows = {
      {1, "Gamma(2)", "(z^2+3)^3", "z^2(z^2-9)^2", "27(z^2-1)^2",
       {{3, 3}, {2, 2, 2}, {2, 2, 2}}, 0, 0,
       {{Q(0), 2}, {Q(3), 2}, {Q(-3), 2}}, {}, {}},
      {2, "Gamma1(4)", "4(z^2-4z+1)^3", "27z(z-4)", "(z-2)^2(2z^2-8z-1)^2",
       {{3, 3}, {2, 2, 2}, {4, 1, 1}}, 0, 0,
       {{Q(0), 1}, {Q(4), 1}, {std::nullopt, 4}}, {}, {}},
      {3, "Gamma1(3)", "z(z+8)^3", "64(z-1)^3", "(z^2-20z-8)^2",
       {{3, 1}, {2, 2}, {3, 1}}, 0, 1, {}, {{Q(0), 1}}, {}},
      {4, "Gamma1(2)", "(z+3)^3", "27(z-1)^2", "z(z-9)^2",
       {{3}, {2, 1}, {2, 1}}, 1, 0, {}, {}, {{Q(0), 1}}},
      {5, "Gamma^2", "4z", "(z+1)^2", "-(z-1)^2",
       {{1, 1}, {2}, {2}}, 0, 2, {}, {{Q(0), 1}, {std::nullopt, 1}}, {}},
  };
  return rows;
}

inline const JTableRow& jtable_row(int row) {
  for (const auto& r : jtable())
    if (r.row == row) return r;
  throw std::out_of_range("no j-function row " + std::to_string(row));
}

namespace detail {
inline int multiplicity_at(const UPoly& p, const std::optional<Q>& z, int d) {
  return z ? root_multiplicity(p, *z) : d - p.degree();
}
// the listed points are exactly the simple preimages
inline bool simple_points_are(const UPoly& p, int d, const std::vector<PolePoint>& pts) {
  int simple = 0;
  for (const auto& [f, m] : squarefree_decomposition(p))
    if (m == 1) simple += f.degree();
  if (d - p.degree() == 1) ++simple;
  if (simple != static_cast<int>(pts.size())) return false;
  for (const auto& pt : pts)
    if (multiplicity_at(p, pt.z, d) != 1) return false;
  return true;
}
}  // namespace detail

inline bool verify_jtable_row(int row) {
  const auto& r = jtable_row(row);
  UPoly num = parse_upoly(r.num), den = parse_upoly(r.den);
  if (num - den != parse_upoly(r.minus_one_num)) return false;
  RationalMap f = RationalMap::make(num, den);
  if (f.num.degree() + f.den.degree() != num.degree() + den.degree()) return false;  // already coprime
  const int d = f.degree();
  MapPassport p = branching_passport(f);
  if (p != r.passport) return false;
  if (count_parts(p.p1, 1) != r.e2 || count_parts(p.p0, 1) != r.e3) return false;
  if (!is_belyi(f)) return false;
  if (!r.poles.empty()) {
    int total = 0;
    for (const auto& pt : r.poles) {
      if (detail::multiplicity_at(f.den, pt.z, d) != pt.order) return false;
      total += pt.order;
    }
    if (total != d) return false;
  }
  if (!r.torsion3.empty() && !detail::simple_points_are(f.num, d, r.torsion3)) return false;
  if (!r.torsion2.empty() && !detail::simple_points_are(f.num - f.den, d, r.torsion2)) return false;
  return true;
}

// ------------------------------------------------------ Weierstrass families

struct WeierstrassFamily {
  std::string id;     // "i" .. "vi"
  std::string group;
  std::string g2, g3, delta;  // variables a, b, c, d
};

inline const std::vector<WeierstrassFamily>& weierstrass_families() {
  static const std::vector<WeierstrassFamily> rows = {
      {"i", "Gamma(2)", "a^2+3b^2", "b(a^2-b^2)", "a^2(a^2-9b^2)^2"},
      {"ii", "Gamma1(4)", "12(a^2-4ab+b^2)", "4(a-2b)(2a^2-8ab-b^2)", "a(a-4b)b^4"},
      {"iii", "Gamma1(3)", "3a(a^3+8b)", "a^6-20a^3b-8b^2", "(a^3-b)^3b"},
      {"iv", "Gamma1(3)", "3ac^2(a^3+8b)", "c^3(a^6-20a^3b-8b^2)", "c^6(a^3-b)^3b"},
      {"v", "Gamma1(2)", "3a^2+9b", "a(a^2-9b)", "(a^2-b)^2b"},
      {"vi", "Gamma^2", "-12abc^3d^3", "4c^4d^4(a^3c-b^3d)", "(a^3c+b^3d)^2c^8d^8"},
  };
  return rows;
}

struct WeierstrassCheck {
  bool ok = false;
  Q constant;  // g2^3 - 27 g3^2 = constant * delta
};

inline WeierstrassCheck verify_weierstrass_family(const std::string& id) {
  for (const auto& w : weierstrass_families()) {
    if (w.id != id) continue;
    const std::string vars = "abcd";
    MPoly g2 = parse_mpoly(w.g2, vars), g3 = parse_mpoly(w.g3, vars), delta = parse_mpoly(w.delta, vars);
    MPoly lhs = g2.pow(3) - g3.pow(2).scaled(27);
    if (lhs.zero() || delta.zero()) return {false, 0};
    auto [el, cl] = lhs.lead();
    auto [ed, cd] = delta.lead();
    if (el != ed) return {false, 0};
    Q c = cl / cd;
    return {(lhs - delta.scaled(c)).zero(), c};
  }
  throw std::out_of_range("no Weierstrass family '" + id + "'");
}

}  // namespace ambi
