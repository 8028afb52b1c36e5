#pragma once
// Exact polynomials over Q: dense univariate and sparse multivariate, plus a
// small expression parser ("3a(a^3+8b)", "(z^2+3)^3", "z/64").

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ambi {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

inline std::string to_string(const Q& q) { return q.str(); }

// ---------------------------------------------------------------- univariate

class UPoly {
 public:
  UPoly() = default;
  UPoly(Q c) {  // NOLINT: constants convert implicitly
    if (c != 0) c_.push_back(std::move(c));
  }
  UPoly(int c) : UPoly(Q(c)) {}  // NOLINT
  explicit UPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<Q>{0, 1}); }
  static UPoly monomial(Q c, int k) {
    std::vector<Q> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool zero() const { return c_.empty(); }
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Q(0); }
  Q lead() const { return zero() ? Q(0) : c_.back(); }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const { return UPoly(0) - *this; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<Q> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly pow(int k) const {
    UPoly r(1), b = *this;
    for (; k > 0; k >>= 1, b *= b)
      if (k & 1) r *= b;
    return r;
  }

  // quotient and remainder
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Q> rem = c_;
    int dd = d.degree();
    std::vector<Q> quo(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
      Q f = rem[static_cast<std::size_t>(k)] / d.lead();
      if (f == 0) continue;
      quo[static_cast<std::size_t>(k - dd)] = f;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

  UPoly monic() const {
    if (zero()) return {};
    UPoly r = *this;
    Q l = lead();
    for (auto& c : r.c_) c /= l;
    return r;
  }
  UPoly derivative() const {
    std::vector<Q> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<int>(i));
    return UPoly(std::move(r));
  }
  Q operator()(const Q& x) const {
    Q r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  // p(q(z))
  UPoly compose(const UPoly& q) const {
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + UPoly(*it);
    return r;
  }

  std::string str(char var = 'z') const {
    if (zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const Q& c = c_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      bool neg = c < 0;
      Q a = neg ? Q(-c) : c;
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      bool unit = a == 1 && k > 0;
      if (!unit) s += a.str();
      if (k > 0) {
        if (!unit) s += '*';
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  std::vector<Q> c_;  // c_[k] is the coefficient of z^k
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun's algorithm: f = lc * prod_m f_m^m with f_m squarefree and coprime.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = f / a, c = df / a;
  for (int m = 1; b.degree() > 0; ++m) {
    UPoly d = c - b.derivative();
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, m);
    b = b / g;
    c = d / g;
  }
  return out;
}

// multiplicity of x = r as a root
inline int root_multiplicity(UPoly f, const Q& r) {
  if (f.zero()) throw std::domain_error("zero polynomial");
  int m = 0;
  UPoly lin(std::vector<Q>{-r, 1});
  while (f(r) == 0) {
    f = f / lin;
    ++m;
  }
  return m;
}

// ------------------------------------------------------------- multivariate

class MPoly {
 public:
  using Exp = std::vector<int>;

  explicit MPoly(std::size_t nvars = 0) : n_(nvars) {}
  static MPoly constant(std::size_t nvars, const Q& c) {
    MPoly p(nvars);
    if (c != 0) p.t_[Exp(nvars, 0)] = c;
    return p;
  }
  static MPoly var(std::size_t nvars, std::size_t i) {
    MPoly p(nvars);
    Exp e(nvars, 0);
    e[i] = 1;
    p.t_[e] = 1;
    return p;
  }

  std::size_t nvars() const { return n_; }
  bool zero() const { return t_.empty(); }
  const std::map<Exp, Q>& terms() const { return t_; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly& operator+=(const MPoly& o) { return add(o, 1); }
  MPoly& operator-=(const MPoly& o) { return add(o, -1); }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check(a, b);
    MPoly r(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Exp e(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        auto& slot = r.t_[e];
        slot += ca * cb;
        if (slot == 0) r.t_.erase(e);
      }
    return r;
  }
  MPoly scaled(const Q& c) const {
    MPoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, v] : t_) r.t_[e] = v * c;
    return r;
  }
  MPoly pow(int k) const {
    MPoly r = constant(n_, 1), b = *this;
    for (; k > 0; k >>= 1, b = b * b)
      if (k & 1) r = r * b;
    return r;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  // leading term in graded-lex order
  std::pair<Exp, Q> lead() const {
    if (zero()) throw std::domain_error("zero polynomial has no leading term");
    const std::pair<const Exp, Q>* best = nullptr;
    auto key = [](const Exp& e) {
      int s = 0;
      for (int x : e) s += x;
      return std::pair{s, e};
    };
    for (const auto& kv : t_)
      if (!best || key(kv.first) > key(best->first)) best = &kv;
    return {best->first, best->second};
  }

  // substitute a univariate polynomial for every variable
  UPoly eval(const std::vector<UPoly>& vals) const {
    if (vals.size() != n_) throw std::invalid_argument("wrong number of values");
    UPoly r;
    for (const auto& [e, c] : t_) {
      UPoly m(c);
      for (std::size_t i = 0; i < n_; ++i) m *= vals[i].pow(e[i]);
      r += m;
    }
    return r;
  }

 private:
  std::size_t n_;
  std::map<Exp, Q> t_;

  static void check(const MPoly& a, const MPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
  }
  MPoly& add(const MPoly& o, int sign) {
    check(*this, o);
    for (const auto& [e, c] : o.t_) {
      auto& slot = t_[e];
      slot += sign > 0 ? c : Q(-c);
      if (slot == 0) t_.erase(e);
    }
    return *this;
  }
};

// ------------------------------------------------------------------ parser

// Variables are single letters; juxtaposition multiplies ("3ab^2(a-b)").
// Division is allowed only by constants.
class PolyParser {
 public:
  PolyParser(std::string_view text, std::string vars) : s_(text), vars_(std::move(vars)) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::string vars_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  MPoly constant(const Q& c) const { return MPoly::constant(vars_.size(), c); }

  MPoly expr() {
    MPoly r(vars_.size());
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        break;
      }
      MPoly t = term();
      r += sign > 0 ? t : t.scaled(-1);
      first = false;
    }
    return r;
  }
  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || vars_.find(c) != std::string::npos;
  }
  MPoly term() {
    MPoly r = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i_;
        r = r * power();
      } else if (c == '/') {
        ++i_;
        MPoly d = power();
        if (d.total_degree() > 0 || d.zero()) fail("division only by nonzero constants");
        r = r.scaled(1 / d.terms().begin()->second);
      } else if (starts_factor(c)) {
        r = r * power();
      } else {
        return r;
      }
    }
  }
  MPoly power() {
    MPoly b = primary();
    if (peek() == '^') {
      ++i_;
      skip();
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (j == i_) fail("exponent expected");
      b = b.pow(std::stoi(std::string(s_.substr(j, i_ - j))));
    }
    return b;
  }
  MPoly primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      MPoly e = expr();
      if (peek() != ')') fail("missing ')'");
      ++i_;
      return e;
    }
    if (c == '-') {
      ++i_;
      return power().scaled(-1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return constant(Q(Z(std::string(s_.substr(j, i_ - j)))));
    }
    auto v = vars_.find(c);
    if (c != '\0' && v != std::string::npos) {
      ++i_;
      return MPoly::var(vars_.size(), v);
    }
    fail(c == '\0' ? "unexpected end" : "unknown symbol '" + std::string(1, c) + "'");
  }
};

inline MPoly parse_mpoly(std::string_view text, const std::string& vars) { return PolyParser(text, vars).parse(); }

inline UPoly parse_upoly(std::string_view text, char var = 'z') {
  return parse_mpoly(text, std::string(1, var)).eval({UPoly::x()});
}

}  // namespace ambi
