#pragma once
// Integral lattices given by Gram matrices: ADE root lattices (negative
// definite), Smith and Hermite normal forms, and Fincke-Pohst enumeration.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambi/poly.hpp"  // Q, Z

namespace ambi {

using IntMatrix = std::vector<std::vector<long long>>;
using ZMatrix = std::vector<std::vector<Z>>;
using QVector = std::vector<Q>;

inline ZMatrix to_z(const IntMatrix& m) {
  ZMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
  return r;
}

inline ZMatrix z_identity(std::size_t n) {
  ZMatrix r(n, std::vector<Z>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b) {
  if (a.empty()) return {};
  ZMatrix r(a.size(), std::vector<Z>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

// Bareiss fraction-free determinant.
inline Z determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  ZMatrix a = to_z(m);
  Z prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// ----------------------------------------------------------- root lattices

struct RootSymbol {
  char type = 'A';  // 'A', 'D', 'E'
  int n = 1;
  friend bool operator==(const RootSymbol&, const RootSymbol&) = default;
  friend auto operator<=>(const RootSymbol&, const RootSymbol&) = default;
  std::string str() const { return std::string(1, type) + std::to_string(n); }
};

inline void check_symbol(const RootSymbol& s) {
  bool ok = (s.type == 'A' && s.n >= 1) || (s.type == 'D' && s.n >= 4) || (s.type == 'E' && s.n >= 6 && s.n <= 8);
  if (!ok) throw std::invalid_argument("invalid root symbol " + s.str());
}

// "D4+2A6+A1" -> {D4, A6, A6, A1}; blanks and an empty string are allowed.
inline std::vector<RootSymbol> parse_root_lattice(std::string_view text) {
  std::vector<RootSymbol> out;
  std::size_t i = 0;
  auto spaces = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto number = [&](int fallback) {
    std::size_t j = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return j == i ? fallback : std::stoi(std::string(text.substr(j, i - j)));
  };
  auto bad = [&](const char* why) { return std::invalid_argument(std::string(why) + " in '" + std::string(text) + "'"); };
  spaces();
  if (i == text.size()) return out;
  while (true) {
    int mult = number(1);
    spaces();
    if (i >= text.size() || std::string_view("ADE").find(text[i]) == std::string_view::npos) throw bad("bad root lattice");
    char t = text[i++];
    if (i < text.size() && text[i] == '_') ++i;
    int n = number(-1);
    if (n < 0) throw bad("missing rank");
    RootSymbol s{t, n};
    check_symbol(s);
    for (int k = 0; k < mult; ++k) out.push_back(s);
    spaces();
    if (i == text.size()) break;
    if (text[i++] != '+') throw bad("expected '+'");
    spaces();
  }
  return out;
}

inline std::string format_root_lattice(const std::vector<RootSymbol>& syms) {
  std::string s;
  for (std::size_t i = 0; i < syms.size();) {
    std::size_t j = i;
    while (j < syms.size() && syms[j] == syms[i]) ++j;
    if (!s.empty()) s += "+";
    if (j - i > 1) s += std::to_string(j - i);
    s += syms[i].str();
    i = j;
  }
  return s;
}

inline int rank_of(const std::vector<RootSymbol>& syms) {
  int r = 0;
  for (const auto& s : syms) r += s.n;
  return r;
}

// Edges of the Dynkin diagram. A_n: path; D_n: path 0..n-2 with n-1 attached
// to n-3; E_n: path 0..n-2 with n-1 attached to 2.
inline std::vector<std::pair<int, int>> dynkin_edges(const RootSymbol& s) {
  check_symbol(s);
  std::vector<std::pair<int, int>> e;
  int path = s.type == 'A' ? s.n : s.n - 1;
  for (int i = 0; i + 1 < path; ++i) e.emplace_back(i, i + 1);
  if (s.type == 'D') e.emplace_back(s.n - 3, s.n - 1);
  if (s.type == 'E') e.emplace_back(2, s.n - 1);
  return e;
}

struct IntegerLattice {
  IntMatrix gram;
  int rank() const { return static_cast<int>(gram.size()); }
  bool even() const {
    for (std::size_t i = 0; i < gram.size(); ++i)
      if (gram[i][i] % 2) return false;
    return true;
  }
};

inline IntegerLattice ade(const RootSymbol& s) {
  IntMatrix g(static_cast<std::size_t>(s.n), std::vector<long long>(static_cast<std::size_t>(s.n), 0));
  for (int i = 0; i < s.n; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -2;
  for (auto [a, b] : dynkin_edges(s)) {
    g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    g[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  return {g};
}

inline IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.gram.size();
  IntMatrix g(n, std::vector<long long>(n, 0));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.gram.size(); ++i)
      for (std::size_t j = 0; j < p.gram.size(); ++j) g[off + i][off + j] = p.gram[i][j];
    off += p.gram.size();
  }
  return {g};
}

inline IntegerLattice root_lattice(const std::vector<RootSymbol>& syms) {
  std::vector<IntegerLattice> parts;
  for (const auto& s : syms) parts.push_back(ade(s));
  return direct_sum(parts);
}

// Closed forms used as independent checks.
inline long long ade_root_count(const RootSymbol& s) {
  check_symbol(s);
  if (s.type == 'A') return 1LL * s.n * (s.n + 1);
  if (s.type == 'D') return 2LL * s.n * (s.n - 1);
  return s.n == 6 ? 72 : s.n == 7 ? 126 : 240;
}
inline long long ade_discriminant_order(const RootSymbol& s) {
  check_symbol(s);
  if (s.type == 'A') return s.n + 1;
  if (s.type == 'D') return 4;
  return s.n == 6 ? 3 : s.n == 7 ? 2 : 1;
}

// ------------------------------------------------------------ normal forms

struct SmithForm {
  ZMatrix U, V;        // D = U * A * V
  std::vector<Z> diag;  // d_1 | d_2 | ... (nonnegative)
};

inline SmithForm smith_normal_form(const ZMatrix& A) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  ZMatrix D = A, U = z_identity(m), V = z_identity(n);
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(D[a], D[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& r : D) std::swap(r[a], r[b]);
    for (auto& r : V) std::swap(r[a], r[b]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Z& f) {  // row_dst += f row_src
    for (std::size_t j = 0; j < n; ++j) D[dst][j] += f * D[src][j];
    for (std::size_t j = 0; j < m; ++j) U[dst][j] += f * U[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Z& f) {
    for (std::size_t i = 0; i < m; ++i) D[i][dst] += f * D[i][src];
    for (std::size_t i = 0; i < n; ++i) V[i][dst] += f * V[i][src];
  };
  const std::size_t r = std::min(m, n);
  for (std::size_t k = 0; k < r; ++k) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (D[i][j] != 0 && (!piv || abs(D[i][j]) < abs(D[piv->first][piv->second]))) piv = {i, j};
      if (!piv) goto done;
      swap_rows(k, piv->first);
      swap_cols(k, piv->second);
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        Z q = D[i][k] / D[k][k];
        if (q != 0) add_row(i, k, -q);
        if (D[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        Z q = D[k][j] / D[k][k];
        if (q != 0) add_col(j, k, -q);
        if (D[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row k and retry
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (D[i][j] % D[k][k] != 0) {
            add_row(k, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[k][k] < 0) {
      for (std::size_t j = 0; j < n; ++j) D[k][j] = -D[k][j];
      for (std::size_t j = 0; j < m; ++j) U[k][j] = -U[k][j];
    }
  }
done:
  SmithForm s{U, V, {}};
  for (std::size_t k = 0; k < r; ++k) s.diag.push_back(D[k][k]);
  return s;
}

// Row Hermite normal form; returns the nonzero rows (a basis of the row lattice).
inline ZMatrix hermite_basis(ZMatrix A) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // gcd-combine all entries of this column into A[row]
    for (std::size_t i = row + 1; i < m; ++i) {
      while (A[i][col] != 0) {
        Z q = A[row][col] / A[i][col];
        for (std::size_t j = col; j < n; ++j) A[row][j] -= q * A[i][j];
        std::swap(A[row], A[i]);
      }
    }
    if (A[row][col] == 0) continue;
    if (A[row][col] < 0)
      for (std::size_t j = col; j < n; ++j) A[row][j] = -A[row][j];
    for (std::size_t i = 0; i < row; ++i) {
      Z q = A[i][col] / A[row][col];
      if (A[i][col] - q * A[row][col] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = col; j < n; ++j) A[i][j] -= q * A[row][j];
    }
    ++row;
  }
  A.resize(row);
  return A;
}

// --------------------------------------------------------- short vectors

// Vectors x in Z^n with (x + c)^T A (x + c) <= bound, for A positive definite.
// Pruning runs in long double with slack; every candidate is checked exactly.
class ShortVectors {
 public:
  ShortVectors(const IntMatrix& A, QVector center = {}) : A_(A), n_(A.size()), c_(std::move(center)) {
    if (c_.empty()) c_.assign(n_, Q(0));
    if (c_.size() != n_) throw std::invalid_argument("center dimension");
    // exact LDL^T: q_i and mu_ij (j > i)
    std::vector<std::vector<Q>> a(n_, std::vector<Q>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) a[i][j] = A[i][j];
    qd_.assign(n_, 0);
    mu_.assign(n_, std::vector<long double>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i][i] <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
      for (std::size_t j = i + 1; j < n_; ++j) {
        Q f = a[i][j] / a[i][i];
        mu_[i][j] = static_cast<long double>(f);
        for (std::size_t k = j; k < n_; ++k) a[j][k] -= f * a[i][k];
        for (std::size_t k = j; k < n_; ++k) a[k][j] = a[j][k];
      }
      qd_[i] = static_cast<long double>(a[i][i]);
    }
    cd_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) cd_[i] = static_cast<long double>(c_[i]);
  }

  // Calls visit(x, norm) for every vector with norm <= bound.
  template <class Visit>
  void enumerate(const Q& bound, Visit&& visit) const {
    if (n_ == 0) {
      if (bound >= 0) visit(std::vector<long long>{}, Q(0));
      return;
    }
    std::vector<long long> x(n_, 0);
    std::vector<long double> z(n_, 0);
    rec(static_cast<int>(n_) - 1, static_cast<long double>(bound) + 1e-9L, bound, x, z, visit);
  }

  Q norm(const std::vector<long long>& x) const {
    Q s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) s += (Q(x[i]) + c_[i]) * A_[i][j] * (Q(x[j]) + c_[j]);
    return s;
  }

  std::optional<Q> minimum(Q bound) const {
    std::optional<Q> best;
    enumerate(bound, [&](const std::vector<long long>&, const Q& nrm) {
      if (!best || nrm < *best) best = nrm;
    });
    return best;
  }

 private:
  IntMatrix A_;
  std::size_t n_;
  QVector c_;
  std::vector<long double> qd_, cd_;
  std::vector<std::vector<long double>> mu_;

  template <class Visit>
  void rec(int i, long double rem, const Q& bound, std::vector<long long>& x, std::vector<long double>& z,
           Visit& visit) const {
    const auto ui = static_cast<std::size_t>(i);
    long double s = 0;
    for (std::size_t j = ui + 1; j < n_; ++j) s += mu_[ui][j] * z[j];
    long double r = std::sqrt(std::max(0.0L, rem / qd_[ui])) + 1e-9L;
    // t = x_i + c_i + s must satisfy |t| <= r
    long long lo = static_cast<long long>(std::ceil(-r - s - cd_[ui]));
    long long hi = static_cast<long long>(std::floor(r - s - cd_[ui]));
    for (long long v = lo; v <= hi; ++v) {
      x[ui] = v;
      z[ui] = static_cast<long double>(v) + cd_[ui];
      long double t = z[ui] + s;
      long double left = rem - qd_[ui] * t * t;
      if (left < -1e-9L) continue;
      if (i == 0) {
        Q nrm = norm(x);
        if (nrm <= bound) visit(x, nrm);
      } else {
        rec(i - 1, left, bound, x, z, visit);
      }
    }
    x[ui] = 0;
    z[ui] = 0;
  }
};

inline IntMatrix negated(const IntMatrix& g) {
  IntMatrix r = g;
  for (auto& row : r)
    for (auto& v : row) v = -v;
  return r;
}

// Number of vectors of norm -2 in a negative definite even lattice.
inline long long root_count(const IntegerLattice& L) {
  long long n = 0;
  if (L.rank() == 0) return 0;
  ShortVectors sv(negated(L.gram));
  sv.enumerate(Q(2), [&](const std::vector<long long>&, const Q& nrm) { n += nrm == 2; });
  return n;
}

}  // namespace ambi
