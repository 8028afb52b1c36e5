#pragma once
// Discriminant forms L^v/L, isotropic subgroups and the overlattices they define.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambi/lattice.hpp"

namespace ambi {

inline Q mod_q(const Q& v, long long m) {
  Q t = v / m;
  Z f = numerator(t) / denominator(t);
  if (Q(f) > t) f -= 1;  // floor
  return v - Q(f) * m;
}

// One orthogonal summand of the ambient lattice with its Smith data.
struct DiscriminantPiece {
  std::size_t offset = 0, dim = 0;
  IntMatrix gram;                 // local Gram
  std::vector<std::vector<Z>> U;  // rows of U for the nontrivial invariant factors
  std::vector<long long> orders;  // invariant factors > 1
  std::vector<QVector> lifts;     // local coordinates, generator lifts in L^v
};

class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  explicit FiniteQuadraticForm(std::vector<DiscriminantPiece> pieces) : pieces_(std::move(pieces)) { build(); }

  const IntMatrix& gram() const { return gram_; }
  const std::vector<long long>& orders() const { return orders_; }
  const std::vector<DiscriminantPiece>& pieces() const { return pieces_; }
  int size() const { return size_; }
  std::size_t ngens() const { return orders_.size(); }
  long long exponent() const {
    long long e = 1;
    for (long long d : orders_) e = std::lcm(e, d);
    return e;
  }

  const std::vector<long long>& coords(int idx) const { return coord_tab_[static_cast<std::size_t>(idx)]; }
  int index(const std::vector<long long>& c) const {
    long long idx = 0, mul = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      long long v = ((c[i] % orders_[i]) + orders_[i]) % orders_[i];
      idx += v * mul;
      mul *= orders_[i];
    }
    return static_cast<int>(idx);
  }
  int add(int a, int b) const {
    const auto &x = coords(a), &y = coords(b);
    long long idx = 0, mul = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      long long v = x[i] + y[i];
      if (v >= orders_[i]) v -= orders_[i];
      idx += v * mul;
      mul *= orders_[i];
    }
    return static_cast<int>(idx);
  }
  int neg(int a) const {
    auto x = coords(a);
    for (auto& v : x) v = -v;
    return index(x);
  }
  int times(int a, long long k) const {
    auto x = coords(a);
    for (auto& v : x) v *= k;
    return index(x);
  }
  int order(int a) const {
    int k = 1;
    for (int s = a; s != 0; s = add(s, a)) ++k;
    return k;
  }

  // q in [0, 2), b in [0, 1)
  const Q& q(int a) const { return qtab_[static_cast<std::size_t>(a)]; }
  Q b(int a, int c) const { return Q(b_num(a, c), den_); }
  // b(a, c) = b_num(a, c) / den, with 0 <= b_num < den
  long long b_num(int a, int c) const {
    const auto &x = coords(a), &y = coords(c);
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < y.size(); ++j) s = (s + x[i] * y[j] % den_ * pair_num_[i][j]) % den_;
    }
    return (s + den_) % den_;
  }
  bool orthogonal(int a, int c) const { return b_num(a, c) == 0; }
  bool isotropic(int a) const { return qtab_[static_cast<std::size_t>(a)] == 0; }

  // Lift to L^v in ambient coordinates.
  QVector lift(int a) const {
    auto x = coords(a);
    QVector v(gram_.size(), Q(0));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i])
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += Q(x[i]) * lifts_[i][k];
    return v;
  }

  // Class of a dual vector; throws if v is not in L^v.
  int class_of(const QVector& v) const {
    std::vector<long long> c;
    for (const auto& p : pieces_) {
      std::vector<Z> y(p.dim);
      for (std::size_t i = 0; i < p.dim; ++i) {
        Q s = 0;
        for (std::size_t j = 0; j < p.dim; ++j) s += Q(p.gram[i][j]) * v[p.offset + j];
        if (denominator(s) != 1) throw std::invalid_argument("vector is not in the dual lattice");
        y[i] = numerator(s);
      }
      for (std::size_t r = 0; r < p.orders.size(); ++r) {
        Z s = 0;
        for (std::size_t j = 0; j < p.dim; ++j) s += p.U[r][j] * y[j];
        Z m = s % p.orders[r];
        if (m < 0) m += p.orders[r];
        c.push_back(static_cast<long long>(m));
      }
    }
    return index(c);
  }

  // True iff the coset a + L contains no vector of norm -2 (a != 0).
  bool root_free(int a) const {
    if (coset_min_.empty()) {
      std::vector<Q> tab(static_cast<std::size_t>(size_));
      for (int e = 0; e < size_; ++e) tab[static_cast<std::size_t>(e)] = coset_min_norm(e);
      coset_min_ = std::move(tab);
    }
    return coset_min_[static_cast<std::size_t>(a)] > 2;
  }

  // Minimal norm of the coset a + L on the negated (positive) form, as a sum
  // over orthogonal pieces.
  Q coset_min_norm(int a) const {
    if (!coset_min_.empty()) return coset_min_[static_cast<std::size_t>(a)];
    ensure_min_tables();
    auto x = coords(a);
    Q total = 0;
    std::size_t k = 0;
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      long long idx = 0, mul = 1;
      for (std::size_t r = 0; r < pieces_[p].orders.size(); ++r, ++k) {
        idx += x[k] * mul;
        mul *= pieces_[p].orders[r];
      }
      total += min_tables_[p][static_cast<std::size_t>(idx)];
    }
    return total;
  }

 private:
  std::vector<DiscriminantPiece> pieces_;
  IntMatrix gram_;
  std::vector<long long> orders_;
  std::vector<QVector> lifts_;
  std::vector<std::vector<Q>> pair_;
  std::vector<std::vector<long long>> pair_num_;  // pair_ * den_ reduced mod den_
  long long den_ = 1;
  std::vector<Q> qtab_;
  std::vector<std::vector<long long>> coord_tab_;
  int size_ = 1;
  mutable std::vector<std::vector<Q>> min_tables_;
  mutable std::vector<Q> coset_min_;

  void build() {
    std::size_t n = 0;
    for (const auto& p : pieces_) n = std::max(n, p.offset + p.dim);
    gram_.assign(n, std::vector<long long>(n, 0));
    for (const auto& p : pieces_) {
      for (std::size_t i = 0; i < p.dim; ++i)
        for (std::size_t j = 0; j < p.dim; ++j) gram_[p.offset + i][p.offset + j] = p.gram[i][j];
      for (std::size_t r = 0; r < p.orders.size(); ++r) {
        orders_.push_back(p.orders[r]);
        QVector v(n, Q(0));
        for (std::size_t i = 0; i < p.dim; ++i) v[p.offset + i] = p.lifts[r][i];
        lifts_.push_back(v);
      }
    }
    long long sz = 1;
    for (long long d : orders_) {
      sz *= d;
      if (sz > 5'000'000) throw std::length_error("discriminant group too large to tabulate");
    }
    size_ = static_cast<int>(sz);
    coord_tab_.resize(static_cast<std::size_t>(size_));
    for (int idx = 0; idx < size_; ++idx) {
      std::vector<long long> c(orders_.size());
      int rest = idx;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = rest % orders_[i];
        rest /= static_cast<int>(orders_[i]);
      }
      coord_tab_[static_cast<std::size_t>(idx)] = std::move(c);
    }
    const std::size_t g = orders_.size();
    pair_.assign(g, std::vector<Q>(g, Q(0)));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        Q s = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (lifts_[i][a] == 0) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (gram_[a][b] && lifts_[j][b] != 0) s += lifts_[i][a] * gram_[a][b] * lifts_[j][b];
        }
        pair_[i][j] = s;
      }
    for (const auto& row : pair_)
      for (const auto& v : row) den_ = std::lcm(den_, static_cast<long long>(denominator(v)));
    pair_num_.assign(g, std::vector<long long>(g, 0));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        Q t = mod_q(pair_[i][j], 1) * den_;
        pair_num_[i][j] = static_cast<long long>(numerator(t));
      }
    qtab_.resize(static_cast<std::size_t>(size_));
    for (int a = 0; a < size_; ++a) {
      auto x = coords(a);
      Q s = 0;
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
          if (x[i] && x[j]) s += Q(x[i] * x[j]) * pair_[i][j];
      qtab_[static_cast<std::size_t>(a)] = mod_q(s, 2);
    }
  }

  void ensure_min_tables() const {
    if (!min_tables_.empty() || pieces_.empty()) return;
    for (const auto& p : pieces_) {
      long long m = 1;
      for (long long d : p.orders) m *= d;
      std::vector<Q> tab(static_cast<std::size_t>(m));
      IntMatrix pos = negated(p.gram);
      for (long long idx = 0; idx < m; ++idx) {
        QVector c(p.dim, Q(0));
        long long rest = idx;
        for (std::size_t r = 0; r < p.orders.size(); ++r) {
          long long k = rest % p.orders[r];
          rest /= p.orders[r];
          for (std::size_t i = 0; i < p.dim; ++i) c[i] += Q(k) * p.lifts[r][i];
        }
        ShortVectors sv(pos, c);
        std::optional<Q> best;
        for (Q bound = 2; !best; bound *= 2) best = sv.minimum(bound);
        tab[static_cast<std::size_t>(idx)] = *best;
      }
      min_tables_.push_back(std::move(tab));
    }
  }
};

inline DiscriminantPiece discriminant_piece(const IntMatrix& gram, std::size_t offset = 0) {
  const std::size_t n = gram.size();
  if (determinant(gram) == 0) throw std::invalid_argument("degenerate Gram matrix");
  SmithForm s = smith_normal_form(to_z(gram));
  DiscriminantPiece p;
  p.offset = offset;
  p.dim = n;
  p.gram = gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.diag[i] == 1) continue;
    long long d = static_cast<long long>(s.diag[i]);
    p.orders.push_back(d);
    p.U.push_back(s.U[i]);
    QVector lift(n);
    for (std::size_t k = 0; k < n; ++k) lift[k] = Q(s.V[k][i]) / d;
    p.lifts.push_back(lift);
  }
  return p;
}

inline FiniteQuadraticForm discriminant_form(const IntegerLattice& L) {
  if (L.rank() == 0) return FiniteQuadraticForm(std::vector<DiscriminantPiece>{});
  return FiniteQuadraticForm({discriminant_piece(L.gram)});
}

// D(R) for an ADE sum, split along components so coset minima are additive.
inline FiniteQuadraticForm root_discriminant(const std::vector<RootSymbol>& syms) {
  std::vector<DiscriminantPiece> pieces;
  std::size_t off = 0;
  for (const auto& s : syms) {
    pieces.push_back(discriminant_piece(ade(s).gram, off));
    off += static_cast<std::size_t>(s.n);
  }
  return FiniteQuadraticForm(std::move(pieces));
}

// Component class labels: A_n "k" is k*w_0, D_n "v"/"s"/"c" are w_0, w_{n-2},
// w_{n-1}, E_n "k" is k*w_{n-2}, where w_i is the dual basis of the simple roots.
inline QVector label_lift(const std::vector<RootSymbol>& syms, const std::vector<std::string>& labels) {
  if (labels.size() != syms.size()) throw std::invalid_argument("one label per component expected");
  QVector out;
  for (std::size_t c = 0; c < syms.size(); ++c) {
    const auto& s = syms[c];
    const std::string& lab = labels[c];
    std::size_t node = 0;
    long long k = 1;
    if (s.type == 'D' && (lab == "v" || lab == "s" || lab == "c")) {
      node = lab == "v" ? 0 : lab == "s" ? static_cast<std::size_t>(s.n - 2) : static_cast<std::size_t>(s.n - 1);
    } else {
      std::size_t used = 0;
      try {
        k = std::stoll(lab, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != lab.size()) throw std::invalid_argument("bad class label '" + lab + "' for " + s.str());
      if (s.type == 'E') node = static_cast<std::size_t>(s.n - 2);
    }
    // w_node = G^{-1} e_node
    const IntMatrix g = ade(s).gram;
    const std::size_t n = g.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
      a[i][n] = i == node ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a[i][col] == 0) continue;
        Q f = a[i][col] / a[col][col];
        for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.push_back(Q(k) * a[i][n] / a[i][i]);
  }
  return out;
}

inline int label_class(const FiniteQuadraticForm& F, const std::vector<RootSymbol>& syms,
                       const std::vector<std::string>& labels) {
  return F.class_of(label_lift(syms, labels));
}

// ---------------------------------------------------------------- subgroups

struct IsotropicSubgroup {
  std::vector<int> gens;
  std::vector<int> elements;  // sorted, includes 0
  friend bool operator==(const IsotropicSubgroup& a, const IsotropicSubgroup& b) { return a.elements == b.elements; }
};

inline std::vector<int> subgroup_closure(const FiniteQuadraticForm& F, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = F.add(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool is_isotropic(const FiniteQuadraticForm& F, const std::vector<int>& elements) {
  return std::all_of(elements.begin(), elements.end(), [&](int e) { return F.isotropic(e); });
}

inline IsotropicSubgroup make_subgroup(const FiniteQuadraticForm& F, std::vector<int> gens) {
  return {gens, subgroup_closure(F, gens)};
}

// Invariant factors n_1, n_2, ... with n_{i+1} | n_i; entries 1 are dropped.
inline std::vector<long long> normalize_group_type(std::vector<long long> type) {
  type.erase(std::remove(type.begin(), type.end(), 1LL), type.end());
  std::sort(type.rbegin(), type.rend());
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] < 1) throw std::invalid_argument("group type entries must be positive");
    if (i > 0 && type[i - 1] % type[i] != 0) throw std::invalid_argument("group type is not in invariant-factor form");
  }
  return type;
}

inline constexpr long long kMaxSubgroupOrder = 1024;

namespace detail {

// Subgroups of the given type whose nonzero elements all satisfy keep().
template <class Keep>
std::vector<IsotropicSubgroup> isotropic_search(const FiniteQuadraticForm& F, std::vector<long long> type, Keep keep) {
  type = normalize_group_type(type);
  long long total = 1;
  for (long long t : type) total *= t;
  if (total > kMaxSubgroupOrder) throw std::invalid_argument("subgroup order exceeds the configured bound");
  if (type.empty()) return {make_subgroup(F, {})};
  if (F.size() % total != 0) return {};

  // candidate generators: isotropic, and every nonzero multiple passes keep()
  std::map<long long, std::vector<int>> by_order;
  for (int a = 1; a < F.size(); ++a) {
    if (!F.isotropic(a)) continue;
    int ord = F.order(a);
    bool ok = true;
    for (int k = 1, x = a; k < ord && ok; ++k, x = F.add(x, a)) ok = keep(x);
    if (ok) by_order[ord].push_back(a);
  }

  std::set<std::vector<int>> seen;
  std::vector<IsotropicSubgroup> out;
  std::vector<int> gens, members{0};
  std::vector<char> in_h(static_cast<std::size_t>(F.size()), 0);
  in_h[0] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == type.size()) {
      std::vector<int> elems = members;
      std::sort(elems.begin(), elems.end());
      if (seen.insert(elems).second) out.push_back({gens, elems});
      return;
    }
    for (int c : by_order[type[k]]) {
      if (k > 0 && type[k] == type[k - 1] && c <= gens.back()) continue;
      if (in_h[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int g : gens)
        if (!F.orthogonal(g, c)) {
          ok = false;
          break;
        }
      // direct sum: no nonzero multiple of c lies in H
      for (int j = 1, x = c; j < type[k] && ok; ++j, x = F.add(x, c)) ok = !in_h[static_cast<std::size_t>(x)];
      if (!ok) continue;
      std::vector<int> added;
      for (int h : members)
        for (int j = 1, x = c; j < type[k]; ++j, x = F.add(x, c)) added.push_back(F.add(h, x));
      for (int e : added) ok = ok && keep(e);
      if (ok) {
        for (int e : added) in_h[static_cast<std::size_t>(e)] = 1;
        std::size_t old = members.size();
        members.insert(members.end(), added.begin(), added.end());
        gens.push_back(c);
        rec(k + 1);
        gens.pop_back();
        members.resize(old);
        for (int e : added) in_h[static_cast<std::size_t>(e)] = 0;
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

inline std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& F, std::vector<long long> type) {
  return detail::isotropic_search(F, std::move(type), [](int) { return true; });
}

// Elements of G^perp.
inline std::vector<int> orthogonal_complement(const FiniteQuadraticForm& F, const std::vector<int>& G) {
  std::vector<int> out;
  for (int a = 0; a < F.size(); ++a)
    if (std::all_of(G.begin(), G.end(), [&](int g) { return F.orthogonal(a, g); })) out.push_back(a);
  return out;
}

// Even overlattice R + <lifts of G>, Gram in a Hermite basis.
inline IntegerLattice overlattice(const FiniteQuadraticForm& F, const IsotropicSubgroup& G) {
  if (!is_isotropic(F, G.elements)) throw std::invalid_argument("subgroup is not isotropic");
  const auto& gram = F.gram();
  const std::size_t n = gram.size();
  long long N = F.exponent();
  ZMatrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Z> r(n, 0);
    r[i] = N;
    rows.push_back(r);
  }
  for (int g : G.gens) {
    QVector v = F.lift(g);
    std::vector<Z> r(n);
    for (std::size_t k = 0; k < n; ++k) {
      Q s = v[k] * N;
      if (denominator(s) != 1) throw std::logic_error("lift denominator exceeds exponent");
      r[k] = numerator(s);
    }
    rows.push_back(r);
  }
  ZMatrix B = hermite_basis(rows);
  if (B.size() != n) throw std::logic_error("overlattice basis has wrong rank");
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Z s = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (B[i][a] == 0) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (gram[a][b]) s += B[i][a] * gram[a][b] * B[j][b];
      }
      if (s % (N * N) != 0) throw std::logic_error("overlattice is not integral");
      out[i][j] = static_cast<long long>(s / (N * N));
    }
  IntegerLattice L{out};
  if (!L.even()) throw std::logic_error("overlattice is not even");
  return L;
}

// No nonzero coset of G contains a vector of norm -2.
inline bool adds_no_roots(const FiniteQuadraticForm& F, const IsotropicSubgroup& G) {
  return std::all_of(G.elements.begin(), G.elements.end(), [&](int e) { return e == 0 || F.root_free(e); });
}

inline std::vector<IsotropicSubgroup> admissible_isotropics(const FiniteQuadraticForm& F, const std::vector<long long>& type) {
  return detail::isotropic_search(F, type, [&](int e) { return F.root_free(e); });
}

inline std::vector<IsotropicSubgroup> admissible_isotropics(const std::vector<RootSymbol>& syms,
                                                            const std::vector<long long>& type) {
  return admissible_isotropics(root_discriminant(syms), type);
}

}  // namespace ambi
