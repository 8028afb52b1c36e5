#pragma once
// Permutation triples (mu0, mu1, muInf) with mu0*mu1*muInf = id: subgroups of
// PSL(2,Z) = <x | x^3> * <y | y^2> of finite index, up to conjugacy.

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ambi/perm.hpp"

namespace ambi {

struct PermTriple {
  int degree = 0;
  Perm mu0, mu1, muInf;

  static PermTriple from_pair(Perm a, Perm b) {
    PermTriple t;
    t.degree = static_cast<int>(a.size());
    t.muInf = inverse(compose(a, b));
    t.mu0 = std::move(a);
    t.mu1 = std::move(b);
    return t;
  }
  static PermTriple parse(const std::string& m0, const std::string& m1, int d) {
    return from_pair(parse_cycles(m0, d), parse_cycles(m1, d));
  }
  friend bool operator==(const PermTriple&, const PermTriple&) = default;
  friend auto operator<=>(const PermTriple&, const PermTriple&) = default;
};

struct Passport {
  Partition p0, p1, pInf;
  friend bool operator==(const Passport&, const Passport&) = default;
};

struct Validation {
  bool ok = true;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

inline Validation validate(const PermTriple& t) {
  const auto d = static_cast<std::size_t>(t.degree);
  if (t.degree < 1 || t.mu0.size() != d || t.mu1.size() != d || t.muInf.size() != d)
    return {false, "degree mismatch"};
  if (!is_permutation(t.mu0) || !is_permutation(t.mu1) || !is_permutation(t.muInf))
    return {false, "not a permutation"};
  if (!is_identity(product({t.mu0, t.mu1, t.muInf}, t.degree))) return {false, "product is not the identity"};
  for (int c : cycle_type(t.mu0))
    if (c != 1 && c != 3) return {false, "mu0 has a cycle of length " + std::to_string(c)};
  for (int c : cycle_type(t.mu1))
    if (c != 1 && c != 2) return {false, "mu1 has a cycle of length " + std::to_string(c)};
  if (!is_transitive({t.mu0, t.mu1}, t.degree)) return {false, "not transitive"};
  return {};
}

inline void require_valid(const PermTriple& t) {
  if (auto v = validate(t); !v) throw std::invalid_argument("invalid triple: " + v.reason);
}

inline Passport passport(const PermTriple& t) {
  require_valid(t);
  return {cycle_type(t.mu0), cycle_type(t.mu1), cycle_type(t.muInf)};
}

// (e2, e3)
inline std::pair<int, int> torsion_counts(const PermTriple& t) {
  require_valid(t);
  return {fixed_points(t.mu1), fixed_points(t.mu0)};
}

inline Partition cusp_partition(const PermTriple& t) {
  require_valid(t);
  return cycle_type(t.muInf);
}

inline int genus_from_cycle_counts(int d, int c0, int c1, int cInf) {
  int twice = 2 - 2 * d + (d - c0) + (d - c1) + (d - cInf);  // 2g
  if (twice < 0 || twice % 2) throw std::domain_error("inconsistent data");
  return twice / 2;
}

inline int genus(const PermTriple& t) {
  auto p = passport(t);
  return genus_from_cycle_counts(t.degree, static_cast<int>(p.p0.size()), static_cast<int>(p.p1.size()),
                                 static_cast<int>(p.pInf.size()));
}

namespace detail {
// Relabel by breadth-first discovery from `root`, generators in order (mu0, mu1).
inline std::pair<Perm, Perm> bfs_relabel(const Perm& a, const Perm& b, int root) {
  const int d = static_cast<int>(a.size());
  std::vector<int> label(static_cast<std::size_t>(d), -1), order;
  order.reserve(static_cast<std::size_t>(d));
  label[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const Perm* g : {&a, &b}) {
      int y = (*g)[static_cast<std::size_t>(order[i])];
      if (label[static_cast<std::size_t>(y)] < 0) {
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  if (static_cast<int>(order.size()) != d) throw std::invalid_argument("not transitive");
  Perm ra(static_cast<std::size_t>(d)), rb(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) {
    ra[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = label[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])];
    rb[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = label[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])];
  }
  return {std::move(ra), std::move(rb)};
}

inline bool lex_less(const std::pair<Perm, Perm>& u, const std::pair<Perm, Perm>& v) {
  if (u.first != v.first) return u.first < v.first;
  return u.second < v.second;
}
}  // namespace detail

inline PermTriple canonical_form(const PermTriple& t) {
  if (t.degree < 1 || !is_transitive({t.mu0, t.mu1}, t.degree)) throw std::invalid_argument("not transitive");
  auto best = detail::bfs_relabel(t.mu0, t.mu1, 0);
  for (int r = 1; r < t.degree; ++r) {
    auto cand = detail::bfs_relabel(t.mu0, t.mu1, r);
    if (detail::lex_less(cand, best)) best = std::move(cand);
  }
  return PermTriple::from_pair(std::move(best.first), std::move(best.second));
}

// A conjugator of transitive triples is fixed by the image of one point.
inline bool is_conjugate_direct(const PermTriple& a, const PermTriple& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  const int d = a.degree;
  for (int img = 0; img < d; ++img) {
    std::vector<int> phi(static_cast<std::size_t>(d), -1), used(static_cast<std::size_t>(d), 0), stack{0};
    phi[0] = img;
    used[static_cast<std::size_t>(img)] = 1;
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int g = 0; g < 2 && ok; ++g) {
        const Perm& pa = g ? a.mu1 : a.mu0;
        const Perm& pb = g ? b.mu1 : b.mu0;
        int y = pa[static_cast<std::size_t>(x)];
        int want = pb[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])];
        if (phi[static_cast<std::size_t>(y)] < 0) {
          if (used[static_cast<std::size_t>(want)]) { ok = false; break; }
          phi[static_cast<std::size_t>(y)] = want;
          used[static_cast<std::size_t>(want)] = 1;
          stack.push_back(y);
        } else if (phi[static_cast<std::size_t>(y)] != want) {
          ok = false;
        }
      }
    }
    if (ok && std::find(phi.begin(), phi.end(), -1) == phi.end()) return true;
  }
  return false;
}

inline bool is_conjugate(const PermTriple& a, const PermTriple& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  bool by_form = canonical_form(a) == canonical_form(b);
  if (by_form != is_conjugate_direct(a, b)) throw std::logic_error("conjugacy tests disagree");
  return by_form;
}

struct EnumConstraints {
  int degree = 1;
  std::optional<int> e2, e3, genus;
  std::optional<int> cusp_count;
  std::optional<Partition> cusp_partition;
  bool torsion_free = false;
  unsigned jobs = 1;
};

namespace detail {

inline std::vector<std::pair<int, int>> torsion_choices(const EnumConstraints& c) {
  std::vector<std::pair<int, int>> out;
  const int d = c.degree;
  for (int e2 = d % 2; e2 <= d; e2 += 2)
    for (int e3 = d % 3; e3 <= d; e3 += 3) {
      if (c.torsion_free && (e2 || e3)) continue;
      if (c.e2 && *c.e2 != e2) continue;
      if (c.e3 && *c.e3 != e3) continue;
      out.emplace_back(e2, e3);
    }
  return out;
}

// Search state: mu0 / mu1 partially defined on BFS-discovered labels.
struct SearchState {
  std::vector<int> m0, m0inv, m1;
  int next = 1;  // labels in use
  int x = 0;     // point being processed
  bool did0 = false;
  int fix0 = 0, moved0 = 0, fix1 = 0, moved1 = 0;
};

class TripleSearch {
 public:
  TripleSearch(int d, int e2, int e3, std::optional<int> cusps, std::optional<Partition> shape)
      : d_(d), e2_(e2), e3_(e3), cusps_(cusps), shape_(std::move(shape)) {}

  std::vector<PermTriple> run(unsigned jobs) {
    SearchState s;
    s.m0.assign(static_cast<std::size_t>(d_), -1);
    s.m0inv = s.m0;
    s.m1 = s.m0;
    if (jobs <= 1) {
      std::vector<PermTriple> out;
      expand(s, out, nullptr);
      return out;
    }
    std::vector<SearchState> frontier{s}, grown;
    // widen the frontier breadth-first until there is enough work to share
    while (!frontier.empty() && frontier.size() < 64 * jobs) {
      grown.clear();
      bool progressed = false;
      std::vector<PermTriple> sink;
      for (auto& f : frontier) {
        if (f.x >= d_) { grown.push_back(f); continue; }
        progressed = true;
        expand(f, sink, &grown);
      }
      frontier.swap(grown);
      if (!progressed) break;
    }
    std::vector<PermTriple> out;
    std::mutex mu;
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      std::vector<PermTriple> local;
      for (std::size_t i; (i = cursor++) < frontier.size();) expand(frontier[i], local, nullptr);
      std::lock_guard lock(mu);
      out.insert(out.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int d_, e2_, e3_;
  std::optional<int> cusps_;
  std::optional<Partition> shape_;

  // Closed cycles of x -> m1(m0(x)) must fit the requested cusp data.
  bool cusps_feasible(const SearchState& s, bool complete) const {
    if (!cusps_ && !shape_) return true;
    std::vector<char> seen(static_cast<std::size_t>(d_), 0);
    Partition closed;
    for (int start = 0; start < s.next; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int len = 0, y = start;
      bool open = false;
      std::vector<int> path;
      do {
        path.push_back(y);
        int a = s.m0[static_cast<std::size_t>(y)];
        int b = a < 0 ? -1 : s.m1[static_cast<std::size_t>(a)];
        if (b < 0) { open = true; break; }
        y = b;
        ++len;
      } while (y != start && len <= d_);
      if (open) continue;
      for (int p : path) seen[static_cast<std::size_t>(p)] = 1;
      closed.push_back(len);
    }
    if (cusps_ && static_cast<int>(closed.size()) > *cusps_) return false;
    if (shape_) {
      std::sort(closed.rbegin(), closed.rend());
      std::multiset<int> want(shape_->begin(), shape_->end());
      for (int c : closed) {
        auto it = want.find(c);
        if (it == want.end()) return false;
        want.erase(it);
      }
    }
    if (complete && cusps_ && static_cast<int>(closed.size()) != *cusps_) return false;
    return true;
  }

  void emit(const SearchState& s, std::vector<PermTriple>& out) const {
    if (s.fix0 != e3_ || s.fix1 != e2_) return;
    if (!cusps_feasible(s, true)) return;
    Perm a(s.m0.begin(), s.m0.end()), b(s.m1.begin(), s.m1.end());
    // keep only the labeling that is minimal over all roots
    auto here = std::pair{a, b};
    for (int r = 1; r < d_; ++r)
      if (lex_less(bfs_relabel(a, b, r), here)) return;
    out.push_back(PermTriple::from_pair(std::move(a), std::move(b)));
  }

  // One decision at the current point; children go to `spill` when given.
  void expand(SearchState s, std::vector<PermTriple>& out, std::vector<SearchState>* spill) const {
    if (s.x == s.next) {
      if (s.next == d_) emit(s, out);
      return;  // transitivity: nothing left to discover
    }
    auto child = [&](SearchState c) {
      if (!cusps_feasible(c, false)) return;
      if (spill) spill->push_back(std::move(c));
      else expand(std::move(c), out, nullptr);
    };
    const int x = s.x;
    const auto ux = static_cast<std::size_t>(x);
    if (!s.did0) {
      s.did0 = true;
      if (s.m0[ux] >= 0) return child(std::move(s));
      int w = s.m0inv[ux];
      if (w >= 0) {
        int u = s.m0inv[static_cast<std::size_t>(w)];
        if (u >= 0) {  // u -> w -> x -> u
          s.m0[ux] = u;
          s.m0inv[static_cast<std::size_t>(u)] = x;
          return child(std::move(s));
        }
        // close w -> x -> z -> w
        for (int z = x + 1; z <= s.next && z < d_; ++z) {
          const auto uz = static_cast<std::size_t>(z);
          if (z < s.next && (s.m0[uz] >= 0 || s.m0inv[uz] >= 0)) continue;
          SearchState c = s;
          if (z == c.next) ++c.next;
          c.m0[ux] = z;
          c.m0inv[uz] = x;
          c.m0[uz] = w;
          c.m0inv[static_cast<std::size_t>(w)] = z;
          child(std::move(c));
        }
        return;
      }
      if (s.fix0 < e3_) {
        SearchState c = s;
        c.m0[ux] = x;
        c.m0inv[ux] = x;
        ++c.fix0;
        child(std::move(c));
      }
      // join an open path y -> q as x -> y -> q -> x
      for (int y = 0; y < s.next; ++y) {
        const auto uy = static_cast<std::size_t>(y);
        if (y == x || s.m0inv[uy] >= 0 || s.m0[uy] < 0) continue;
        const int q = s.m0[uy];
        if (q == x || s.m0[static_cast<std::size_t>(q)] >= 0) continue;
        SearchState c = s;
        c.m0[ux] = y;
        c.m0inv[uy] = x;
        c.m0[static_cast<std::size_t>(q)] = x;
        c.m0inv[ux] = q;
        child(std::move(c));
      }
      if (s.moved0 + 3 <= d_ - e3_) {
        for (int y = x + 1; y <= s.next && y < d_; ++y) {
          const auto uy = static_cast<std::size_t>(y);
          if (y < s.next && (s.m0[uy] >= 0 || s.m0inv[uy] >= 0)) continue;
          SearchState c = s;
          if (y == c.next) ++c.next;
          c.m0[ux] = y;
          c.m0inv[uy] = x;
          c.moved0 += 3;
          child(std::move(c));
        }
      }
      return;
    }
    s.did0 = false;
    ++s.x;
    if (s.m1[ux] >= 0) return child(std::move(s));
    if (s.fix1 < e2_) {
      SearchState c = s;
      c.m1[ux] = x;
      ++c.fix1;
      child(std::move(c));
    }
    if (s.moved1 + 2 <= d_ - e2_) {
      for (int y = x + 1; y <= s.next && y < d_; ++y) {
        const auto uy = static_cast<std::size_t>(y);
        if (y < s.next && s.m1[uy] >= 0) continue;
        SearchState c = s;
        if (y == c.next) ++c.next;
        c.m1[ux] = y;
        c.m1[uy] = x;
        c.moved1 += 2;
        child(std::move(c));
      }
    }
  }
};

inline std::optional<int> target_cusps(const EnumConstraints& c, int e2, int e3) {
  std::optional<int> k = c.cusp_count;
  if (c.cusp_partition) {
    int kp = static_cast<int>(c.cusp_partition->size());
    if (k && *k != kp) return -1;
    k = kp;
  }
  if (c.genus) {
    const int d = c.degree;
    int c0 = e3 + (d - e3) / 3, c1 = e2 + (d - e2) / 2;
    int kg = 2 - 2 * *c.genus + d - c0 - c1;
    if (kg < 1 || (k && *k != kg)) return -1;
    k = kg;
  }
  return k;
}

}  // namespace detail

// Conjugacy classes of transitive triples meeting the constraints, each in
// canonical form, sorted.
inline std::vector<PermTriple> enumerate_triples(const EnumConstraints& c) {
  if (c.degree < 1) return {};
  if (c.cusp_partition) {
    int sum = 0;
    for (int p : *c.cusp_partition) sum += p;
    if (sum != c.degree) return {};
  }
  std::vector<PermTriple> out;
  for (auto [e2, e3] : detail::torsion_choices(c)) {
    auto k = detail::target_cusps(c, e2, e3);
    if (k && *k < 0) continue;
    std::optional<Partition> shape = c.cusp_partition;
    if (shape) std::sort(shape->rbegin(), shape->rend());
    auto part = detail::TripleSearch(c.degree, e2, e3, k, shape).run(std::max(1u, c.jobs));
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent path: standard coset tables of <x, y | x^3, y^2>, one per
// subgroup of index d, then reduced to conjugacy classes.
inline std::vector<PermTriple> enumerate_triples_cosets(const EnumConstraints& c) {
  const int d = c.degree;
  constexpr int X = 0, Xi = 1, Y = 2;
  auto inv_col = [](int col) { return col == X ? Xi : col == Xi ? X : Y; };
  using Table = std::vector<std::array<int, 3>>;
  std::set<PermTriple> classes;

  auto deduce = [&](Table& t) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < d; ++a) {
        int b = t[static_cast<std::size_t>(a)][X];
        if (b < 0) continue;
        int e = t[static_cast<std::size_t>(b)][X];
        if (e < 0) continue;
        if (e == a) {  // x-cycle of length two
          if (a != b) return false;
          continue;
        }
        int f = t[static_cast<std::size_t>(e)][X];
        if (f >= 0) {
          if (f != a) return false;
          continue;
        }
        if (t[static_cast<std::size_t>(a)][Xi] >= 0) return false;
        t[static_cast<std::size_t>(e)][X] = a;
        t[static_cast<std::size_t>(a)][Xi] = e;
        changed = true;
      }
    }
    return true;
  };

  std::function<void(Table&, int)> rec = [&](Table& t, int n) {
    int row = -1, col = -1;
    for (int r = 0; r < n && row < 0; ++r)
      for (int k = 0; k < 3; ++k)
        if (t[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] < 0) { row = r; col = k; break; }
    if (row < 0) {
      if (n != d) return;
      Perm a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d));
      for (int r = 0; r < d; ++r) {
        a[static_cast<std::size_t>(r)] = t[static_cast<std::size_t>(r)][X];
        b[static_cast<std::size_t>(r)] = t[static_cast<std::size_t>(r)][Y];
      }
      PermTriple tr = PermTriple::from_pair(a, b);
      auto [e2, e3] = std::pair{fixed_points(b), fixed_points(a)};
      if (c.torsion_free && (e2 || e3)) return;
      if (c.e2 && *c.e2 != e2) return;
      if (c.e3 && *c.e3 != e3) return;
      auto cusp = cycle_type(tr.muInf);
      if (c.cusp_count && static_cast<int>(cusp.size()) != *c.cusp_count) return;
      if (c.cusp_partition) {
        Partition want = *c.cusp_partition;
        std::sort(want.rbegin(), want.rend());
        if (want != cusp) return;
      }
      if (c.genus && genus(tr) != *c.genus) return;
      classes.insert(canonical_form(tr));
      return;
    }
    const int ic = inv_col(col);
    for (int v = 0; v <= n && v < d; ++v) {
      if (v < n && t[static_cast<std::size_t>(v)][static_cast<std::size_t>(ic)] >= 0) continue;
      Table u = t;
      u[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      u[static_cast<std::size_t>(v)][static_cast<std::size_t>(ic)] = row;
      if (!deduce(u)) continue;
      rec(u, v == n ? n + 1 : n);
    }
  };
  if (d >= 1) {
    Table t(static_cast<std::size_t>(d), {-1, -1, -1});
    rec(t, 1);
  }
  return {classes.begin(), classes.end()};
}

// Exhaustive oracle over all pairs (mu0, mu1); only sensible for small d.
inline std::vector<PermTriple> enumerate_triples_brute(const EnumConstraints& c) {
  const int d = c.degree;
  std::vector<Perm> all;
  Perm p = identity_perm(d);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<Perm> order3, order2;
  for (const auto& q : all) {
    Partition ct = cycle_type(q);
    if (std::all_of(ct.begin(), ct.end(), [](int k) { return k == 1 || k == 3; })) order3.push_back(q);
    if (std::all_of(ct.begin(), ct.end(), [](int k) { return k == 1 || k == 2; })) order2.push_back(q);
  }
  std::set<PermTriple> classes;
  for (const auto& a : order3)
    for (const auto& b : order2) {
      if (!is_transitive({a, b}, d)) continue;
      PermTriple t = PermTriple::from_pair(a, b);
      int e2 = fixed_points(b), e3 = fixed_points(a);
      if (c.torsion_free && (e2 || e3)) continue;
      if (c.e2 && *c.e2 != e2) continue;
      if (c.e3 && *c.e3 != e3) continue;
      auto cusp = cycle_type(t.muInf);
      if (c.cusp_count && static_cast<int>(cusp.size()) != *c.cusp_count) continue;
      if (c.cusp_partition) {
        Partition want = *c.cusp_partition;
        std::sort(want.rbegin(), want.rend());
        if (want != cusp) continue;
      }
      if (c.genus && genus(t) != *c.genus) continue;
      classes.insert(canonical_form(t));
    }
  return {classes.begin(), classes.end()};
}

// The orientation-reversed triple (inverse generators), used to compare
// classes that should be mirror images of each other.
inline PermTriple mirror(const PermTriple& t) { return PermTriple::from_pair(inverse(t.mu0), inverse(t.mu1)); }

}  // namespace ambi
