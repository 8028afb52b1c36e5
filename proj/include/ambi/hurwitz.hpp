#pragma once
// Hurwitz moves on factorisations of the identity, block systems of the
// monodromy group, and the branching conditions on j_E.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambi/perm.hpp"

namespace ambi {

struct FactorizationTuple {
  int degree = 0;
  std::vector<Perm> sigmas;

  bool valid() const {
    if (sigmas.empty()) return false;
    for (const auto& s : sigmas)
      if (static_cast<int>(s.size()) != degree || !is_permutation(s)) return false;
    return is_identity(product(sigmas, degree)) && is_transitive(sigmas, degree);
  }
  friend bool operator==(const FactorizationTuple&, const FactorizationTuple&) = default;
  friend auto operator<=>(const FactorizationTuple&, const FactorizationTuple&) = default;
};

// i is one-based: acts on (sigma_i, sigma_{i+1}).
inline FactorizationTuple hurwitz_move(FactorizationTuple t, int i, int dir) {
  const int r = static_cast<int>(t.sigmas.size());
  if (i < 1 || i >= r) throw std::out_of_range("hurwitz move index out of range");
  if (dir != 1 && dir != -1) throw std::invalid_argument("direction must be +1 or -1");
  Perm& a = t.sigmas[static_cast<std::size_t>(i - 1)];
  Perm& b = t.sigmas[static_cast<std::size_t>(i)];
  if (dir == 1) {
    Perm na = b, nb = conjugate(a, b);  // b^-1 a b
    a = std::move(na);
    b = std::move(nb);
  } else {
    Perm na = compose(compose(a, b), inverse(a)), nb = a;  // a b a^-1
    a = std::move(na);
    b = std::move(nb);
  }
  return t;
}

// Breadth-first Hurwitz orbit; throws once more than `budget` tuples are seen.
inline std::set<FactorizationTuple> hurwitz_orbit(const FactorizationTuple& t, std::size_t budget = 100000) {
  std::set<FactorizationTuple> seen{t};
  std::vector<FactorizationTuple> work{t};
  const int r = static_cast<int>(t.sigmas.size());
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    for (int i = 1; i < r; ++i)
      for (int dir : {1, -1}) {
        auto nxt = hurwitz_move(cur, i, dir);
        if (seen.insert(nxt).second) {
          if (seen.size() > budget) throw std::runtime_error("hurwitz orbit exceeds node budget");
          work.push_back(std::move(nxt));
        }
      }
  }
  return seen;
}

using BlockSystem = std::vector<std::vector<int>>;  // sorted blocks, sorted by first element

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

inline BlockSystem to_blocks(UnionFind& uf, int d) {
  std::map<int, std::vector<int>> m;
  for (int x = 0; x < d; ++x) m[uf.find(x)].push_back(x);
  BlockSystem out;
  for (auto& [k, v] : m) out.push_back(std::move(v));
  return out;
}

// Finest system of blocks for <gens> in which all pairs `seeds` are joined
// (Atkinson's closure).
inline BlockSystem block_closure(const std::vector<Perm>& gens, int d, const std::vector<std::pair<int, int>>& seeds) {
  UnionFind uf(d);
  std::vector<std::pair<int, int>> queue;
  for (auto [a, b] : seeds)
    if (uf.unite(a, b)) queue.emplace_back(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [a, b] = queue[i];
    for (const auto& g : gens) {
      int ga = g[static_cast<std::size_t>(a)], gb = g[static_cast<std::size_t>(b)];
      int ra = uf.find(ga), rb = uf.find(gb);
      if (ra != rb) {
        uf.unite(ra, rb);
        queue.emplace_back(ga, gb);
      }
    }
  }
  return to_blocks(uf, d);
}

inline bool preserves_each(const Perm& g, const BlockSystem& bs, const std::vector<int>& where) {
  for (const auto& b : bs)
    for (int x : b)
      if (where[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])] != where[static_cast<std::size_t>(x)]) return false;
  return true;
}

inline bool permutes(const Perm& g, const BlockSystem& bs, const std::vector<int>& where) {
  for (const auto& b : bs) {
    int target = where[static_cast<std::size_t>(g[static_cast<std::size_t>(b[0])])];
    for (int x : b)
      if (where[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])] != target) return false;
  }
  return true;
}

inline std::vector<int> block_index(const BlockSystem& bs, int d) {
  std::vector<int> w(static_cast<std::size_t>(d), -1);
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (int x : bs[i]) w[static_cast<std::size_t>(x)] = static_cast<int>(i);
  return w;
}

}  // namespace detail

// Does the system have k blocks, each fixed by sigma_3.. and permuted by sigma_1, sigma_2?
inline bool is_factor_system(const FactorizationTuple& t, const BlockSystem& bs, int k) {
  const int d = t.degree;
  if (static_cast<int>(bs.size()) != k) return false;
  for (const auto& b : bs)
    if (static_cast<int>(b.size()) * k != d) return false;
  auto where = detail::block_index(bs, d);
  if (std::find(where.begin(), where.end(), -1) != where.end()) return false;
  for (std::size_t i = 0; i < t.sigmas.size(); ++i) {
    if (i < 2 ? !detail::permutes(t.sigmas[i], bs, where) : !detail::preserves_each(t.sigmas[i], bs, where))
      return false;
  }
  return true;
}

// All block systems of the group generated by `gens` (including the trivial ones).
inline std::vector<BlockSystem> all_block_systems(const std::vector<Perm>& gens, int d) {
  std::set<BlockSystem> found;
  std::vector<BlockSystem> work;
  BlockSystem singletons;
  for (int x = 0; x < d; ++x) singletons.push_back({x});
  found.insert(singletons);
  work.push_back(singletons);
  for (std::size_t i = 0; i < work.size(); ++i) {
    // join each current system with the minimal block through {0, x}
    BlockSystem cur = work[i];
    auto where = detail::block_index(cur, d);
    for (int x = 1; x < d; ++x) {
      if (where[static_cast<std::size_t>(x)] == where[0]) continue;
      std::vector<std::pair<int, int>> seeds{{0, x}};
      for (const auto& b : cur)
        for (std::size_t j = 1; j < b.size(); ++j) seeds.emplace_back(b[0], b[j]);
      auto next = detail::block_closure(gens, d, seeds);
      if (found.insert(next).second) work.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

// Block search: systems of <sigma_1, ..., sigma_r>-blocks are the
// candidates, since sigma_1 and sigma_2 must permute the blocks too.
inline std::optional<BlockSystem> find_block_factorization(const FactorizationTuple& t, int k) {
  if (k < 1 || t.degree % k) throw std::invalid_argument("k must divide the degree");
  for (const auto& bs : all_block_systems(t.sigmas, t.degree))
    if (is_factor_system(t, bs, k)) return bs;
  return std::nullopt;
}

// Second path, following the cyclic-cover construction: with sigma_2 of
// type (k^h) and the remaining entries transpositions, look for a product
// rho = sigma_2 * tau_{i_1} * ... * tau_{i_{h-1}} that is a d-cycle; the
// orbits of rho^k are then the blocks.
inline std::optional<BlockSystem> find_block_factorization_rho(const FactorizationTuple& t, int k) {
  const int d = t.degree;
  if (k < 1 || d % k) throw std::invalid_argument("k must divide the degree");
  const int h = d / k;
  if (t.sigmas.size() < 2) return std::nullopt;
  std::vector<int> taus;
  for (std::size_t i = 2; i < t.sigmas.size(); ++i) taus.push_back(static_cast<int>(i));
  if (static_cast<int>(taus.size()) < h - 1) return std::nullopt;
  std::vector<int> pick(static_cast<std::size_t>(h - 1));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Perm rho = t.sigmas[1];
    for (int j : pick) rho = compose(rho, t.sigmas[static_cast<std::size_t>(taus[static_cast<std::size_t>(j)])]);
    if (cycle_type(rho) == Partition{d}) {
      Perm rk = identity_perm(d);
      for (int i = 0; i < k; ++i) rk = compose(rk, rho);
      BlockSystem bs = orbits({rk}, d);
      if (is_factor_system(t, bs, k)) return bs;
    }
    // next (h-1)-subset in lexicographic order
    int i = h - 2;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(taus.size()) - (h - 1) + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < h - 1; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return std::nullopt;
}

inline bool divisibility_factor_exists(const Partition& p1, const Partition& p2, int k) {
  auto all_div = [k](const Partition& p) {
    return std::all_of(p.begin(), p.end(), [k](int x) { return x % k == 0; });
  };
  return k >= 1 && all_div(p1) && all_div(p2);
}

struct BranchDataJE {
  int degree = 0;
  std::vector<Partition> two_torsion, three_torsion, poles;
  int n_IVstar = 0;
};

struct RamiReport {
  bool ok = true;
  std::vector<std::string> violations;
};

inline RamiReport rami_check(const BranchDataJE& b, int e2, int e3, int deg_jE) {
  RamiReport r;
  auto fail = [&r](std::string why) {
    r.ok = false;
    r.violations.push_back(std::move(why));
  };
  for (const auto& p : b.two_torsion)
    for (int x : p)
      if (x % 2) { fail("(1) odd part at a 2-torsion point"); goto done1; }
done1:
  {
    int ones = 0;
    bool other = false;
    for (const auto& p : b.three_torsion)
      for (int x : p) {
        if (x % 3 == 1) ++ones;
        else if (x % 3 == 2) other = true;
      }
    if (other || ones != b.n_IVstar) fail("(2) parts at 3-torsion points not 0 mod 3 except #IV* parts 1 mod 3");
  }
  if (e2 >= 2) fail("(3) e2 >= 2");
  if (b.n_IVstar == 0 && e3 >= 2) fail("(4) e3 >= 2 without IV* fibres");
  if (b.n_IVstar <= 2 && e3 >= 3) fail("(5) e3 >= 3");
  if (e3 == 2 && b.n_IVstar < 3 && !(deg_jE % 3 == 1 && b.n_IVstar == 2)) fail("(6) e3 = 2 needs deg j_E = 1 mod 3 and #IV* = 2");
  return r;
}

}  // namespace ambi
