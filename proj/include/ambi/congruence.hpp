#pragma once
// Congruence subgroups of SL(2,Z) through their images in SL(2,Z/N).

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ambi/mat2.hpp"

namespace ambi {

inline constexpr int kMaxLevel = 24;

enum class CongKind { Gamma, Gamma1, Gamma0, GammaM };

struct CongruenceSpec {
  CongKind kind = CongKind::Gamma;
  int n = 1;
  int m = 1;  // only for GammaM: Gamma(m) ∩ Gamma1(n)

  std::string name() const {
    switch (kind) {
      case CongKind::Gamma: return "Gamma(" + std::to_string(n) + ")";
      case CongKind::Gamma1: return "Gamma1(" + std::to_string(n) + ")";
      case CongKind::Gamma0: return "Gamma0(" + std::to_string(n) + ")";
      case CongKind::GammaM: return "Gamma_" + std::to_string(m) + "(" + std::to_string(n) + ")";
    }
    return "?";
  }
};

inline void check_spec(const CongruenceSpec& g) {
  if (g.n < 1) throw std::invalid_argument("level must be positive");
  if (g.kind == CongKind::GammaM && (g.m < 1 || g.n % g.m != 0)) throw std::invalid_argument("m must divide n");
}

namespace detail {
inline bool cong(std::int64_t x, std::int64_t r, std::int64_t n) { return ((x - r) % n + n) % n == 0; }
}  // namespace detail

inline bool in_congruence(const Mat2& M, const CongruenceSpec& g) {
  if (M.det() != 1) throw std::invalid_argument("det != 1");
  check_spec(g);
  using detail::cong;
  auto principal = [&](std::int64_t n) {
    return cong(M.a, 1, n) && cong(M.d, 1, n) && cong(M.b, 0, n) && cong(M.c, 0, n);
  };
  switch (g.kind) {
    case CongKind::Gamma: return principal(g.n);
    case CongKind::Gamma1: return cong(M.a, 1, g.n) && cong(M.d, 1, g.n) && cong(M.c, 0, g.n);
    case CongKind::Gamma0: return cong(M.c, 0, g.n);
    case CongKind::GammaM:
      return principal(g.m) && cong(M.a, 1, g.n) && cong(M.d, 1, g.n) && cong(M.c, 0, g.n);
  }
  return false;
}

// Subgroup closure inside SL(2,Z/n); generators are reduced first.
inline std::set<Mat2> closure_mod(const std::vector<Mat2>& gens, int n) {
  std::set<Mat2> seen{Mat2{}.mod(n)};
  std::vector<Mat2> work{Mat2{}.mod(n)};
  std::vector<Mat2> red;
  for (const auto& g : gens) red.push_back(g.mod(n));
  while (!work.empty()) {
    Mat2 x = work.back();
    work.pop_back();
    for (const auto& g : red) {
      Mat2 y = (x * g).mod(n);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return seen;
}

inline const std::set<Mat2>& sl2_mod(int n) {
  if (n < 1 || n > kMaxLevel) throw std::out_of_range("level " + std::to_string(n) + " exceeds configured bound");
  static std::map<int, std::set<Mat2>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, closure_mod({kS, kT}, n)).first;
  return it->second;
}

// A subgroup given by a membership predicate on residues mod `level`.
struct LevelSubgroup {
  std::string name;
  int level = 1;
  std::function<bool(const Mat2&)> member;  // receives the matrix reduced mod level
};

inline std::set<Mat2> residues(const LevelSubgroup& h) {
  std::set<Mat2> out;
  for (const auto& m : sl2_mod(h.level))
    if (h.member(m)) out.insert(m);
  return out;
}

namespace detail {
// predicates are evaluated on reduced residues, whose determinant is 1 only mod n
inline bool residue_member(const CongruenceSpec& g, const Mat2& r) {
  using detail::cong;
  const std::int64_t n = g.n;
  auto principal = [&](std::int64_t k) {
    return cong(r.a, 1, k) && cong(r.d, 1, k) && cong(r.b, 0, k) && cong(r.c, 0, k);
  };
  switch (g.kind) {
    case CongKind::Gamma: return principal(n);
    case CongKind::Gamma1: return cong(r.a, 1, n) && cong(r.d, 1, n) && cong(r.c, 0, n);
    case CongKind::Gamma0: return cong(r.c, 0, n);
    case CongKind::GammaM: return principal(g.m) && cong(r.a, 1, n) && cong(r.d, 1, n) && cong(r.c, 0, n);
  }
  return false;
}
}  // namespace detail

inline LevelSubgroup as_level_subgroup(const CongruenceSpec& g) {
  check_spec(g);
  return {g.name(), g.n, [g](const Mat2& r) { return detail::residue_member(g, r); }};
}

inline long index_in_sl2(const LevelSubgroup& h) {
  auto all = sl2_mod(h.level).size();
  auto sub = residues(h).size();
  if (sub == 0 || all % sub) throw std::logic_error("predicate is not a subgroup");
  return static_cast<long>(all / sub);
}

inline bool contains_minus_id(const LevelSubgroup& h) { return h.member((-Mat2{}).mod(h.level)); }

inline long index_in_psl2(const LevelSubgroup& h) {
  long i = index_in_sl2(h);
  return contains_minus_id(h) ? i : i / 2;
}

inline long index_in_sl2(const CongruenceSpec& g) { return index_in_sl2(as_level_subgroup(g)); }
inline long index_in_psl2(const CongruenceSpec& g) { return index_in_psl2(as_level_subgroup(g)); }
inline bool contains_minus_id(const CongruenceSpec& g) {
  check_spec(g);
  return in_congruence(-Mat2{}, g);
}

struct MatrixGroupGens {
  std::vector<Mat2> gens;
  std::optional<LevelSubgroup> predicate;
};

// Schreier generators of the preimage in SL(2,Z) of a residue subgroup,
// from a breadth-first transversal over S and T.
inline MatrixGroupGens schreier_generators(const LevelSubgroup& h) {
  const int n = h.level;
  const auto sub = residues(h);
  auto key = [&](const Mat2& g) {
    Mat2 r = g.mod(n), best = r;
    bool first = true;
    for (const auto& x : sub) {
      Mat2 y = (x * r).mod(n);
      if (first || y < best) best = y;
      first = false;
    }
    return best;
  };
  std::map<Mat2, Mat2> rep;  // coset key -> integral representative
  std::vector<Mat2> order{Mat2{}};
  rep.emplace(key(Mat2{}), Mat2{});
  std::set<Mat2> gens;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Mat2& s : {kS, kT}) {
      Mat2 rs = order[i] * s;
      Mat2 k = key(rs);
      auto it = rep.find(k);
      if (it == rep.end()) {
        rep.emplace(k, rs);
        order.push_back(rs);
        continue;
      }
      Mat2 g = rs * it->second.inv();
      if (g != Mat2{}) gens.insert(g);
    }
  }
  return {std::vector<Mat2>(gens.begin(), gens.end()), h};
}

// Largest (n, m), n first, with every generator in Gamma(m) ∩ Gamma1(n).
inline std::pair<int, int> mw_torsion(const MatrixGroupGens& G, int n_max = 12) {
  std::pair<int, int> best{1, 1};
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n; ++m) {
      if (n % m) continue;
      CongruenceSpec spec{CongKind::GammaM, n, m};
      bool all = true;
      for (const auto& g : G.gens)
        if (!in_congruence(g, spec)) { all = false; break; }
      if (all && std::pair{n, m} > best) best = {n, m};
    }
  return best;
}

inline bool contains_minus_id(const MatrixGroupGens& G, std::optional<int> level = {}) {
  int n = level ? *level : (G.predicate ? G.predicate->level : 0);
  if (n <= 0) throw std::invalid_argument("need a level hint to decide -id membership");
  if (n <= 2) return true;  // -id is trivial mod 1 and 2
  return closure_mod(G.gens, n).count((-Mat2{}).mod(n)) > 0;
}

// Monodromy groups of the low-index catalog rows 0..7.
inline LevelSubgroup catalog_group(int row) {
  using detail::cong;
  switch (row) {
    case 0: return {"SL(2,Z)", 1, [](const Mat2&) { return true; }};
    case 1: return as_level_subgroup({CongKind::Gamma1, 2});
    case 2: return as_level_subgroup({CongKind::Gamma1, 3});
    case 3: return as_level_subgroup({CongKind::Gamma0, 4});
    case 4: return as_level_subgroup({CongKind::Gamma, 2});
    case 5: {
      // powers of [[-1,1],[0,-1]] mod 4
      const std::set<Mat2> cyc{Mat2{1, 0, 0, 1}, Mat2{3, 1, 0, 3}, Mat2{1, 2, 0, 1}, Mat2{3, 3, 0, 3}};
      return {"<[[-1,1],[0,-1]]> mod 4", 4, [cyc](const Mat2& r) { return cyc.count(r.mod(4)) > 0; }};
    }
    case 6:
      return {"b,c = 0 mod 2, a,d = 1 mod 4", 4, [](const Mat2& r) {
                return cong(r.b, 0, 2) && cong(r.c, 0, 2) && cong(r.a, 1, 4) && cong(r.d, 1, 4);
              }};
    case 7: return as_level_subgroup({CongKind::Gamma1, 4});
  }
  throw std::out_of_range("no matrix group recorded for row " + std::to_string(row));
}

}  // namespace ambi
