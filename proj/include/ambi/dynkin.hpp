#pragma once
// Diagram symmetries of ADE sums and their action on discriminant forms.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ambi/discriminant.hpp"
#include "ambi/perm.hpp"

namespace ambi {

struct DynkinSymmetryGroup {
  std::vector<RootSymbol> symbols;
  int rank = 0;
  std::vector<Perm> gens;  // permutations of simple roots
  Z order = 1;
};

// Number of diagram automorphisms of a single connected ADE diagram.
inline int diagram_flip_factor(const RootSymbol& s) {
  check_symbol(s);
  if (s.type == 'A') return s.n == 1 ? 1 : 2;
  if (s.type == 'D') return s.n == 4 ? 6 : 2;
  return s.n == 6 ? 2 : 1;
}

inline DynkinSymmetryGroup dynkin_group(const std::vector<RootSymbol>& symbols) {
  DynkinSymmetryGroup S;
  S.symbols = symbols;
  S.rank = rank_of(symbols);
  std::vector<int> offset;
  int off = 0;
  for (const auto& s : symbols) {
    offset.push_back(off);
    off += s.n;
  }
  auto swap_nodes = [&](std::vector<std::pair<int, int>> pairs) {
    Perm p = identity_perm(S.rank);
    for (auto [a, b] : pairs) std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    S.gens.push_back(p);
  };
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto& s = symbols[i];
    int o = offset[i];
    if (s.type == 'A' && s.n >= 2) {
      std::vector<std::pair<int, int>> pr;
      for (int k = 0; k < s.n / 2; ++k) pr.emplace_back(o + k, o + s.n - 1 - k);
      swap_nodes(pr);
    } else if (s.type == 'D' && s.n == 4) {
      swap_nodes({{o + 0, o + 2}});
      swap_nodes({{o + 2, o + 3}});
    } else if (s.type == 'D') {
      swap_nodes({{o + s.n - 2, o + s.n - 1}});
    } else if (s.type == 'E' && s.n == 6) {
      swap_nodes({{o + 0, o + 4}, {o + 1, o + 3}});
    }
    S.order *= diagram_flip_factor(s);
    if (i + 1 < symbols.size() && symbols[i + 1] == s) {
      std::vector<std::pair<int, int>> pr;
      for (int k = 0; k < s.n; ++k) pr.emplace_back(o + k, offset[i + 1] + k);
      swap_nodes(pr);
    }
  }
  for (std::size_t i = 0; i < symbols.size();) {
    std::size_t j = i;
    while (j < symbols.size() && symbols[j] == symbols[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) S.order *= static_cast<long long>(k);
    i = j;
  }
  return S;
}

inline bool preserves_gram(const Perm& p, const IntMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])] != g[i][j]) return false;
  return true;
}

// Induced permutation of D(R): alpha_i -> alpha_{p(i)}.
inline std::vector<int> induced_action(const FiniteQuadraticForm& F, const Perm& p) {
  std::vector<int> img(static_cast<std::size_t>(F.size()));
  // images of the generators, then extend additively
  std::vector<int> gen_img;
  for (std::size_t k = 0; k < F.ngens(); ++k) {
    std::vector<long long> e(F.ngens(), 0);
    e[k] = 1;
    QVector v = F.lift(F.index(e)), w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[static_cast<std::size_t>(p[i])] = v[i];
    gen_img.push_back(F.class_of(w));
  }
  for (int a = 0; a < F.size(); ++a) {
    auto c = F.coords(a);
    int r = 0;
    for (std::size_t k = 0; k < c.size(); ++k) r = F.add(r, F.times(gen_img[k], c[k]));
    img[static_cast<std::size_t>(a)] = r;
  }
  return img;
}

struct StabilizedImage {
  Z stabilizer_order;     // |S_R^G|
  long long image_order;  // |S-bar_M|
  long long image_mod_sign;
  bool minus_one_nontrivial = false;
  bool minus_one_in_image = false;
  long long orbit_size = 0;
};

inline constexpr long long kMaxImageOrder = 2'000'000;
inline constexpr long long kMaxTransversalEntries = 40'000'000;

inline StabilizedImage stabilized_image(const DynkinSymmetryGroup& S, const FiniteQuadraticForm& F,
                                        const IsotropicSubgroup& G) {
  using Act = std::vector<int>;
  std::vector<Act> acts;
  for (const auto& g : S.gens) acts.push_back(induced_action(F, g));
  auto apply_set = [](const Act& a, const std::vector<int>& set) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int e : set) out.push_back(a[static_cast<std::size_t>(e)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto mul = [](const Act& a, const Act& b) {  // a then b
    Act r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
    return r;
  };
  auto inv = [](const Act& a) {
    Act r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return r;
  };

  // orbit of G with transversal, then Schreier generators of the stabilizer
  std::map<std::vector<int>, Act> transversal;
  Act id(static_cast<std::size_t>(F.size()));
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  transversal[G.elements] = id;
  std::vector<std::vector<int>> queue{G.elements};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto cur = queue[qi];
    for (const auto& a : acts) {
      auto nxt = apply_set(a, cur);
      if (!transversal.count(nxt)) {
        if (static_cast<long long>(transversal.size()) * F.size() > kMaxTransversalEntries)
          throw std::length_error("orbit of G too large for an explicit transversal");
        transversal[nxt] = mul(transversal[cur], a);
        queue.push_back(nxt);
      }
    }
  }
  std::set<Act> stab_gens;
  for (const auto& [set, t] : transversal)
    for (const auto& a : acts) {
      Act ta = mul(t, a);
      Act s = mul(ta, inv(transversal.at(apply_set(a, set))));
      if (s != id) stab_gens.insert(s);
    }

  // action on G^perp / G, cosets labelled by their smallest element
  auto perp = orthogonal_complement(F, G.elements);
  std::map<int, int> coset_of;
  std::vector<int> reps;
  for (int x : perp) {
    if (coset_of.count(x)) continue;
    int label = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int g : G.elements) coset_of[F.add(x, g)] = label;
  }
  const std::size_t m = reps.size();
  std::set<Act> img_gens;
  for (const auto& s : stab_gens) {
    Act c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = coset_of.at(s[static_cast<std::size_t>(reps[i])]);
    bool trivial = true;
    for (std::size_t i = 0; i < m; ++i) trivial &= c[i] == static_cast<int>(i);
    if (!trivial) img_gens.insert(c);
  }
  Act cid(m);
  for (std::size_t i = 0; i < m; ++i) cid[i] = static_cast<int>(i);
  std::set<Act> group{cid};
  std::vector<Act> frontier{cid};
  while (!frontier.empty()) {
    std::vector<Act> next;
    for (const auto& x : frontier)
      for (const auto& g : img_gens) {
        Act y = mul(x, g);
        if (group.insert(y).second) {
          next.push_back(y);
          if (static_cast<long long>(group.size()) > kMaxImageOrder) throw std::length_error("image group too large");
        }
      }
    frontier.swap(next);
  }
  Act minus(m);
  for (std::size_t i = 0; i < m; ++i) minus[i] = coset_of.at(F.neg(reps[i]));

  StabilizedImage r;
  r.orbit_size = static_cast<long long>(transversal.size());
  r.stabilizer_order = S.order / r.orbit_size;
  r.image_order = static_cast<long long>(group.size());
  r.minus_one_nontrivial = minus != cid;
  r.minus_one_in_image = group.count(minus) > 0;
  r.image_mod_sign = r.image_order / (r.minus_one_nontrivial && r.minus_one_in_image ? 2 : 1);
  return r;
}

}  // namespace ambi
