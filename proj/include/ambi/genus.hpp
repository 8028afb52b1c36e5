#pragma once
// Single-class genus certificate for U + L and the moduli/component counting.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ambi/lattice.hpp"

namespace ambi {

inline IntegerLattice hyperbolic_plane() { return {{{0, 1}, {1, 0}}}; }

inline IntegerLattice with_hyperbolic_plane(const IntegerLattice& L) { return direct_sum({hyperbolic_plane(), L}); }

inline std::vector<std::pair<Z, int>> factor(Z n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Z, int>> out;
  for (Z p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

struct GenusCheck {
  bool single_class = false;  // no witness k below
  bool prime_rule = false;    // prime-wise form: no odd p^C | d and 8^C does not divide 4^[n/2] d
  int n = 0;                  // 22 - rank M
  Z det = 0;                  // |det M|
  Z scaled = 0;               // 4^[n/2] * det
  std::vector<Z> witnesses;   // nonsquare k = 0, 1 mod 4 with k^C | 4^[n/2] det
  std::vector<Z> prime_rule_hits;
};

namespace detail {
inline Z ipow(Z b, int e) {
  Z r = 1;
  while (e-- > 0) r *= b;
  return r;
}
inline bool is_square(const std::vector<std::pair<Z, int>>& f) {
  return std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second % 2 == 0; });
}
}  // namespace detail

// An indefinite genus of dimension n >= 3 has a single class unless
// 4^[n/2] d is divisible by k^C(n,2) for some nonsquare k = 0 or 1 mod 4.
inline GenusCheck single_genus_report(const IntegerLattice& M) {
  GenusCheck g;
  g.n = 22 - M.rank();
  if (g.n < 3) throw std::invalid_argument("complement rank below 3: criterion does not apply");
  g.det = abs(determinant(M.gram));
  if (g.det == 0) throw std::invalid_argument("degenerate lattice");
  const int c = g.n * (g.n - 1) / 2;
  g.scaled = g.det * detail::ipow(4, g.n / 2);

  // candidate k: every prime exponent at most v_p(scaled) / C
  std::vector<std::pair<Z, int>> room;
  for (auto [p, e] : factor(g.scaled))
    if (e >= c) room.emplace_back(p, e / c);
  std::vector<std::pair<Z, std::vector<std::pair<Z, int>>>> ks{{Z(1), {}}};
  for (auto [p, top] : room) {
    std::size_t n0 = ks.size();
    for (std::size_t i = 0; i < n0; ++i) {
      Z k = ks[i].first;
      auto f = ks[i].second;
      for (int e = 1; e <= top; ++e) {
        k *= p;
        auto fe = f;
        fe.emplace_back(p, e);
        ks.emplace_back(k, fe);
      }
    }
  }
  for (const auto& [k, f] : ks) {
    if (k < 2 || detail::is_square(f)) continue;
    int r = static_cast<int>(k % 4);
    if (r == 0 || r == 1) g.witnesses.push_back(k);
  }
  std::sort(g.witnesses.begin(), g.witnesses.end());
  g.single_class = g.witnesses.empty();

  for (auto [p, e] : factor(g.det))
    if (p != 2 && e >= c) g.prime_rule_hits.push_back(p);
  if (g.scaled % detail::ipow(8, c) == 0) g.prime_rule_hits.insert(g.prime_rule_hits.begin(), Z(2));
  g.prime_rule = g.prime_rule_hits.empty();
  return g;
}

inline bool single_genus_check(const IntegerLattice& M) { return single_genus_report(M).single_class; }

struct ModuliCounts {
  int n_moduli = 0;
  int n_components = 0;
};

inline ModuliCounts mm_counts(int I3, int genus_size, int I2) {
  if (I2 != 1 && I2 != 2) throw std::invalid_argument("I2 must be 1 or 2");
  if (I3 < 1 || genus_size < 1) throw std::invalid_argument("counts must be positive");
  ModuliCounts m;
  m.n_moduli = I3 * genus_size;
  m.n_components = m.n_moduli * 2 / I2;
  return m;
}

inline long long covering_degree(long long sM_mod, int n_components, bool conjugate_pair) {
  long long num = sM_mod * (conjugate_pair ? 2 : 1);
  if (n_components <= 0 || num % n_components != 0)
    throw std::domain_error("covering degree is not integral: inconsistent data");
  return num / n_components;
}

}  // namespace ambi
