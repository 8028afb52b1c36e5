#pragma once
// Euler-number budget: deg j_G * deg j_E + 6 #I* + 8 #IV* = 24.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ambi {

struct BudgetRow {
  int deg_jG = 0, deg_jE = 0, nIstar = 0, nIVstar = 0;
  int e2 = 0, e3 = 0;
  std::optional<int> discard;  // rule 3 or 4

  bool low() const { return deg_jG <= 6; }
  int euler() const { return deg_jG * deg_jE + 6 * nIstar + 8 * nIVstar; }
  friend bool operator==(const BudgetRow&, const BudgetRow&) = default;
};

inline std::vector<BudgetRow> enumerate_budget() {
  std::vector<BudgetRow> rows;
  for (int g = 2; g <= 24; ++g)
    for (int e = 1; g * e <= 24; ++e)
      for (int iv = 0; g * e + 8 * iv <= 24; ++iv) {
        int rest = 24 - g * e - 8 * iv;
        if (rest % 6) continue;
        BudgetRow r{g, e, rest / 6, iv, g % 2, g % 3, std::nullopt};
        if (r.e3 == 2 && r.nIVstar != 2) r.discard = 3;
        else if (r.deg_jE == 1 && (r.nIstar == 0 || r.nIVstar > 0)) r.discard = 4;
        rows.push_back(r);
      }
  std::sort(rows.begin(), rows.end(), [](const BudgetRow& a, const BudgetRow& b) {
    return std::tie(a.deg_jG, a.deg_jE) < std::tie(b.deg_jG, b.deg_jE);
  });
  return rows;
}

inline std::vector<BudgetRow> budget_part(bool low) {
  auto all = enumerate_budget();
  std::erase_if(all, [low](const BudgetRow& r) { return r.low() != low; });
  return all;
}

// Number of cusps of a genus-0 cover from Riemann-Hurwitz.
inline int n_poles(int deg_jG, int e2, int e3) {
  int twelve = 24 + 2 * deg_jG - 8 * e3 - 6 * e2;
  if (twelve % 12) throw std::domain_error("non-integral pole count");
  return twelve / 12;
}

inline int max_stratum_dim(int deg_jG, int e2, int e3, int poles) {
  if (deg_jG < 1 || poles < 1 || e2 < 0 || e3 < 0) throw std::invalid_argument("infeasible inputs");
  std::optional<int> best;
  for (int jE = 1; jE * deg_jG <= 24; ++jE) {
    int room = 24 - jE * deg_jG;
    for (int star = 0; 6 * star <= room; ++star)
      for (int s1 = 0; 6 * star + 3 * s1 <= room; ++s1) {
        if (e2 == 0 && s1) break;
        int s0 = e3 == 0 ? 0 : (room - 6 * star - 3 * s1) / 2;
        int sinf = std::min(jE * poles, 24);
        int v = sinf + s0 + s1 + 2 * star - 6;
        if (!best || v > *best) best = v;
      }
  }
  if (!best) throw std::invalid_argument("infeasible inputs");
  return *best;
}

struct DimensionColumn {
  int deg_jG = 0, e2 = 0, e3 = 0, poles = 0, max_dim = 0;
};

// One column per degree of j_G that survives the discard rules.
inline std::vector<DimensionColumn> dimension_columns() {
  std::vector<DimensionColumn> out;
  for (const auto& r : enumerate_budget()) {
    if (r.discard) continue;
    if (!out.empty() && out.back().deg_jG == r.deg_jG) continue;
    int poles = n_poles(r.deg_jG, r.e2, r.e3);
    out.push_back({r.deg_jG, r.e2, r.e3, poles, max_stratum_dim(r.deg_jG, r.e2, r.e3, poles)});
  }
  return out;
}

}  // namespace ambi
