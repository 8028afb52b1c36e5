#include <gtest/gtest.h>

#include "ambi/congruence.hpp"

using namespace ambi;

namespace {

long long sl2_order_formula(long long n) {
  long long num = n * n * n, den = 1;
  long long m = n;
  for (long long p = 2; p * p <= m || m > 1; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    num *= p * p - 1;
    den *= p * p;
  }
  return num / den;
}

}  // namespace

TEST(Congruence, SL2OrderFormula) {
  for (int n = 1; n <= kMaxLevel; ++n) EXPECT_EQ(static_cast<long long>(sl2_mod(n).size()), sl2_order_formula(n)) << n;
  EXPECT_THROW(sl2_mod(kMaxLevel + 1), std::out_of_range);
}

TEST(Congruence, Membership) {
  EXPECT_TRUE(in_congruence({1, 2, 0, 1}, {CongKind::Gamma, 2}));
  EXPECT_TRUE(in_congruence({1, 1, 0, 1}, {CongKind::Gamma1, 2}));
  EXPECT_FALSE(in_congruence({1, 1, 0, 1}, {CongKind::Gamma, 2}));
  EXPECT_TRUE(in_congruence({-1, 0, 4, -1}, {CongKind::Gamma0, 4}));
  EXPECT_FALSE(in_congruence({-1, 0, 4, -1}, {CongKind::Gamma1, 4}));
  EXPECT_THROW(in_congruence({2, 0, 0, 1}, {CongKind::Gamma, 2}), std::invalid_argument);
  EXPECT_THROW(check_spec({CongKind::GammaM, 4, 3}), std::invalid_argument);
}

TEST(Congruence, StandardIndices) {
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma1, 2}), 3);
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma1, 3}), 4);
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma, 2}), 6);
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma1, 4}), 6);
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma, 1}), 1);
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma0, 2}), index_in_psl2(CongruenceSpec{CongKind::Gamma1, 2}));
  EXPECT_EQ(index_in_psl2(CongruenceSpec{CongKind::Gamma0, 3}), index_in_psl2(CongruenceSpec{CongKind::Gamma1, 3}));
}

// Closed forms: [SL2 : Gamma0(N)] = N prod(1 + 1/p), Gamma1 adds phi(N),
// Gamma(N) is the kernel of reduction.
TEST(Congruence, IndexFormulas) {
  for (int n = 2; n <= 12; ++n) {
    long long psi = n, phi = n;
    int m = n;
    for (int p = 2; p <= m; ++p)
      if (m % p == 0) {
        while (m % p == 0) m /= p;
        psi = psi / p * (p + 1);
        phi = phi / p * (p - 1);
      }
    EXPECT_EQ(index_in_sl2(CongruenceSpec{CongKind::Gamma0, n}), psi) << n;
    EXPECT_EQ(index_in_sl2(CongruenceSpec{CongKind::Gamma1, n}), psi * phi) << n;
    EXPECT_EQ(index_in_sl2(CongruenceSpec{CongKind::Gamma, n}), sl2_order_formula(n)) << n;
  }
}

TEST(Congruence, MinusIdentity) {
  EXPECT_TRUE(contains_minus_id(CongruenceSpec{CongKind::Gamma0, 4}));
  EXPECT_FALSE(contains_minus_id(CongruenceSpec{CongKind::Gamma1, 4}));
  EXPECT_TRUE(contains_minus_id(CongruenceSpec{CongKind::Gamma, 2}));
  MatrixGroupGens g{{kS, kT}, std::nullopt};
  EXPECT_THROW(contains_minus_id(g), std::invalid_argument);
  EXPECT_TRUE(contains_minus_id(g, 5));
}

TEST(Congruence, TorsionFromGenerators) {
  auto g1 = schreier_generators(as_level_subgroup({CongKind::Gamma1, 4}));
  EXPECT_EQ(mw_torsion(g1), std::make_pair(4, 1));
  auto g0 = schreier_generators(as_level_subgroup({CongKind::Gamma0, 4}));
  for (const auto& m : g0.gens) EXPECT_TRUE(in_congruence(m, {CongKind::Gamma1, 2}));
  EXPECT_EQ(mw_torsion(schreier_generators(catalog_group(6))), std::make_pair(2, 2));
  EXPECT_EQ(mw_torsion(MatrixGroupGens{{kS, kT}, std::nullopt}), std::make_pair(1, 1));
}

// Schreier generators generate the subgroup: their closure mod the level
// is exactly the residue set.
TEST(CongruenceProperty, SchreierGeneratorsGenerate) {
  for (int row = 0; row <= 7; ++row) {
    auto H = catalog_group(row);
    auto gens = schreier_generators(H);
    for (const auto& m : gens.gens) {
      EXPECT_EQ(m.det(), 1);
      EXPECT_TRUE(H.member(m.mod(H.level))) << row;
    }
    EXPECT_EQ(closure_mod(gens.gens, H.level), residues(H)) << row;
  }
}

TEST(Congruence, CatalogRows) {
  const int psl[] = {1, 3, 4, 6, 6, 6, 6, 6};
  const bool minus[] = {true, true, false, true, true, false, false, false};
  const std::pair<int, int> mw[] = {{1, 1}, {2, 1}, {3, 1}, {2, 1}, {2, 2}, {2, 1}, {2, 2}, {4, 1}};
  for (int row = 0; row <= 7; ++row) {
    auto H = catalog_group(row);
    EXPECT_EQ(index_in_psl2(H), psl[row]) << row;
    EXPECT_EQ(contains_minus_id(H), minus[row]) << row;
    EXPECT_EQ(mw_torsion(schreier_generators(H)), mw[row]) << row;
  }
  EXPECT_THROW(catalog_group(8), std::out_of_range);
}
