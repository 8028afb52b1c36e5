#include <gtest/gtest.h>

#include <random>

#include "ambi/catalog.hpp"
#include "ambi/permcover.hpp"
#include "oracles.hpp"

using namespace ambi;
using namespace oracle;

namespace {

PermTriple relabel(const PermTriple& t, const Perm& s) {
  return PermTriple::from_pair(conjugate(t.mu0, s), conjugate(t.mu1, s));
}

}  // namespace

TEST(Perm, CycleNotationRoundTrip) {
  std::mt19937 rng(3);
  for (int d : {1, 5, 9, 12, 18}) {
    for (int k = 0; k < 50; ++k) {
      Perm p = random_perm(d, rng);
      EXPECT_EQ(parse_cycles(format_cycles(p), d), p);
      EXPECT_EQ(parse_cycles(format_cycles(p, false), d), p);
    }
  }
  EXPECT_EQ(parse_cycles("(123)", 3), (Perm{1, 2, 0}));
  EXPECT_EQ(parse_cycles("(1 12)", 12)[0], 11);
  EXPECT_EQ(parse_cycles("(13)", 18)[12], 12);  // label 13, not a 2-cycle
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(14)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1 2", 3), std::invalid_argument);
}

TEST(Perm, ComposeAppliesLeftFirst) {
  Perm a = parse_cycles("(12)", 3), b = parse_cycles("(23)", 3);
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ(compose(a, b)[0], 2);
  EXPECT_TRUE(is_identity(compose(a, inverse(a))));
}

TEST(PermCover, ValidateExamples) {
  auto t = PermTriple::parse("(123)(456)(789)", "(14)(27)(56)(89)", 9);
  EXPECT_TRUE(validate(t).ok);
  EXPECT_FALSE(validate(PermTriple::from_pair(parse_cycles("(1234)", 4), parse_cycles("(12)", 4))).ok);
  // two disjoint copies of a degree-2 cover
  auto split = PermTriple::from_pair(identity_perm(4), parse_cycles("(12)(34)", 4));
  auto v = validate(split);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.reason.empty());
}

TEST(PermCover, TorsionAndCusps) {
  auto t711 = PermTriple::parse("(123)(456)(789)", "(14)(27)(56)(89)", 9);
  EXPECT_EQ(torsion_counts(t711), std::make_pair(1, 0));
  EXPECT_EQ(cusp_partition(t711), (Partition{7, 1, 1}));
  EXPECT_EQ(t711.muInf, parse_cycles("(1643297)(5)(8)", 9));
  EXPECT_EQ(genus(t711), 0);

  auto t2 = PermTriple::from_pair(identity_perm(2), parse_cycles("(12)", 2));
  EXPECT_EQ(torsion_counts(t2), std::make_pair(0, 2));
  EXPECT_EQ(cusp_partition(t2), (Partition{2}));

  auto g2 = PermTriple::parse("(123)(456)", "(14)(25)(36)", 6);
  ASSERT_TRUE(validate(g2).ok);
  EXPECT_EQ(passport(g2).p1, (Partition{2, 2, 2}));
  EXPECT_EQ(cusp_partition(g2), (Partition{6}));
  EXPECT_EQ(genus(g2), 1);  // 2g - 2 = -12 + 4 + 3 + 5
  EXPECT_EQ(genus(PermTriple::from_pair({0}, {0})), 0);
}

TEST(PermCover, FirstIndexEighteenTriple) {
  auto cat = load_catalog();
  const auto& row = cat.row(24);
  ASSERT_TRUE(row.triple);
  auto t = PermTriple::parse(row.triple->mu0, row.triple->mu1, 18);
  EXPECT_TRUE(validate(t).ok);
  EXPECT_EQ(cusp_partition(t), (Partition{14, 1, 1, 1, 1}));
}

TEST(PermCover, ConjugacyExamples) {
  auto cat = load_catalog();
  auto parse_row = [&](int id) {
    const auto& r = cat.row(id);
    return PermTriple::parse(r.triple->mu0, r.triple->mu1, 18);
  };
  auto a = parse_row(38), b = parse_row(39);
  EXPECT_EQ(passport(a), passport(b));
  EXPECT_FALSE(is_conjugate(a, b));
  EXPECT_FALSE(is_conjugate(PermTriple::parse("(123)(456)(789)", "(14)(27)(56)(89)", 9),
                            PermTriple::parse("(123)(456)(789)", "(14)(26)(57)(89)", 9)));
  EXPECT_THROW(is_conjugate(a, PermTriple::parse("(123)(456)(789)", "(14)(27)(56)(89)", 9)), std::invalid_argument);
}

TEST(PermCoverProperty, CanonicalFormOnOrbits) {
  auto cat = load_catalog();
  std::mt19937 rng(5);
  for (int id = 24; id <= 49; ++id) {
    const auto& r = cat.row(id);
    auto t = PermTriple::parse(r.triple->mu0, r.triple->mu1, 18);
    auto c = canonical_form(t);
    EXPECT_EQ(canonical_form(c), c);
    for (int k = 0; k < 100; ++k) {
      auto u = relabel(t, random_perm(18, rng));
      EXPECT_EQ(canonical_form(u), c) << "row " << id;
      EXPECT_TRUE(is_conjugate_direct(t, u));
    }
  }
}

TEST(PermCoverProperty, EnumerationMatchesOracle) {
  for (int d = 1; d <= 6; ++d) {
    for (bool tf : {false, true}) {
      EnumConstraints c;
      c.degree = d;
      c.torsion_free = tf;
      auto fast = enumerate_triples(c);
      auto want = oracle_classes(d, tf, std::nullopt);
      EXPECT_EQ(fast.size(), want.size()) << "d=" << d << " tf=" << tf;
      for (const auto& [a, b] : want) {
        auto t = canonical_form(PermTriple::from_pair(a, b));
        EXPECT_TRUE(std::binary_search(fast.begin(), fast.end(), t)) << "d=" << d;
      }
      EXPECT_EQ(enumerate_triples_brute(c), fast) << "d=" << d;
    }
    EnumConstraints g0;
    g0.degree = d;
    g0.genus = 0;
    EXPECT_EQ(enumerate_triples(g0).size(), oracle_classes(d, false, 0).size()) << "d=" << d;
  }
}

TEST(PermCoverProperty, CosetMethodAgrees) {
  for (int d = 1; d <= 12; ++d) {
    EnumConstraints c;
    c.degree = d;
    c.genus = 0;
    EXPECT_EQ(enumerate_triples_cosets(c), enumerate_triples(c)) << "d=" << d;
  }
}

TEST(PermCover, IndexNine) {
  EnumConstraints c;
  c.degree = 9;
  c.e2 = 1;
  c.e3 = 0;
  c.genus = 0;
  auto out = enumerate_triples(c);
  std::multiset<Partition> cusps;
  for (const auto& t : out) cusps.insert(cusp_partition(t));
  EXPECT_EQ(cusps, (std::multiset<Partition>{{7, 1, 1}, {6, 2, 1}, {5, 3, 1}, {4, 3, 2}}));
}

TEST(PermCover, IndexTwelve) {
  EnumConstraints c;
  c.degree = 12;
  c.torsion_free = true;
  c.genus = 0;
  auto out = enumerate_triples(c);
  std::multiset<Partition> cusps;
  for (const auto& t : out) cusps.insert(cusp_partition(t));
  EXPECT_EQ(cusps, (std::multiset<Partition>{{9, 1, 1, 1}, {8, 2, 1, 1}, {6, 3, 2, 1}, {5, 5, 1, 1}, {4, 4, 2, 2}, {3, 3, 3, 3}}));
}

TEST(PermCover, IndexEighteen) {
  EnumConstraints c;
  c.degree = 18;
  c.torsion_free = true;
  c.genus = 0;
  auto out = enumerate_triples(c);
  ASSERT_EQ(out.size(), 26u);
  auto cat = load_catalog();
  std::vector<int> hits(out.size(), 0);
  for (const auto& t : out) {
    EXPECT_EQ(cusp_partition(t).size(), 5u);
    auto [e2, e3] = torsion_counts(t);
    EXPECT_EQ((18 - e2) % 2, 0);
    EXPECT_EQ((18 - e3) % 3, 0);
  }
  for (int id = 24; id <= 49; ++id) {
    const auto& r = cat.row(id);
    auto t = PermTriple::parse(r.triple->mu0, r.triple->mu1, 18);
    int n = 0;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (is_conjugate(out[k], t)) ++n, ++hits[k];
    EXPECT_EQ(n, 1) << "row " << id;
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(PermCover, InfeasibleConstraintsAreEmpty) {
  EnumConstraints c;
  c.degree = 7;
  c.torsion_free = true;
  EXPECT_TRUE(enumerate_triples(c).empty());
  c.degree = 9;
  c.torsion_free = false;
  c.e2 = 0;  // 9 - 0 is odd
  EXPECT_TRUE(enumerate_triples(c).empty());
}
