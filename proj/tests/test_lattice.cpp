#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "ambi/catalog.hpp"
#include "ambi/dynkin.hpp"
#include "ambi/genus.hpp"
#include "oracles.hpp"

using namespace ambi;
using namespace oracle;

namespace {

ZMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  ZMatrix U = z_identity(n);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    int f = static_cast<int>(rng() % 5) - 2;
    for (std::size_t k = 0; k < n; ++k) U[k][i] += f * U[k][j];  // column op
  }
  return U;
}

IntMatrix congruent(const IntMatrix& G, const ZMatrix& U) {
  ZMatrix Ut(U.size(), std::vector<Z>(U.size()));
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = 0; j < U.size(); ++j) Ut[i][j] = U[j][i];
  ZMatrix R = z_mul(z_mul(Ut, to_z(G)), U);
  IntMatrix out(R.size(), std::vector<long long>(R.size()));
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t j = 0; j < R.size(); ++j) out[i][j] = static_cast<long long>(R[i][j]);
  return out;
}

}  // namespace

TEST(Lattice, RootSymbolGrammar) {
  auto s = parse_root_lattice("D4+2A6+A1");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(rank_of(s), 17);
  EXPECT_EQ(format_root_lattice(s), "D4+2A6+A1");
  EXPECT_TRUE(parse_root_lattice("").empty());
  EXPECT_THROW(parse_root_lattice("D3"), std::invalid_argument);
  EXPECT_THROW(parse_root_lattice("E9"), std::invalid_argument);
  EXPECT_THROW(parse_root_lattice("A1++A2"), std::invalid_argument);
  EXPECT_THROW(parse_root_lattice("A1+"), std::invalid_argument);
  EXPECT_EQ(parse_root_lattice(" 2 A_3 + A1 ").size(), 3u);
}

TEST(Lattice, AdeGram) {
  EXPECT_EQ(ade({'A', 1}).gram, (IntMatrix{{-2}}));
  for (const auto& s : symbols_up_to(17)) {
    auto L = ade(s);
    EXPECT_TRUE(L.even());
    EXPECT_EQ(abs(determinant(L.gram)), Z(ade_discriminant_order(s))) << s.str();
  }
}

TEST(LatticeProperty, SmithFormIdentity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    ZMatrix A(m, std::vector<Z>(n));
    for (auto& row : A)
      for (auto& x : row) x = static_cast<int>(rng() % 21) - 10;
    auto s = smith_normal_form(A);
    ZMatrix D = z_mul(z_mul(s.U, A), s.V);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) EXPECT_EQ(D[i][j], 0);
    for (std::size_t k = 0; k < s.diag.size(); ++k) {
      EXPECT_EQ(D[k][k], s.diag[k]);
      EXPECT_GE(s.diag[k], 0);
      if (k + 1 < s.diag.size() && s.diag[k] != 0) EXPECT_EQ(s.diag[k + 1] % s.diag[k], 0);
    }
    if (m == n) {
      EXPECT_EQ(abs(determinant([&] {
                  IntMatrix u(m, std::vector<long long>(m));
                  for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) u[i][j] = static_cast<long long>(s.U[i][j]);
                  return u;
                }())),
                1);
    }
  }
}

// Discriminant forms of every ADE symbol up to rank 17 against closed forms.
TEST(LatticeProperty, DiscriminantMatchesClosedForm) {
  for (const auto& s : symbols_up_to(17)) {
    auto F = discriminant_form(ade(s));
    EXPECT_EQ(F.size(), ade_discriminant_order(s)) << s.str();
    EXPECT_EQ(normalize_group_type(F.orders()), normalize_group_type(expected_type(s))) << s.str();
    EXPECT_EQ(q_values(F), expected_q(s)) << s.str();
    auto G = root_discriminant({s});
    EXPECT_EQ(q_values(G), q_values(F)) << s.str();
  }
}

TEST(LatticeProperty, QuadraticAndBilinearCompatible) {
  for (const char* root : {"A1", "A3", "D4", "D5", "E6", "E7", "2A2+A3", "D6+A1"}) {
    auto F = root_discriminant(parse_root_lattice(root));
    for (int x = 0; x < F.size(); ++x)
      for (int y = 0; y < F.size(); ++y) {
        Q lhs = F.q(F.add(x, y)) - F.q(x) - F.q(y) - 2 * F.b(x, y);
        EXPECT_EQ(denominator(Q(lhs / 2)), 1) << root;
        EXPECT_EQ(F.q(F.neg(x)), F.q(x));
      }
  }
}

// Changing the basis of the lattice gives the same form data.
TEST(LatticeProperty, UnimodularPreconditioning) {
  std::mt19937 rng(17);
  for (const char* root : {"A3", "D5", "E6", "A2+A4", "D4+A1", "3A2", "A7"}) {
    auto L = root_lattice(parse_root_lattice(root));
    auto base = discriminant_form(L);
    for (int trial = 0; trial < 10; ++trial) {
      auto G = congruent(L.gram, random_unimodular(L.gram.size(), rng));
      auto F = discriminant_form(IntegerLattice{G});
      EXPECT_EQ(F.orders(), base.orders()) << root;
      EXPECT_EQ(q_values(F), q_values(base)) << root;
    }
  }
}

TEST(Lattice, DiscriminantExamples) {
  auto a1 = discriminant_form(ade({'A', 1}));
  ASSERT_EQ(a1.size(), 2);
  EXPECT_EQ(a1.q(1), Q(3, 2));
  auto a3 = discriminant_form(ade({'A', 3}));
  EXPECT_EQ(a3.orders(), (std::vector<long long>{4}));
  EXPECT_EQ(a3.q(1), Q(5, 4));
  auto d4 = discriminant_form(ade({'D', 4}));
  EXPECT_EQ(d4.size(), 4);
  EXPECT_EQ(d4.exponent(), 2);
  EXPECT_EQ(discriminant_form(ade({'E', 8})).size(), 1);
  EXPECT_THROW(discriminant_form(IntegerLattice{{{2, 2}, {2, 2}}}), std::invalid_argument);
}

TEST(LatticeProperty, ShortVectorsMatchBruteForce) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 3;
    // B^T B + I is positive definite
    IntMatrix B(n, std::vector<long long>(n));
    for (auto& row : B)
      for (auto& x : row) x = static_cast<int>(rng() % 5) - 2;
    IntMatrix A(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) A[i][j] += B[k][i] * B[k][j];
        if (i == j) A[i][j] += 1;
      }
    QVector c(n);
    for (auto& x : c) x = Q(static_cast<int>(rng() % 5) - 2, 3);
    Q bound = 3 + static_cast<int>(rng() % 6);
    ShortVectors sv(A, c);
    long long fast = 0;
    sv.enumerate(bound, [&](const std::vector<long long>&, const Q&) { ++fast; });
    long long slow = 0;
    const int R = 8;
    std::vector<long long> x(n, -R);
    while (true) {
      Q v = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v += (x[i] + c[i]) * A[i][j] * (x[j] + c[j]);
      if (v <= bound) ++slow;
      std::size_t k = 0;
      while (k < n && ++x[k] > R) x[k++] = -R;
      if (k == n) break;
    }
    EXPECT_EQ(fast, slow) << "trial " << trial;
  }
}

TEST(Lattice, RootCountsMatchClosedForm) {
  for (const auto& s : symbols_up_to(12)) EXPECT_EQ(root_count(ade(s)), ade_root_count(s)) << s.str();
  EXPECT_EQ(root_count(root_lattice(parse_root_lattice("D4+2A6+A1"))), 24 + 42 + 42 + 2);
  EXPECT_EQ(root_count(root_lattice(parse_root_lattice("A17"))), 17 * 18);
}

TEST(Lattice, IsotropicEightA1) {
  auto syms = parse_root_lattice("8A1");
  auto F = root_discriminant(syms);
  auto all = isotropic_subgroups(F, {2});
  EXPECT_EQ(all.size(), 70u + 1u);  // weight 4 and weight 8 vectors
  for (const auto& g : all) {
    int x = g.gens.front();
    int w = 0;
    for (auto c : F.coords(x)) w += static_cast<int>(c);
    EXPECT_TRUE(w == 4 || w == 8);
    EXPECT_EQ(F.q(x), 0);
    long long roots = root_count(overlattice(F, g));
    if (w == 4) EXPECT_GT(roots, 16);
    else EXPECT_EQ(roots, 16);
    EXPECT_EQ(adds_no_roots(F, g), w == 8);
  }
  auto adm = admissible_isotropics(syms, {2});
  ASSERT_EQ(adm.size(), 1u);
  EXPECT_EQ(F.coords(adm[0].gens[0]), std::vector<long long>(8, 1));
  EXPECT_EQ(isotropic_subgroups(F, {}).size(), 1u);
}

TEST(Lattice, AdmissibleExamples) {
  EXPECT_FALSE(admissible_isotropics(parse_root_lattice("6A2"), {3}).empty());
  EXPECT_FALSE(admissible_isotropics(parse_root_lattice("12A1"), {2, 2}).empty());
  EXPECT_TRUE(admissible_isotropics(parse_root_lattice("2A8"), {2}).empty());
}

TEST(Lattice, SubgroupWithMiddleVector) {
  auto syms = parse_root_lattice("2A3+8A1");
  auto F = root_discriminant(syms);
  auto G = make_subgroup(F, {label_class(F, syms, {"2", "2", "1", "1", "1", "1", "0", "0", "0", "0"}),
                             label_class(F, syms, {"2", "2", "0", "0", "0", "0", "1", "1", "1", "1"})});
  EXPECT_EQ(G.elements.size(), 4u);
  EXPECT_TRUE(is_isotropic(F, G.elements));
  EXPECT_TRUE(adds_no_roots(F, G));
  int mid = label_class(F, syms, {"0", "0", "1", "1", "1", "1", "1", "1", "1", "1"});
  EXPECT_TRUE(std::binary_search(G.elements.begin(), G.elements.end(), mid));
  auto all = admissible_isotropics(F, {2, 2});
  EXPECT_NE(std::find(all.begin(), all.end(), G), all.end());
}

TEST(Lattice, OverlatticeIsIntegralAndEven) {
  auto syms = parse_root_lattice("12A1");
  auto F = root_discriminant(syms);
  for (const auto& G : admissible_isotropics(F, {2, 2})) {
    auto L = overlattice(F, G);
    EXPECT_TRUE(L.even());
    EXPECT_EQ(abs(determinant(L.gram)) * 16, 4096);
    break;
  }
  auto bad = make_subgroup(F, {F.index(std::vector<long long>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})});
  EXPECT_THROW(overlattice(F, bad), std::invalid_argument);
}

TEST(Dynkin, GroupOrders) {
  auto S = dynkin_group(parse_root_lattice("8A1"));
  EXPECT_EQ(S.order, Z(40320));
  EXPECT_EQ(dynkin_group(parse_root_lattice("A1")).order, 1);
  EXPECT_EQ(dynkin_group(parse_root_lattice("D4")).order, 6);
  EXPECT_EQ(dynkin_group(parse_root_lattice("D4+2A6+A1")).order, 6 * 8);
  EXPECT_EQ(dynkin_group(parse_root_lattice("E6+E7+E8")).order, 2);
  for (const char* root : {"D4+2A6+A1", "3D4", "E6+2A3", "D5+D5+A2"}) {
    auto syms = parse_root_lattice(root);
    auto G = dynkin_group(syms);
    auto L = root_lattice(syms);
    for (const auto& g : G.gens) EXPECT_TRUE(preserves_gram(g, L.gram)) << root;
  }
}

TEST(Dynkin, StabilizedImages) {
  auto syms = parse_root_lattice("8A1");
  auto F = root_discriminant(syms);
  auto G = admissible_isotropics(F, {2}).front();
  auto im = stabilized_image(dynkin_group(syms), F, G);
  EXPECT_EQ(im.stabilizer_order, Z(40320));
  auto one = parse_root_lattice("A1");
  auto F1 = root_discriminant(one);
  auto im1 = stabilized_image(dynkin_group(one), F1, make_subgroup(F1, {}));
  EXPECT_EQ(im1.image_mod_sign, 1);
  auto d = parse_root_lattice("D4+2A6+A1");
  auto Fd = root_discriminant(d);
  EXPECT_EQ(stabilized_image(dynkin_group(d), Fd, make_subgroup(Fd, {})).image_mod_sign, 24);
}

TEST(Genus, Examples) {
  auto cat = load_catalog();
  auto report = [&](int id) {
    const auto& r = cat.row(id);
    auto F = root_discriminant(r.symbols());
    return single_genus_report(with_hyperbolic_plane(overlattice(F, row_subgroup(r, F))));
  };
  auto g47 = report(47);
  EXPECT_EQ(g47.n, 3);
  EXPECT_EQ(g47.scaled, Z(128 * 3));
  EXPECT_TRUE(g47.single_class);
  EXPECT_TRUE(g47.prime_rule);
  auto g23 = report(23);
  EXPECT_EQ(g23.n, 4);
  EXPECT_EQ(g23.det, Z(81));
  EXPECT_TRUE(g23.single_class);
  EXPECT_THROW(single_genus_report(root_lattice(parse_root_lattice("E8+E8+A4"))), std::invalid_argument);
}

namespace {
// True when no nonsquare k = 0, 1 mod 4 has k^c dividing scaled; plain scan over k.
bool oracle_single(long long scaled, int c) {
  for (long long k = 2;; ++k) {
    Z kc = 1;
    for (int i = 0; i < c; ++i) kc *= k;
    if (kc > scaled) return true;
    long long r = 0;
    while ((r + 1) * (r + 1) <= k) ++r;
    if (r * r != k && (k % 4 == 0 || k % 4 == 1) && scaled % kc == 0) return false;
  }
}
}  // namespace

TEST(GenusProperty, CriterionMatchesScan) {
  for (long long d = 1; d <= 600; ++d)
    for (int n : {3, 4, 5, 6}) {
      // U + <d> + <1>^(20-n): rank 22 - n, |det| = d
      std::size_t rank = static_cast<std::size_t>(22 - n);
      IntMatrix g(rank, std::vector<long long>(rank, 0));
      g[0][1] = g[1][0] = 1;
      g[2][2] = d;
      for (std::size_t i = 3; i < rank; ++i) g[i][i] = 1;
      auto rep = single_genus_report(IntegerLattice{g});
      long long scaled = d;
      for (int i = 0; i < n / 2; ++i) scaled *= 4;
      ASSERT_EQ(rep.det, Z(d));
      ASSERT_EQ(rep.scaled, Z(scaled));
      EXPECT_EQ(rep.single_class, oracle_single(scaled, n * (n - 1) / 2)) << "d " << d << " n " << n;
      EXPECT_EQ(rep.single_class, rep.witnesses.empty());
    }
}

TEST(Counting, ModuliCounts) {
  auto m37 = mm_counts(2, 1, 1);
  EXPECT_EQ(m37.n_components, 4);
  EXPECT_EQ(covering_degree(32, 4, false), 8);
  EXPECT_EQ(mm_counts(1, 1, 1).n_components, 2);
  EXPECT_EQ(covering_degree(24, 2, false), 12);
  EXPECT_EQ(covering_degree(24, 2, true), 24);
  EXPECT_THROW(mm_counts(1, 1, 3), std::invalid_argument);
  EXPECT_THROW(covering_degree(25, 2, false), std::domain_error);
}

// 38 and 39 share a root lattice and count once.
TEST(Counting, RankSeventeenComponentTally) {
  auto cat = load_catalog();
  std::map<std::string, int> by_root;
  for (const auto& r : cat.rows) {
    if (rank_of(r.symbols()) != 17) continue;
    ASSERT_TRUE(r.rank17) << r.id;
    by_root[r.root] = mm_counts(r.rank17->I3, r.genus_size, r.rank17->I2).n_components;
  }
  EXPECT_EQ(by_root.size(), 25u);
  std::map<int, int> tally;
  for (const auto& [root, n] : by_root) tally[n]++;
  EXPECT_EQ(tally, (std::map<int, int>{{1, 18}, {2, 4}, {4, 3}}));
}
