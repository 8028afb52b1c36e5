#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ambi/catalog.hpp"

using namespace ambi;

namespace {

std::string catalog_text() {
  std::ifstream in(AMBI_DEFAULT_CATALOG);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Catalog& shared() {
  static const Catalog cat = load_catalog();
  return cat;
}

}  // namespace

TEST(Catalog, LoadsWithChecksum) {
  const auto& cat = shared();
  EXPECT_EQ(cat.rows.size(), 50u);
  EXPECT_EQ(cat.checksum, "fnv1a64:553c12a0eb0d60a4");
  auto j = json::parse(catalog_text());
  EXPECT_EQ(checksum_of(j.at("rows")), cat.checksum);
  for (std::size_t i = 0; i < cat.rows.size(); ++i) EXPECT_EQ(cat.rows[i].id, static_cast<int>(i));
  EXPECT_THROW(cat.row(50), std::out_of_range);
}

TEST(Catalog, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Catalog, RejectsTamperedOrMalformed) {
  auto j = json::parse(catalog_text());
  j["rows"][3]["dim"] = 99;
  EXPECT_ANY_THROW(parse_catalog(j.dump()));
  EXPECT_NO_THROW(parse_catalog(j.dump(), false));
  auto k = json::parse(catalog_text());
  k["version"] = 2;
  EXPECT_THROW(parse_catalog(k.dump()), std::invalid_argument);
  auto m = json::parse(catalog_text());
  m["rows"][0].erase("root");
  EXPECT_ANY_THROW(parse_catalog(m.dump(), false));
  EXPECT_ANY_THROW(parse_catalog("{not json"));
  EXPECT_THROW(load_catalog("/nonexistent/strata.json"), std::runtime_error);
}

TEST(CatalogProperty, RowInvariants) {
  for (const auto& r : shared().rows) {
    auto syms = r.symbols();
    EXPECT_EQ(r.dim, 18 - rank_of(syms)) << r.id;
    auto fibers = row_fibers(r);
    EXPECT_EQ(euler_sum(fibers), 24) << r.id;
    auto sorted = syms;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(fiber_root_lattice(fibers), sorted) << r.id;
    long long mw = 1;
    for (long long m : r.mw) mw *= m;
    auto F = root_discriminant(syms);
    EXPECT_EQ(static_cast<long long>(row_subgroup(r, F).elements.size()), mw) << r.id;
  }
}

TEST(Catalog, IndexEighteenRootsAreD4PlusA) {
  for (int id = 24; id <= 49; ++id) {
    auto syms = shared().row(id).symbols();
    int d4 = 0;
    for (const auto& s : syms) {
      if (s.type == 'D') {
        EXPECT_EQ(s.n, 4) << id;
        ++d4;
      } else {
        EXPECT_EQ(s.type, 'A') << id;
      }
    }
    EXPECT_EQ(d4, 1) << id;
    EXPECT_EQ(shared().row(id).psl_index, 18) << id;
  }
}

TEST(Catalog, RankSeventeenIndexThree) {
  std::vector<int> doubled;
  for (const auto& r : shared().rows)
    if (r.rank17 && r.rank17->I3 == 2) doubled.push_back(r.id);
  EXPECT_EQ(doubled, (std::vector<int>{37, 48, 49}));
  std::vector<int> two;
  for (const auto& r : shared().rows)
    if (r.embeddings == 2) two.push_back(r.id);
  EXPECT_EQ(two, (std::vector<int>{17, 21, 37, 48, 49}));
}

TEST(Catalog, CoveringData) {
  struct Expect {
    int id, comps;
    long long sM, degree;
    int genus;
  };
  const std::vector<Expect> table = {{35, 2, 8, 4, 0},   {37, 4, 32, 8, 0},     {38, 2, 24, 24, 1}, {42, 2, 96, 48, 13},
                                     {44, 2, 24, 12, 0}, {48, 4, 192, 48, 1}, {49, 4, 384, 96, 5}};
  for (const auto& e : table) {
    const auto& r = shared().row(e.id);
    ASSERT_TRUE(r.covering) << e.id;
    EXPECT_EQ(r.covering->components, e.comps) << e.id;
    EXPECT_EQ(r.covering->sM_mod_sign, e.sM) << e.id;
    EXPECT_EQ(r.covering->degree, e.degree) << e.id;
    EXPECT_EQ(r.covering->genus, e.genus) << e.id;
    auto m = mm_counts(r.rank17->I3, r.genus_size, r.rank17->I2);
    EXPECT_EQ(m.n_components, e.comps) << e.id;
    EXPECT_EQ(covering_degree(e.sM, m.n_components, r.conjugate_partner.has_value()), e.degree) << e.id;
  }
  EXPECT_EQ(shared().row(38).conjugate_partner, 39);
  EXPECT_EQ(shared().row(39).conjugate_partner, 38);
}

TEST(Catalog, VerifyAllRowsPass) {
  auto s = verify_all(shared(), 1);
  EXPECT_EQ(s.passed, 50);
  EXPECT_EQ(s.failed, 0);
  for (const auto& r : s.rows) {
    EXPECT_FALSE(r.checks.empty()) << r.id;
    for (const auto& c : r.checks)
      EXPECT_NE(c.status, CheckStatus::fail) << "row " << r.id << " " << c.name << ": " << c.detail;
  }
}

TEST(Catalog, VerifyDetectsCorruptedRow) {
  auto r = shared().row(6);
  r.mw = {4};
  EXPECT_FALSE(verify_row(r, &shared()).ok());
  auto s = shared().row(30);
  s.dim = 2;
  EXPECT_FALSE(verify_row(s, &shared()).ok());
  auto t = shared().row(44);
  t.covering->degree = 13;
  EXPECT_FALSE(verify_row(t, &shared()).ok());
}

TEST(Catalog, RederiveHighIndex) {
  const std::vector<std::pair<int, std::size_t>> cases = {{9, 4}, {12, 6}, {18, 26}};
  for (auto [index, classes] : cases) {
    auto rep = rederive_high_index(shared(), index);
    EXPECT_TRUE(rep.ok) << index << ": " << rep.detail;
    EXPECT_EQ(rep.classes, classes) << index;
    EXPECT_EQ(rep.lines.size(), classes);
  }
  EXPECT_THROW(rederive_high_index(shared(), 10), std::invalid_argument);
}
