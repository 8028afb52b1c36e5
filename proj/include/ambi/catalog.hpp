#pragma once
// The strata catalog: loading, checksum, and cross-checks of every row
// against the computational modules.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ambi/budget.hpp"
#include "ambi/congruence.hpp"
#include "ambi/dynkin.hpp"
#include "ambi/fibers.hpp"
#include "ambi/genus.hpp"
#include "ambi/hurwitz.hpp"
#include "ambi/permcover.hpp"
#include "ambi/ratfun.hpp"

#ifndef AMBI_DEFAULT_CATALOG
#define AMBI_DEFAULT_CATALOG "catalog/strata.v1.json"
#endif

namespace ambi {

using nlohmann::json;

struct JEData {
  int degree = 0;
  std::vector<Partition> A, B;  // ramification over j = 0 and j = 1728
  std::optional<std::pair<int, Partition>> cusp;  // (cusp width, partition over it)
  int printed_simple = 0;
  int n_Istar = 0, n_IVstar = 0;
};

struct TripleRecord {
  int line = 0;
  std::string mu0, mu1, muInf, repaired;
};

struct Rank17Record {
  int I1 = 0, I2 = 0, I3 = 0;
  long long sM_mod_sign = 0;
  int genus = 0;
};

struct CoveringRecord {
  int components = 0;
  long long sM_mod_sign = 0, degree = 0;
  int genus = 0, genus_bpt = 0;
};

struct StratumRecord {
  int id = 0;
  std::string root;
  std::vector<long long> mw;
  int dim = 0, psl_index = 0, kernel = 0;
  bool contains_minus_id = false;
  std::optional<int> shimada;
  std::string shimada_mw, note;
  std::optional<std::string> group;
  Passport passport;
  JEData jE;
  std::vector<std::vector<std::string>> G;
  int embeddings = 1, genus_size = 1;
  std::optional<TripleRecord> triple;
  std::optional<Rank17Record> rank17;
  std::optional<CoveringRecord> covering;
  std::optional<std::pair<int, int>> gamma_indices;
  std::optional<int> conjugate_partner;

  std::vector<RootSymbol> symbols() const { return parse_root_lattice(root); }
};

struct Catalog {
  std::string schema;
  int version = 0;
  std::string checksum;
  std::vector<StratumRecord> rows;

  const StratumRecord& row(int id) const {
    for (const auto& r : rows)
      if (r.id == id) return r;
    throw std::out_of_range("no catalog row " + std::to_string(id));
  }
};

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string checksum_of(const json& rows) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(rows.dump())));
  return buf;
}

namespace detail {

inline Partition to_partition(const json& j) {
  Partition p = j.get<Partition>();
  std::sort(p.rbegin(), p.rend());
  return p;
}

inline StratumRecord parse_row(const json& j) {
  StratumRecord r;
  try {
    r.id = j.at("id").get<int>();
    r.root = j.at("root").get<std::string>();
    r.mw = j.at("mw").get<std::vector<long long>>();
    r.dim = j.at("dim").get<int>();
    r.psl_index = j.at("psl_index").get<int>();
    r.kernel = j.at("kernel").get<int>();
    r.contains_minus_id = j.at("contains_minus_id").get<bool>();
    if (!j.at("shimada").is_null()) r.shimada = j.at("shimada").get<int>();
    r.shimada_mw = j.at("shimada_mw").get<std::string>();
    r.note = j.at("note").get<std::string>();
    if (!j.at("group").is_null()) r.group = j.at("group").get<std::string>();
    const auto& p = j.at("passport");
    if (p.size() != 3) throw std::invalid_argument("passport needs three partitions");
    r.passport = {to_partition(p[0]), to_partition(p[1]), to_partition(p[2])};
    const auto& e = j.at("jE");
    r.jE.degree = e.at("degree").get<int>();
    for (const auto& x : e.at("A")) r.jE.A.push_back(to_partition(x));
    for (const auto& x : e.at("B")) r.jE.B.push_back(to_partition(x));
    if (!e.at("cusp").is_null())
      r.jE.cusp = std::pair{e.at("cusp").at("width").get<int>(), to_partition(e.at("cusp").at("parts"))};
    r.jE.printed_simple = e.at("printed_simple").get<int>();
    r.jE.n_Istar = e.at("n_Istar").get<int>();
    r.jE.n_IVstar = e.at("n_IVstar").get<int>();
    r.G = j.at("G").get<std::vector<std::vector<std::string>>>();
    r.embeddings = j.at("embeddings").get<int>();
    r.genus_size = j.at("genus_size").get<int>();
    if (j.contains("triple")) {
      const auto& t = j.at("triple");
      r.triple = TripleRecord{t.at("line").get<int>(), t.at("mu0").get<std::string>(), t.at("mu1").get<std::string>(),
                              t.at("muInf").get<std::string>(), t.at("repaired").get<std::string>()};
    }
    if (j.contains("rank17")) {
      const auto& t = j.at("rank17");
      r.rank17 = Rank17Record{t.at("I1").get<int>(), t.at("I2").get<int>(), t.at("I3").get<int>(),
                              t.at("sM_mod_sign").get<long long>(), t.at("genus").get<int>()};
    }
    if (j.contains("covering")) {
      const auto& t = j.at("covering");
      r.covering = CoveringRecord{t.at("components").get<int>(), t.at("sM_mod_sign").get<long long>(),
                                  t.at("degree").get<long long>(), t.at("genus").get<int>(),
                                  t.at("genus_bpt").get<int>()};
    }
    if (j.contains("gamma_indices"))
      r.gamma_indices = std::pair{j.at("gamma_indices").at("in_O_plus").get<int>(),
                                  j.at("gamma_indices").at("over_plus").get<int>()};
    if (j.contains("conjugate_partner")) r.conjugate_partner = j.at("conjugate_partner").get<int>();
  } catch (const json::exception& ex) {
    throw std::invalid_argument("malformed catalog record: " + std::string(ex.what()));
  }
  return r;
}

}  // namespace detail

inline Catalog parse_catalog(const std::string& text, bool check_sum = true) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument("catalog is not valid JSON: " + std::string(ex.what()));
  }
  Catalog c;
  c.schema = j.value("schema", "");
  c.version = j.value("version", 0);
  c.checksum = j.value("checksum", "");
  if (c.schema != "ambi-strata" || c.version != 1) throw std::invalid_argument("unsupported catalog schema/version");
  if (check_sum && checksum_of(j.at("rows")) != c.checksum)
    throw std::invalid_argument("catalog checksum mismatch (expected " + checksum_of(j.at("rows")) + ")");
  for (const auto& row : j.at("rows")) c.rows.push_back(detail::parse_row(row));
  return c;
}

inline Catalog load_catalog(const std::string& path = AMBI_DEFAULT_CATALOG) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

// ----------------------------------------------------------------- checks

enum class CheckStatus { pass, fail, note, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::note: return "note";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::string ref;  // catalog fields the check consumes
};

struct RowReport {
  int id = 0;
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Kodaira fibres implied by the cusp widths, the pole behaviour of j_E and
// the I0* count: a cusp of width w over which j_E has partition p gives I_{w p_i}.
inline FiberConfiguration row_fibers(const StratumRecord& r) {
  FiberConfiguration c;
  bool cusp_used = false;
  for (int w : r.passport.pInf) {
    Partition over(static_cast<std::size_t>(r.jE.degree), 1);
    if (r.jE.cusp && !cusp_used && r.jE.cusp->first == w) {
      over = r.jE.cusp->second;
      cusp_used = true;
    }
    for (int p : over) c[FiberType::I(w * p)] += 1;
  }
  if (r.jE.n_Istar) c[FiberType::Istar(0)] += r.jE.n_Istar;
  if (r.jE.n_IVstar) c[FiberType::of(Kodaira::IVstar)] += r.jE.n_IVstar;
  return c;
}

inline std::vector<RootSymbol> fiber_root_lattice(const FiberConfiguration& c) {
  std::vector<RootSymbol> out;
  for (const auto& [t, n] : c) {
    std::string ade = fiber_invariants(t).ade;
    if (ade.empty()) continue;
    for (int k = 0; k < n; ++k)
      for (const auto& s : parse_root_lattice(ade)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline IsotropicSubgroup row_subgroup(const StratumRecord& r, const FiniteQuadraticForm& F) {
  auto syms = r.symbols();
  std::vector<int> gens;
  for (const auto& labels : r.G) gens.push_back(label_class(F, syms, labels));
  return make_subgroup(F, gens);
}

// invariant factors of a finite abelian group given as a subgroup of F
inline std::vector<long long> group_type(const FiniteQuadraticForm& F, const std::vector<int>& elements) {
  std::vector<long long> type;
  long long size = static_cast<long long>(elements.size());
  // the exponent, then recurse on the quotient size; enough for rank <= 2
  long long e = 1;
  for (int x : elements) e = std::lcm(e, static_cast<long long>(F.order(x)));
  if (size == 1) return {};
  type.push_back(e);
  if (size / e > 1) type.push_back(size / e);
  if (type.size() == 2 && type[0] % type[1] != 0) throw std::logic_error("subgroup has rank > 2");
  return type;
}

struct VerifyOptions {
  bool lattices = true;  // overlattice root counts and Dynkin images
};

namespace detail {

inline int jtable_for_passport(const Passport& p) {
  for (const auto& row : jtable())
    if (row.passport.p0 == p.p0 && row.passport.p1 == p.p1 && row.passport.pInf == p.pInf) return row.row;
  return 0;
}

template <class F>
void run_check(RowReport& rep, const std::string& name, const std::string& ref, F&& body) {
  Check c{name, CheckStatus::pass, "", ref};
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.status = CheckStatus::fail;
    c.detail = std::string("error: ") + ex.what();
  }
  rep.checks.push_back(std::move(c));
}

inline void expect(Check& c, bool cond, const std::string& why) {
  if (!cond) {
    c.status = CheckStatus::fail;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += why;
  }
}

inline std::string str_partition(const Partition& p) { return format_partition(p); }

}  // namespace detail

inline RowReport verify_row(const StratumRecord& r, const Catalog* cat = nullptr, VerifyOptions opt = {}) {
  using detail::expect;
  using detail::run_check;
  RowReport rep{r.id, {}};
  const auto syms = r.symbols();
  const int rank = rank_of(syms);
  const int d = r.psl_index;
  const int e2 = count_parts(r.passport.p1, 1), e3 = count_parts(r.passport.p0, 1);

  run_check(rep, "dimension", "dim, root", [&](Check& c) {
    expect(c, r.dim == 18 - rank, "dim != 18 - rank(R) = " + std::to_string(18 - rank));
    int via_fibers = config_dimension(row_fibers(r));
    expect(c, via_fibers == r.dim, "fibre-count dimension " + std::to_string(via_fibers));
    c.detail = c.detail.empty() ? "dim " + std::to_string(r.dim) + ", rank " + std::to_string(rank) : c.detail;
  });

  run_check(rep, "euler", "psl_index, jE", [&](Check& c) {
    int e = d * r.jE.degree + 6 * r.jE.n_Istar + 8 * r.jE.n_IVstar;
    expect(c, e == 24, "budget sum " + std::to_string(e));
    expect(c, euler_sum(row_fibers(r)) == 24, "fibre Euler sum " + std::to_string(euler_sum(row_fibers(r))));
    c.detail = c.detail.empty() ? format_configuration(row_fibers(r)) : c.detail;
  });

  run_check(rep, "passport", "passport, psl_index", [&](Check& c) {
    const auto& p = r.passport;
    auto sum = [](const Partition& q) { return std::accumulate(q.begin(), q.end(), 0); };
    expect(c, sum(p.p0) == d && sum(p.p1) == d && sum(p.pInf) == d, "partitions do not sum to the index");
    for (int x : p.p0) expect(c, x == 1 || x == 3, "mu0 part " + std::to_string(x));
    for (int x : p.p1) expect(c, x == 1 || x == 2, "mu1 part " + std::to_string(x));
    expect(c, (d - e2) % 2 == 0 && (d - e3) % 3 == 0, "index incongruent to torsion counts");
    int g = genus_from_cycle_counts(d, static_cast<int>(p.p0.size()), static_cast<int>(p.p1.size()),
                                    static_cast<int>(p.pInf.size()));
    expect(c, g == 0, "genus " + std::to_string(g));
    c.detail = c.detail.empty() ? "e2=" + std::to_string(e2) + " e3=" + std::to_string(e3) : c.detail;
  });

  run_check(rep, "cusps-root", "passport, jE, root", [&](Check& c) {
    auto from_fibers = fiber_root_lattice(row_fibers(r));
    auto sorted = syms;
    std::sort(sorted.begin(), sorted.end());
    expect(c, from_fibers == sorted, "fibres give " + format_root_lattice(from_fibers));
  });

  run_check(rep, "rami", "jE, passport", [&](Check& c) {
    BranchDataJE b{r.jE.degree, r.jE.B, r.jE.A, {}, r.jE.n_IVstar};
    auto rr = rami_check(b, e2, e3, r.jE.degree);
    for (const auto& v : rr.violations) expect(c, false, v);
    expect(c, static_cast<int>(r.jE.B.size()) == e2, "2-torsion point count");
    expect(c, static_cast<int>(r.jE.A.size()) == e3, "3-torsion point count");
    for (const auto& q : r.jE.A) expect(c, std::accumulate(q.begin(), q.end(), 0) == r.jE.degree, "A sum");
    for (const auto& q : r.jE.B) expect(c, std::accumulate(q.begin(), q.end(), 0) == r.jE.degree, "B sum");
  });

  run_check(rep, "jE-branching", "jE.printed_simple", [&](Check& c) {
    // Riemann-Hurwitz for j_E; reported, not gating
    int ram = 0;
    for (const auto& q : r.jE.A) ram += r.jE.degree - static_cast<int>(q.size());
    for (const auto& q : r.jE.B) ram += r.jE.degree - static_cast<int>(q.size());
    if (r.jE.cusp) ram += r.jE.degree - static_cast<int>(r.jE.cusp->second.size());
    int simple = 2 * r.jE.degree - 2 - ram;
    c.detail = "simple branch points " + std::to_string(simple);
    if (simple != r.jE.printed_simple) {
      c.status = CheckStatus::note;
      c.detail += ", printed " + std::to_string(r.jE.printed_simple);
    }
  });

  run_check(rep, "budget", "psl_index, jE", [&](Check& c) {
    if (d == 1) {
      c.status = CheckStatus::skip;
      c.detail = "index 1 is outside the budget table";
      return;
    }
    int hits = 0;
    for (const auto& b : enumerate_budget())
      if (!b.discard && b.deg_jG == d && b.deg_jE == r.jE.degree && b.nIstar == r.jE.n_Istar &&
          b.nIVstar == r.jE.n_IVstar)
        ++hits;
    expect(c, hits == 1, std::to_string(hits) + " matching budget columns");
  });

  if (r.id <= 7) {
    run_check(rep, "congruence", "psl_index, kernel, mw", [&](Check& c) {
      auto H = catalog_group(r.id);
      expect(c, index_in_psl2(H) == d, "PSL index " + std::to_string(index_in_psl2(H)));
      expect(c, contains_minus_id(H) == r.contains_minus_id, "-id membership");
      expect(c, (r.kernel == 2) == r.contains_minus_id, "kernel vs -id flag");
      auto [n, m] = mw_torsion(schreier_generators(H));
      auto type = normalize_group_type(r.mw);
      std::vector<long long> got = normalize_group_type({n, m});
      expect(c, got == type, "torsion from generators (" + std::to_string(n) + "," + std::to_string(m) + ")");
      c.detail = c.detail.empty() ? H.name : c.detail;
    });
    if (r.id >= 1) {
      run_check(rep, "j-map", "passport", [&](Check& c) {
        int t = detail::jtable_for_passport(r.passport);
        expect(c, t != 0, "no j-function with this passport");
        if (t) expect(c, verify_jtable_row(t), "j-function identity fails");
        c.detail = c.detail.empty() ? jtable_row(t).group : c.detail;
      });
    }
  }

  if (r.triple) {
    run_check(rep, "triple", "triple, passport", [&](Check& c) {
      auto t = PermTriple::parse(r.triple->mu0, r.triple->mu1, d);
      auto v = validate(t);
      expect(c, v.ok, v.reason);
      if (!v.ok) return;
      expect(c, t.muInf == parse_cycles(r.triple->muInf, d), "stored muInf differs from (mu0 mu1)^-1");
      expect(c, passport(t) == r.passport, "passport differs");
      expect(c, genus(t) == 0, "genus");
      if (r.conjugate_partner && cat) {
        const auto& other = cat->row(*r.conjugate_partner);
        auto u = PermTriple::parse(other.triple->mu0, other.triple->mu1, d);
        expect(c, !is_conjugate(t, u), "conjugate to its partner row");
        expect(c, passport(u) == r.passport, "partner passport differs");
      }
      if (!r.triple->repaired.empty()) c.detail = "source line repaired: " + r.triple->repaired;
    });
  }

  if (opt.lattices) {
    std::optional<FiniteQuadraticForm> F;
    std::optional<IsotropicSubgroup> G;
    std::optional<IntegerLattice> L;
    run_check(rep, "isotropic", "root, mw, G", [&](Check& c) {
      F = root_discriminant(syms);
      G = row_subgroup(r, *F);
      expect(c, group_type(*F, G->elements) == normalize_group_type(r.mw), "G has the wrong isomorphism type");
      expect(c, is_isotropic(*F, G->elements), "G is not isotropic");
      expect(c, adds_no_roots(*F, *G), "a coset of G contains a root");
      L = overlattice(*F, *G);
      long long before = root_count(root_lattice(syms)), after = root_count(*L);
      long long closed = 0;
      for (const auto& s : syms) closed += ade_root_count(s);
      expect(c, before == closed, "root count of R differs from closed form");
      expect(c, after == before, "overlattice has " + std::to_string(after) + " roots, R has " + std::to_string(before));
      // torsion sections meet every additive fibre away from the identity component
      std::size_t k = 0;
      for (std::size_t comp = 0; comp < syms.size(); ++comp) {
        std::size_t width = F->pieces()[comp].orders.size();
        if (syms[comp].type == 'D')
          for (int e : G->elements) {
            if (e == 0) continue;
            bool zero = true;
            for (std::size_t i = 0; i < width; ++i) zero &= F->coords(e)[k + i] == 0;
            expect(c, !zero, "element of G trivial on a D-component");
          }
        k += width;
      }
      c.detail = c.detail.empty() ? "roots " + std::to_string(after) : c.detail;
    });

    run_check(rep, "genus", "root, G", [&](Check& c) {
      if (!L) throw std::runtime_error("no overlattice");
      auto M = with_hyperbolic_plane(*L);
      expect(c, M.rank() == 2 + rank, "rank(U + L)");
      auto g = single_genus_report(M);
      expect(c, g.single_class, "witness k = " + (g.witnesses.empty() ? std::string() : g.witnesses.front().str()));
      Z expect_det = 1;
      for (const auto& s : syms) expect_det *= ade_discriminant_order(s);
      expect(c, g.det * static_cast<long long>(G->elements.size()) * static_cast<long long>(G->elements.size()) == expect_det,
             "|det| != |D(R)| / |G|^2");
      if (c.detail.empty()) {
        c.detail = "n=" + std::to_string(g.n) + " |det|=" + g.det.str();
        if (!g.prime_rule) c.detail += " (prime-wise rule inconclusive at p=" + g.prime_rule_hits.front().str() + ")";
      }
    });

    if (r.rank17) {
      run_check(rep, "dynkin-image", "rank17.sM_mod_sign, covering", [&](Check& c) {
        if (!G) throw std::runtime_error("no subgroup");
        auto im = stabilized_image(dynkin_group(syms), *F, *G);
        expect(c, im.image_mod_sign == r.rank17->sM_mod_sign,
               "computed " + std::to_string(im.image_mod_sign) + ", stored " + std::to_string(r.rank17->sM_mod_sign));
        if (r.covering) expect(c, im.image_mod_sign == r.covering->sM_mod_sign, "covering value differs");
        c.detail = c.detail.empty() ? "|S_M/(+-1)| = " + std::to_string(im.image_mod_sign) : c.detail;
      });
    }
  }

  if (r.rank17) {
    run_check(rep, "counting", "rank17, covering, embeddings", [&](Check& c) {
      expect(c, r.rank17->I3 == r.embeddings, "I3 differs from the embedding count");
      auto m = mm_counts(r.rank17->I3, r.genus_size, r.rank17->I2);
      if (r.covering) {
        expect(c, m.n_components == r.covering->components, "components " + std::to_string(m.n_components));
        long long deg = covering_degree(r.covering->sM_mod_sign, m.n_components, r.conjugate_partner.has_value());
        expect(c, deg == r.covering->degree, "degree " + std::to_string(deg));
      } else {
        expect(c, m.n_components == 1, "multi-component row without covering data");
      }
      c.detail = c.detail.empty() ? "components " + std::to_string(m.n_components) : c.detail;
    });
  }
  return rep;
}

struct VerifySummary {
  std::vector<RowReport> rows;
  int passed = 0, failed = 0;
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

inline VerifySummary verify_all(const Catalog& cat, unsigned jobs = 1, VerifyOptions opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  VerifySummary s;
  s.rows.resize(cat.rows.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cat.rows.size();) s.rows[i] = verify_row(cat.rows[i], &cat, opt);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& r : s.rows) (r.ok() ? s.passed : s.failed)++;
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

// ------------------------------------------------------------ rederivation

struct RederiveReport {
  int index = 0;
  std::size_t classes = 0;
  std::vector<std::string> lines;  // one per enumerated class
  bool ok = true;
  std::string detail;
};

inline RederiveReport rederive_high_index(const Catalog& cat, int index, unsigned jobs = 1) {
  RederiveReport rep;
  rep.index = index;
  EnumConstraints c;
  c.degree = index;
  c.genus = 0;
  c.jobs = jobs;
  int lo = 0, hi = -1;
  if (index == 9) {
    c.e2 = 1;
    c.e3 = 0;
    lo = 8, hi = 11;
  } else if (index == 12) {
    c.torsion_free = true;
    lo = 12, hi = 17;
  } else if (index == 18) {
    c.torsion_free = true;
    lo = 24, hi = 49;
  } else {
    throw std::invalid_argument("rederivation is defined for index 9, 12 and 18");
  }
  auto classes = enumerate_triples(c);
  rep.classes = classes.size();
  std::vector<int> used(classes.size(), 0);
  for (int id = lo; id <= hi; ++id) {
    const auto& row = cat.row(id);
    int match = -1, count = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      bool same = row.triple ? is_conjugate(classes[k], PermTriple::parse(row.triple->mu0, row.triple->mu1, index))
                             : cusp_partition(classes[k]) == row.passport.pInf;
      if (same) {
        match = static_cast<int>(k);
        ++count;
      }
    }
    if (count != 1) {
      rep.ok = false;
      rep.detail += "row " + std::to_string(id) + " matches " + std::to_string(count) + " classes; ";
      continue;
    }
    used[static_cast<std::size_t>(match)]++;
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (used[k] != 1) {
      rep.ok = false;
      rep.detail += "class " + std::to_string(k) + " matched " + std::to_string(used[k]) + " rows; ";
    }
    rep.lines.push_back(format_cycles(classes[k].mu0) + " " + format_cycles(classes[k].mu1) + " cusps " +
                        format_partition(cusp_partition(classes[k])));
  }
  return rep;
}

}  // namespace ambi
