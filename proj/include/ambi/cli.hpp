#pragma once
// Command-line front end. `run` parses argv, dispatches to a module and
// renders one Report; tools/ambi.cpp is a thin wrapper around it.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "budget.hpp"
#include "catalog.hpp"
#include "congruence.hpp"
#include "dynkin.hpp"
#include "fibers.hpp"
#include "genus.hpp"
#include "hurwitz.hpp"
#include "permcover.hpp"
#include "ratfun.hpp"
#include "report.hpp"

namespace ambi::cli {

inline constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2;

struct Options {
  std::string emit = "text";
  unsigned jobs = 1;
  std::string catalog = AMBI_DEFAULT_CATALOG;
  bool timing = false;
};

// "a,b;c,d"
inline Mat2 parse_matrix(const std::string& s) {
  std::vector<long long> v;
  std::string tok;
  for (char ch : s + ";") {
    if (ch == ',' || ch == ';') {
      if (tok.empty()) throw std::invalid_argument("bad matrix '" + s + "'");
      v.push_back(std::stoll(tok));
      tok.clear();
    } else if (ch != ' ') {
      tok.push_back(ch);
    }
  }
  if (v.size() != 4) throw std::invalid_argument("matrix needs four entries: a,b;c,d");
  return {v[0], v[1], v[2], v[3]};
}

// Largest label in cycle notation, read the same way parse_cycles reads it
// for degrees up to 9.
inline int infer_degree(const std::string& text) {
  int best = 0;
  std::size_t i = 0;
  bool separated = false;
  for (char ch : text)
    if (ch == ' ' || ch == ',') separated = true;
  std::string tok;
  for (; i <= text.size(); ++i) {
    char ch = i < text.size() ? text[i] : ')';
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      tok.push_back(ch);
      if (!separated) {
        best = std::max(best, std::stoi(tok));
        tok.clear();
      }
    } else {
      if (!tok.empty()) best = std::max(best, std::stoi(tok));
      tok.clear();
    }
  }
  return best;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

inline std::vector<long long> parse_type(const std::string& s) {
  std::vector<long long> t;
  for (const auto& x : split(s, ','))
    if (!x.empty()) t.push_back(std::stoll(x));
  return t;
}

inline std::string join(const std::vector<long long>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string type_str(const std::vector<long long>& v) {
  if (v.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " x " : "") + ("Z/" + std::to_string(v[i]));
  return s;
}

// --------------------------------------------------------------- fibers

inline void fibers_row(ReportTable& t, FiberType f, int count = 1) {
  auto inv = fiber_invariants(f);
  t.rows.push_back({f.symbol(), std::to_string(count), std::to_string(inv.euler), inv.ade.empty() ? "-" : inv.ade,
                    inv.monodromy.str()});
}

inline Report fibers_classify(int nu2, int nu3, int nd) {
  Report r{"fibers classify"};
  r.inputs = {{"nu2", nu2}, {"nu3", nu3}, {"ndelta", nd}};
  ReportTable t{{"type", "count", "euler", "ade", "monodromy"}};
  fibers_row(t, classify_fiber({nu2, nu3, nd}));
  r.tables.push_back(t);
  return r;
}

inline Report fibers_config(const std::string& cfg) {
  Report r{"fibers config-dim"};
  r.inputs = {{"config", cfg}};
  auto c = parse_configuration(cfg);
  ReportTable t{{"type", "count", "euler", "ade", "monodromy"}};
  for (auto it = c.rbegin(); it != c.rend(); ++it) fibers_row(t, it->first, it->second);
  r.tables.push_back(t);
  int e = euler_sum(c);
  r.lines.push_back("config " + format_configuration(c));
  r.lines.push_back("euler " + std::to_string(e));
  r.lines.push_back("trivial lattice rank " + std::to_string(trivial_rank(c)));
  r.lines.push_back("dim " + std::to_string(config_dimension(c)));
  r.add("euler-24", e == 24, "Euler sum " + std::to_string(e));
  return r;
}

inline Report fibers_monodromy(const std::string& m, std::optional<bool> star) {
  Report r{"fibers monodromy"};
  r.inputs = {{"matrix", m}};
  if (star) r.inputs["star"] = *star;
  ReportTable t{{"type", "count", "euler", "ade", "monodromy"}};
  for (auto f : fiber_from_monodromy(parse_matrix(m), star)) fibers_row(t, f);
  r.tables.push_back(t);
  return r;
}

inline Report fibers_tate() {
  Report r{"fibers tate"};
  ReportTable t{{"type", "nu(g2)", "nu(g3)", "nu(Delta)"}};
  auto cell = [](int v, bool more) { return (more ? ">=" : "") + std::to_string(v); };
  for (const auto& c : tate_columns())
    t.rows.push_back({c.label, cell(c.nu2, c.nu2_more), cell(c.nu3, c.nu3_more),
                      c.nuDelta < 0 ? "-" : std::to_string(c.nuDelta)});
  r.tables.push_back(t);
  return r;
}

// ----------------------------------------------------------------- perm

inline void triple_row(ReportTable& t, std::size_t k, const PermTriple& x) {
  auto [e2, e3] = torsion_counts(x);
  t.rows.push_back({std::to_string(k + 1), format_cycles(x.mu0), format_cycles(x.mu1), format_cycles(x.muInf),
                    format_partition(cusp_partition(x)), std::to_string(e2), std::to_string(e3),
                    std::to_string(genus(x))});
}

inline Report perm_enumerate(const EnumConstraints& c, const std::string& method) {
  Report r{"perm enumerate"};
  r.inputs = {{"degree", c.degree}, {"torsion_free", c.torsion_free}, {"method", method}};
  if (c.e2) r.inputs["e2"] = *c.e2;
  if (c.e3) r.inputs["e3"] = *c.e3;
  if (c.genus) r.inputs["genus"] = *c.genus;
  if (c.cusp_count) r.inputs["cusps"] = *c.cusp_count;
  std::vector<PermTriple> out;
  if (method == "search") out = enumerate_triples(c);
  else if (method == "cosets") out = enumerate_triples_cosets(c);
  else if (method == "brute") out = enumerate_triples_brute(c);
  else throw std::invalid_argument("unknown method '" + method + "'");
  ReportTable t{{"#", "mu0", "mu1", "muInf", "cusps", "e2", "e3", "genus"}};
  for (std::size_t k = 0; k < out.size(); ++k) triple_row(t, k, out[k]);
  r.tables.push_back(t);
  r.lines.push_back("classes " + std::to_string(out.size()));
  return r;
}

inline Report perm_check(int d, const std::string& m0, const std::string& m1) {
  Report r{"perm check"};
  r.inputs = {{"degree", d}, {"mu0", m0}, {"mu1", m1}};
  auto t = PermTriple::parse(m0, m1, d);
  auto v = validate(t);
  r.add("valid", v.ok, v.reason);
  if (v.ok) {
    auto p = passport(t);
    r.lines.push_back("muInf " + format_cycles(t.muInf));
    r.lines.push_back("passport " + format_partition(p.p0) + " " + format_partition(p.p1) + " " +
                      format_partition(p.pInf));
    auto [e2, e3] = torsion_counts(t);
    r.lines.push_back("e2 " + std::to_string(e2) + ", e3 " + std::to_string(e3) + ", genus " +
                      std::to_string(genus(t)));
    r.add("transitive", is_transitive({t.mu0, t.mu1}, d));
  }
  return r;
}

inline Report perm_conjugate(int d, const std::string& a0, const std::string& a1, const std::string& b0,
                             const std::string& b1) {
  Report r{"perm conjugate"};
  r.inputs = {{"degree", d}, {"a", {a0, a1}}, {"b", {b0, b1}}};
  auto a = PermTriple::parse(a0, a1, d), b = PermTriple::parse(b0, b1, d);
  require_valid(a);
  require_valid(b);
  bool same = is_conjugate(a, b);
  r.lines.push_back(same ? "conjugate" : "not conjugate");
  r.lines.push_back("mirror conjugate " + std::string(is_conjugate(mirror(a), b) ? "yes" : "no"));
  return r;
}

// -------------------------------------------------------------- hurwitz

inline FactorizationTuple parse_tuple(const std::string& s, std::optional<int> degree) {
  int d = degree ? *degree : infer_degree(s);
  FactorizationTuple t{d, {}};
  for (const auto& part : split(s, ';')) t.sigmas.push_back(parse_cycles(part, d));
  return t;
}

inline std::string format_blocks(const BlockSystem& bs) {
  std::string s;
  for (const auto& b : bs) {
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
    s += "}";
  }
  return s;
}

inline Report hurwitz_factor(const std::string& tuple, int k, std::optional<int> degree) {
  Report r{"hurwitz factor"};
  r.inputs = {{"tuple", tuple}, {"k", k}};
  auto t = parse_tuple(tuple, degree);
  r.add("tuple", t.valid(), "degree " + std::to_string(t.degree) + ", product identity, transitive");
  if (!t.valid()) return r;
  auto bs = find_block_factorization(t, k);
  r.lines.push_back(bs ? "blocks " + format_blocks(*bs) : "no block factorization with k = " + std::to_string(k));
  std::vector<Partition> types;
  for (const auto& s : t.sigmas) types.push_back(cycle_type(s));
  if (types.size() >= 2)
    r.lines.push_back("divisibility test on the first two entries: " +
                      std::string(divisibility_factor_exists(types[0], types[1], k) ? "passes" : "fails"));
  return r;
}

inline Report hurwitz_orbit(const std::string& tuple, std::optional<int> degree, std::size_t budget) {
  Report r{"hurwitz orbit"};
  r.inputs = {{"tuple", tuple}, {"budget", budget}};
  auto t = parse_tuple(tuple, degree);
  r.add("tuple", t.valid(), "degree " + std::to_string(t.degree));
  if (!t.valid()) return r;
  auto orb = hurwitz_orbit(t, budget);
  r.lines.push_back("orbit size " + std::to_string(orb.size()));
  return r;
}

// --------------------------------------------------------------- budget

inline Report budget_table(const std::string& part) {
  Report r{"budget table"};
  r.inputs = {{"part", part}};
  std::vector<BudgetRow> rows;
  if (part == "low") rows = budget_part(true);
  else if (part == "high") rows = budget_part(false);
  else if (part == "all") rows = enumerate_budget();
  else throw std::invalid_argument("part must be low, high or all");
  ReportTable t{{"deg jG", "deg jE", "#I*", "#IV*", "e2", "e3", "discard"}, {}, true};
  for (const auto& b : rows)
    t.rows.push_back({std::to_string(b.deg_jG), std::to_string(b.deg_jE), std::to_string(b.nIstar),
                      std::to_string(b.nIVstar), std::to_string(b.e2), std::to_string(b.e3),
                      b.discard ? std::to_string(*b.discard) : ""});
  r.tables.push_back(t);
  r.lines.push_back("columns " + std::to_string(rows.size()));
  return r;
}

inline Report budget_dims() {
  Report r{"budget dims"};
  ReportTable t{{"deg jG", "e2", "e3", "poles", "max dim"}, {}, true};
  for (const auto& c : dimension_columns())
    t.rows.push_back({std::to_string(c.deg_jG), std::to_string(c.e2), std::to_string(c.e3), std::to_string(c.poles),
                      std::to_string(c.max_dim)});
  r.tables.push_back(t);
  return r;
}

// ----------------------------------------------------------- congruence

inline CongruenceSpec parse_kind(const std::string& kind, int n, int m) {
  CongruenceSpec g;
  g.n = n;
  g.m = m;
  if (kind == "gamma") g.kind = CongKind::Gamma;
  else if (kind == "gamma1") g.kind = CongKind::Gamma1;
  else if (kind == "gamma0") g.kind = CongKind::Gamma0;
  else if (kind == "gammam") g.kind = CongKind::GammaM;
  else throw std::invalid_argument("kind must be gamma, gamma0, gamma1 or gammam");
  check_spec(g);
  return g;
}

inline Report cong_index(const CongruenceSpec& g, const std::string& in) {
  Report r{"cong index"};
  r.inputs = {{"group", g.name()}, {"in", in}};
  long long idx;
  if (in == "psl") idx = index_in_psl2(g);
  else if (in == "sl") idx = index_in_sl2(g);
  else throw std::invalid_argument("--in must be sl or psl");
  r.lines.push_back(g.name() + " index in " + (in == "psl" ? "PSL(2,Z) " : "SL(2,Z) ") + std::to_string(idx));
  r.lines.push_back(std::string("contains -1: ") + (contains_minus_id(g) ? "yes" : "no"));
  return r;
}

inline Report cong_member(const CongruenceSpec& g, const std::string& m) {
  Report r{"cong member"};
  r.inputs = {{"group", g.name()}, {"matrix", m}};
  Mat2 M = parse_matrix(m);
  if (M.det() != 1) throw std::invalid_argument("matrix is not in SL(2,Z)");
  r.lines.push_back(M.str() + (in_congruence(M, g) ? " is in " : " is not in ") + g.name());
  return r;
}

inline Report cong_row(int row) {
  Report r{"cong row"};
  r.inputs = {{"row", row}};
  auto H = catalog_group(row);
  auto gens = schreier_generators(H);
  auto [n, m] = mw_torsion(gens);
  r.lines.push_back("group " + H.name);
  r.lines.push_back("PSL index " + std::to_string(index_in_psl2(H)) + ", SL index " + std::to_string(index_in_sl2(H)));
  r.lines.push_back(std::string("contains -1: ") + (contains_minus_id(H) ? "yes" : "no"));
  r.lines.push_back("generators " + std::to_string(gens.gens.size()));
  r.lines.push_back("torsion " + type_str(normalize_group_type({n, m})));
  return r;
}

// --------------------------------------------------------------- ratfun

inline Report ratfun_passport(const std::string& num, const std::string& den) {
  Report r{"ratfun passport"};
  r.inputs = {{"num", num}, {"den", den}};
  auto f = RationalMap::parse(num, den);
  auto p = branching_passport(f);
  r.lines.push_back("map " + f.str());
  r.lines.push_back("degree " + std::to_string(f.degree()));
  r.lines.push_back("passport " + format_partition(p.p0) + " " + format_partition(p.p1) + " " +
                    format_partition(p.pInf));
  r.lines.push_back(std::string("Belyi: ") + (is_belyi(f) ? "yes" : "no"));
  return r;
}

inline Report ratfun_jtable() {
  Report r{"ratfun jtable"};
  ReportTable t{{"row", "group", "j", "j - 1", "passport"}};
  for (const auto& row : jtable()) {
    t.rows.push_back({std::to_string(row.row), row.group, "(" + row.num + ")/(" + row.den + ")",
                      "(" + row.minus_one_num + ")/(" + row.den + ")",
                      format_partition(row.passport.p0) + " " + format_partition(row.passport.p1) + " " +
                          format_partition(row.passport.pInf)});
    r.add("j-row-" + std::to_string(row.row), verify_jtable_row(row.row), row.group);
  }
  r.tables.push_back(t);
  return r;
}

inline Report ratfun_weierstrass() {
  Report r{"ratfun weierstrass"};
  ReportTable t{{"family", "group", "g2", "g3", "Delta", "constant"}};
  for (const auto& w : weierstrass_families()) {
    auto c = verify_weierstrass_family(w.id);
    t.rows.push_back({w.id, w.group, w.g2, w.g3, w.delta, c.constant.str()});
    r.add("family-" + w.id, c.ok, "g2^3 - 27 g3^2 = " + c.constant.str() + " Delta");
  }
  r.tables.push_back(t);
  return r;
}

// ------------------------------------------------------------- lattices

inline Report lat_disc(const std::string& root) {
  Report r{"lat disc"};
  r.inputs = {{"root", root}};
  auto syms = parse_root_lattice(root);
  auto F = root_discriminant(syms);
  ReportTable t{{"generator", "order", "q"}};
  for (std::size_t i = 0; i < F.ngens(); ++i) {
    std::vector<long long> e(F.ngens(), 0);
    e[i] = 1;
    t.rows.push_back({"g" + std::to_string(i + 1), std::to_string(F.orders()[i]), F.q(F.index(e)).str()});
  }
  r.tables.push_back(t);
  std::vector<long long> orders = F.orders();
  r.lines.push_back("lattice " + format_root_lattice(syms) + ", rank " + std::to_string(rank_of(syms)));
  r.lines.push_back("|D| " + std::to_string(F.size()));
  r.lines.push_back("group " + type_str(orders));
  long long closed = 1;
  for (const auto& s : syms) closed *= ade_discriminant_order(s);
  r.add("order", closed == F.size(), "closed form " + std::to_string(closed));
  return r;
}

inline Report lat_isotropic(const std::string& root, const std::string& type, bool admissible, std::size_t limit) {
  Report r{"lat isotropic"};
  r.inputs = {{"root", root}, {"type", type}, {"admissible", admissible}};
  auto syms = parse_root_lattice(root);
  auto F = root_discriminant(syms);
  auto tv = parse_type(type);
  auto subs = admissible ? admissible_isotropics(F, tv) : isotropic_subgroups(F, tv);
  ReportTable t{{"#", "generators (coordinates)"}};
  for (std::size_t k = 0; k < subs.size() && k < limit; ++k) {
    std::string g;
    for (int x : subs[k].gens) g += "(" + join(F.coords(x)) + ")";
    t.rows.push_back({std::to_string(k + 1), g});
  }
  r.tables.push_back(t);
  r.lines.push_back("subgroups " + std::to_string(subs.size()));
  return r;
}

inline Report lat_roots(const std::string& root) {
  Report r{"lat roots"};
  r.inputs = {{"root", root}};
  auto syms = parse_root_lattice(root);
  long long n = root_count(root_lattice(syms)), closed = 0;
  for (const auto& s : syms) closed += ade_root_count(s);
  r.lines.push_back("roots " + std::to_string(n));
  r.add("closed-form", n == closed, "closed form " + std::to_string(closed));
  return r;
}

inline Report lat_image(const Catalog& cat, int row) {
  Report r{"lat image"};
  r.inputs = {{"row", row}, {"catalog", cat.checksum}};
  const auto& rec = cat.row(row);
  auto syms = rec.symbols();
  auto F = root_discriminant(syms);
  auto G = row_subgroup(rec, F);
  auto S = dynkin_group(syms);
  auto im = stabilized_image(S, F, G);
  r.lines.push_back("lattice " + rec.root);
  r.lines.push_back("|S_R| " + S.order.str());
  r.lines.push_back("|S_R^G| " + im.stabilizer_order.str());
  r.lines.push_back("|S_M| " + std::to_string(im.image_order));
  r.lines.push_back("|S_M/(+-1)| " + std::to_string(im.image_mod_sign));
  if (rec.rank17)
    r.add("stored", im.image_mod_sign == rec.rank17->sM_mod_sign, "stored " + std::to_string(rec.rank17->sM_mod_sign));
  return r;
}

inline Report lat_genus(const Catalog& cat, int row) {
  Report r{"lat check-genus"};
  r.inputs = {{"row", row}, {"catalog", cat.checksum}};
  const auto& rec = cat.row(row);
  auto F = root_discriminant(rec.symbols());
  auto L = overlattice(F, row_subgroup(rec, F));
  auto g = single_genus_report(with_hyperbolic_plane(L));
  r.lines.push_back("lattice U + " + rec.root + " saturated by " + type_str(normalize_group_type(rec.mw)));
  r.lines.push_back("n " + std::to_string(g.n) + ", |det| " + g.det.str() + ", 4^[n/2] |det| " + g.scaled.str());
  std::string w;
  for (const auto& k : g.witnesses) w += " " + k.str();
  r.lines.push_back("witnesses" + (w.empty() ? std::string(" none") : w));
  std::string hits;
  for (const auto& p : g.prime_rule_hits) hits += " " + p.str();
  r.lines.push_back(std::string("prime-wise rule: ") + (g.prime_rule ? "passes" : "inconclusive at" + hits));
  r.add("single-class", g.single_class);
  return r;
}

// -------------------------------------------------------------- catalog

inline void add_row_report(Report& r, const RowReport& rr, bool per_check) {
  if (per_check) {
    for (const auto& c : rr.checks)
      r.results.push_back({"row " + std::to_string(rr.id) + " " + c.name, to_string(c.status), c.detail, c.ref});
  } else {
    std::string failed;
    for (const auto& c : rr.checks)
      if (c.status == CheckStatus::fail) failed += (failed.empty() ? "" : ", ") + c.name + ": " + c.detail;
    r.results.push_back({"row " + std::to_string(rr.id), rr.ok() ? "pass" : "fail",
                         failed.empty() ? std::to_string(rr.checks.size()) + " checks" : failed, ""});
  }
}

inline Report catalog_verify(const Catalog& cat, std::optional<int> row, unsigned jobs, bool lattices, bool detail) {
  Report r{"catalog verify"};
  r.inputs = {{"catalog", cat.checksum}, {"lattices", lattices}};
  VerifyOptions opt{lattices};
  if (row) {
    r.inputs["row"] = *row;
    add_row_report(r, verify_row(cat.row(*row), &cat, opt), true);
    return r;
  }
  r.inputs["all"] = true;
  auto s = verify_all(cat, jobs, opt);
  for (const auto& rr : s.rows) add_row_report(r, rr, detail);
  r.lines.push_back("rows " + std::to_string(s.rows.size()) + ", passed " + std::to_string(s.passed) + ", failed " +
                    std::to_string(s.failed));
  r.seconds = s.seconds;
  return r;
}

inline Report catalog_rederive(const Catalog& cat, int index, unsigned jobs) {
  Report r{"catalog rederive"};
  r.inputs = {{"index", index}, {"catalog", cat.checksum}};
  auto rep = rederive_high_index(cat, index, jobs);
  r.lines = rep.lines;
  r.lines.push_back("classes " + std::to_string(rep.classes));
  r.add("match", rep.ok, rep.ok ? "every class matches exactly one catalog row" : rep.detail);
  return r;
}

inline Report catalog_show(const Catalog& cat, std::optional<int> row) {
  Report r{"catalog show"};
  r.inputs = {{"catalog", cat.checksum}};
  ReportTable t{{"id", "root", "MW", "dim", "index", "ker", "passport", "deg jE", "#I0*"}};
  for (const auto& rec : cat.rows) {
    if (row && rec.id != *row) continue;
    t.rows.push_back({std::to_string(rec.id), rec.root, type_str(normalize_group_type(rec.mw)), std::to_string(rec.dim),
                      std::to_string(rec.psl_index), std::to_string(rec.kernel),
                      format_partition(rec.passport.p0) + " " + format_partition(rec.passport.p1) + " " +
                          format_partition(rec.passport.pInf),
                      std::to_string(rec.jE.degree), std::to_string(rec.jE.n_Istar)});
  }
  if (row) {
    r.inputs["row"] = *row;
    const auto& rec = cat.row(*row);
    if (rec.triple) r.lines.push_back("triple " + rec.triple->mu0 + " ; " + rec.triple->mu1);
    for (const auto& g : rec.G) {
      std::string s;
      for (const auto& x : g) s += (s.empty() ? "" : " ") + x;
      r.lines.push_back("G generator " + s);
    }
    if (!rec.note.empty()) r.lines.push_back("note " + rec.note);
  }
  r.tables.push_back(t);
  r.lines.push_back("schema " + cat.schema + " v" + std::to_string(cat.version) + " " + cat.checksum);
  return r;
}

// ------------------------------------------------------------------ run

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for ambi-typical strata of elliptic K3 surfaces", "ambi"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "md", "json", "csv"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--catalog", o.catalog, "catalog file");
  app.add_flag("--timing", o.timing, "include wall-clock time in the report");

  std::function<Report()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* s = leaf(&app, name, help);
    s->require_subcommand(1);
    return s;
  };
  auto load = [&] { return load_catalog(o.catalog); };

  // fibers
  auto* fib = group("fibers", "Kodaira fibre types");
  int nu2 = 0, nu3 = 0, nd = 0;
  auto* fc = leaf(fib, "classify", "fibre type from vanishing orders");
  fc->add_option("--nu2", nu2)->required();
  fc->add_option("--nu3", nu3)->required();
  fc->add_option("--ndelta", nd)->required();
  fc->callback([&] { action = [&] { return fibers_classify(nu2, nu3, nd); }; });
  std::string config;
  auto* fd = leaf(fib, "config-dim", "Euler sum and dimension of a configuration");
  fd->add_option("--config", config)->required();
  fd->callback([&] { action = [&] { return fibers_config(config); }; });
  std::string matrix;
  std::optional<bool> star;
  auto* fm = leaf(fib, "monodromy", "fibre type from a local monodromy matrix a,b;c,d");
  fm->add_option("--matrix", matrix)->required();
  fm->add_option("--star", star, "read projectively with the given star-ness");
  fm->callback([&] { action = [&] { return fibers_monodromy(matrix, star); }; });
  leaf(fib, "tate", "vanishing-order table")->callback([&] { action = fibers_tate; });

  // perm
  auto* perm = group("perm", "permutation triples");
  EnumConstraints ec;
  std::optional<int> e2, e3, gen, cusps;
  std::string method = "search";
  auto* pe = leaf(perm, "enumerate", "conjugacy classes of transitive triples");
  pe->add_option("--degree", ec.degree)->required()->check(CLI::Range(1, 24));
  pe->add_option("--e2", e2);
  pe->add_option("--e3", e3);
  pe->add_option("--genus", gen);
  pe->add_option("--cusps", cusps, "number of cycles of muInf");
  pe->add_flag("--torsion-free", ec.torsion_free);
  pe->add_option("--method", method)->check(CLI::IsMember({"search", "cosets", "brute"}));
  pe->callback([&] {
    action = [&] {
      ec.e2 = e2;
      ec.e3 = e3;
      ec.genus = gen;
      ec.cusp_count = cusps;
      ec.jobs = o.jobs;
      return perm_enumerate(ec, method);
    };
  });
  int pd = 0;
  std::string m0, m1, n0, n1;
  auto* pc = leaf(perm, "check", "validate a triple given by mu0 and mu1");
  pc->add_option("--degree", pd)->required();
  pc->add_option("--mu0", m0)->required();
  pc->add_option("--mu1", m1)->required();
  pc->callback([&] { action = [&] { return perm_check(pd, m0, m1); }; });
  auto* pj = leaf(perm, "conjugate", "simultaneous conjugacy of two triples");
  pj->add_option("--degree", pd)->required();
  pj->add_option("--a0", m0)->required();
  pj->add_option("--a1", m1)->required();
  pj->add_option("--b0", n0)->required();
  pj->add_option("--b1", n1)->required();
  pj->callback([&] { action = [&] { return perm_conjugate(pd, m0, m1, n0, n1); }; });

  // hurwitz
  auto* hur = group("hurwitz", "factorization tuples and block systems");
  std::string tuple;
  int k = 1;
  std::optional<int> hdeg;
  std::size_t budget = 100000;
  auto* hf = leaf(hur, "factor", "block factorization with blocks of size k");
  hf->add_option("--tuple", tuple, "cycle notation, entries separated by ';'")->required();
  hf->add_option("--k", k)->required();
  hf->add_option("--degree", hdeg);
  hf->callback([&] { action = [&] { return hurwitz_factor(tuple, k, hdeg); }; });
  auto* ho = leaf(hur, "orbit", "Hurwitz orbit size");
  ho->add_option("--tuple", tuple)->required();
  ho->add_option("--degree", hdeg);
  ho->add_option("--budget", budget);
  ho->callback([&] { action = [&] { return hurwitz_orbit(tuple, hdeg, budget); }; });

  // budget
  auto* bud = group("budget", "Euler budget columns");
  std::string part = "all";
  auto* bt = leaf(bud, "table", "budget columns");
  bt->add_option("--part", part)->check(CLI::IsMember({"low", "high", "all"}));
  bt->callback([&] { action = [&] { return budget_table(part); }; });
  leaf(bud, "dims", "maximal stratum dimension per surviving degree")->callback([&] { action = budget_dims; });

  // cong
  auto* cg = group("cong", "congruence subgroups");
  std::string kind = "gamma", in = "psl";
  int cn = 1, cm = 1, crow = 0;
  auto* ci = leaf(cg, "index", "index of a congruence subgroup");
  ci->add_option("--kind", kind)->required();
  ci->add_option("--n", cn)->required();
  ci->add_option("--m", cm);
  ci->add_option("--in", in)->check(CLI::IsMember({"sl", "psl"}));
  ci->callback([&] { action = [&] { return cong_index(parse_kind(kind, cn, cm), in); }; });
  auto* cmem = leaf(cg, "member", "membership of a matrix a,b;c,d");
  cmem->add_option("--kind", kind)->required();
  cmem->add_option("--n", cn)->required();
  cmem->add_option("--m", cm);
  cmem->add_option("--matrix", matrix)->required();
  cmem->callback([&] { action = [&] { return cong_member(parse_kind(kind, cn, cm), matrix); }; });
  auto* cr = leaf(cg, "row", "monodromy group of a low-index catalog row");
  cr->add_option("--row", crow)->required()->check(CLI::Range(0, 7));
  cr->callback([&] { action = [&] { return cong_row(crow); }; });

  // ratfun
  auto* rf = group("ratfun", "rational maps and Weierstrass data");
  std::string num, den;
  auto* rp = leaf(rf, "passport", "branching passport over 0, 1, oo");
  rp->add_option("--num", num)->required();
  rp->add_option("--den", den)->required();
  rp->callback([&] { action = [&] { return ratfun_passport(num, den); }; });
  leaf(rf, "jtable", "j-functions of the low-index groups")->callback([&] { action = ratfun_jtable; });
  leaf(rf, "weierstrass", "Weierstrass families")->callback([&] { action = ratfun_weierstrass; });

  // lat
  auto* lat = group("lat", "root lattices and discriminant forms");
  std::string root, type;
  bool admissible = false;
  std::size_t limit = 20;
  int lrow = 0;
  auto* ld = leaf(lat, "disc", "discriminant form of a root lattice");
  ld->add_option("--root", root)->required();
  ld->callback([&] { action = [&] { return lat_disc(root); }; });
  auto* li = leaf(lat, "isotropic", "isotropic subgroups of a given type");
  li->add_option("--root", root)->required();
  li->add_option("--type", type, "invariant factors, e.g. 2,2")->required();
  li->add_flag("--admissible", admissible, "only subgroups adding no roots");
  li->add_option("--limit", limit);
  li->callback([&] { action = [&] { return lat_isotropic(root, type, admissible, limit); }; });
  auto* lr = leaf(lat, "roots", "root count");
  lr->add_option("--root", root)->required();
  lr->callback([&] { action = [&] { return lat_roots(root); }; });
  auto* lim = leaf(lat, "image", "image of the Dynkin stabilizer on the discriminant form");
  lim->add_option("--row", lrow)->required();
  lim->callback([&] { action = [&] { return lat_image(load(), lrow); }; });
  auto* lg = leaf(lat, "check-genus", "single-class genus test for a catalog row");
  lg->add_option("--row", lrow)->required();
  lg->callback([&] { action = [&] { return lat_genus(load(), lrow); }; });

  // catalog
  auto* cat = group("catalog", "embedded strata data");
  bool all = false, no_lat = false, detail = false;
  std::optional<int> vrow;
  int index = 18;
  auto* cv = leaf(cat, "verify", "cross-check catalog rows");
  auto* o_all = cv->add_flag("--all", all);
  auto* o_row = cv->add_option("--row", vrow);
  o_all->excludes(o_row);
  cv->add_flag("--no-lattices", no_lat, "skip overlattice, genus and Dynkin checks");
  cv->add_flag("--detail", detail, "one result per check with --all");
  cv->callback([&] {
    if (!all && !vrow) throw CLI::ValidationError("catalog verify", "need --all or --row");
    action = [&] { return catalog_verify(load(), vrow, o.jobs, !no_lat, detail); };
  });
  auto* cd = leaf(cat, "rederive", "re-enumerate high-index subgroups and match rows");
  cd->add_option("--index", index)->required()->check(CLI::IsMember({9, 12, 18}));
  cd->callback([&] { action = [&] { return catalog_rederive(load(), index, o.jobs); }; });
  auto* cs = leaf(cat, "show", "print catalog rows");
  cs->add_option("--row", vrow);
  cs->callback([&] { action = [&] { return catalog_show(load(), vrow); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Report rep;
  try {
    auto t0 = std::chrono::steady_clock::now();
    rep = action();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.seconds = o.timing ? secs : -1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  out << render(rep, o.emit);
  return rep.ok() ? kExitOk : kExitFail;
}

}  // namespace ambi::cli
