#include "symidx/prover.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symidx {

std::string theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::EASY_E6II: return "EASY_E6II";
    case TheoremId::EASY_E7V: return "EASY_E7V";
    case TheoremId::EASY_E8VIII: return "EASY_E8VIII";
    case TheoremId::SP_R: return "SP_R";
    case TheoremId::E6_SP4: return "E6_SP4";
    case TheoremId::E7_SO12SP1: return "E7_SO12SP1";
    case TheoremId::E7_E6U1: return "E7_E6U1";
    case TheoremId::E8_E7SP1: return "E8_E7SP1";
    case TheoremId::TABLE1: return "TABLE1";
    case TheoremId::TABLE2: return "TABLE2";
    case TheoremId::CONJECTURES: return "CONJECTURES";
  }
  throw Error("bad theorem id");
}

TheoremId theorem_from_name(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (TheoremId t : {TheoremId::EASY_E6II, TheoremId::EASY_E7V, TheoremId::EASY_E8VIII,
                      TheoremId::SP_R, TheoremId::E6_SP4, TheoremId::E7_SO12SP1,
                      TheoremId::E7_E6U1, TheoremId::E8_E7SP1, TheoremId::TABLE1,
                      TheoremId::TABLE2, TheoremId::CONJECTURES})
    if (theorem_name(t) == u) return t;
  throw ParseError("unknown theorem: " + s);
}

namespace {

constexpr const char* kCitCatalog =
    "classification data of irreducible Riemannian symmetric spaces (Cartan; standard "
    "tables)";
constexpr const char* kCitGroupIndex =
    "index values of compact simple Lie groups (Berndt-Olmos 2017)";
constexpr const char* kCitReflective =
    "reflective submanifolds classified by Leung (1974, 1979); reflective index values "
    "from Berndt-Olmos 2016";
constexpr const char* kCitBound =
    "codimension lower bound codim >= (Omega + Lambda)/2 >= Omega/2 from the "
    "glide-group dimension count";
constexpr const char* kCitSemisimple =
    "non-semisimple candidates excluded (Berndt-Olmos 2016)";
constexpr const char* kCitChenNagano =
    "maximal-rank classification by Chen-Nagano 1978 and Ikawa-Tasaki 2000";
constexpr const char* kCitAdditivity = "ell is additive over de Rham factors";

void add(TheoremReport& rep, std::string desc, std::string cite, std::string payload,
         bool pass) {
  rep.steps.push_back({std::move(desc), std::move(cite), std::move(payload), pass});
}

void finish(TheoremReport& rep) {
  rep.verdict = std::all_of(rep.steps.begin(), rep.steps.end(),
                            [](const Step& s) { return s.pass; });
}

std::string fmt_ids(const std::vector<SpaceRecord>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (const auto& r : v) {
    if (!s.empty()) s += ", ";
    s += r.label + " (dim " + std::to_string(r.dim) + ", ell " + std::to_string(r.ell) +
         ")";
  }
  return s;
}

// Dense integer polynomials in one variable, for the symbolic Sp_r check.
struct Poly {
  std::vector<long long> c;  // c[i] * r^i

  static Poly constant(long long v) { return {{v}}; }
  static Poly var() { return {{0, 1}}; }

  Poly operator+(const Poly& o) const {
    Poly out = *this;
    if (o.c.size() > out.c.size()) out.c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    out.trim();
    return out;
  }
  Poly operator-(const Poly& o) const {
    Poly neg = o;
    for (auto& x : neg.c) x = -x;
    return *this + neg;
  }
  Poly operator*(const Poly& o) const {
    Poly out;
    out.c.assign(c.size() + o.c.size(), 0);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    out.trim();
    return out;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

SpaceRecord by_id(const char* id) { return resolve_space(id); }

void bound_steps(TheoremReport& rep, const SpaceRecord& m) {
  BoundBreakdown b = codim_bound(m);
  add(rep, "catalog invariants of " + m.label, kCitCatalog,
      "dim = " + std::to_string(m.dim) + ", rank = " + std::to_string(m.rank) +
          ", dim K = " + std::to_string(m.dim_isotropy),
      true);
  add(rep, "group index of the compact dual isometry group", kCitGroupIndex,
      "i(" + m.isometry_group.name() + ") = " + std::to_string(b.group_index), true);
  add(rep, "uniform codimension bound", kCitBound,
      "Omega = " + std::to_string(b.omega) + ", codim(Sigma) >= " + b.bound_exact.str() +
          ", so codim(Sigma) >= " + std::to_string(b.bound_int),
      true);
}

}  // namespace

TheoremReport prove_easy(const SpaceRecord& m) {
  TheoremReport rep;
  rep.space = m.label;
  int expected;
  if (m.id == "E6p2") {
    rep.id = TheoremId::EASY_E6II;
    expected = 12;
  } else if (m.id == "E7p7") {
    rep.id = TheoremId::EASY_E7V;
    expected = 27;
  } else if (m.id == "E8p8") {
    rep.id = TheoremId::EASY_E8VIII;
    expected = 56;
  } else if (m.family == Family::CI && m.params[0] >= 3) {
    rep.id = TheoremId::SP_R;
    expected = 2 * (m.params[0] - 1);
  } else {
    throw NotAnEasyCase("the uniform bound alone does not settle " + m.label);
  }

  BoundBreakdown b = codim_bound(m);
  bound_steps(rep, m);
  int irr = m.reflective_index.value();
  add(rep, "bound reaches the reflective index", kCitReflective,
      std::to_string(b.bound_int) + " >= " + std::to_string(irr) + " = i_r(M)",
      b.bound_int >= irr);
  add(rep, "conclusion", "i(M) <= i_r(M) always; the bound forces equality",
      "i(M) = i_r(M) = " + std::to_string(expected), irr == expected);
  rep.claimed_value = std::to_string(expected);
  finish(rep);
  return rep;
}

TheoremReport prove_sp_family() {
  TheoremReport rep;
  rep.id = TheoremId::SP_R;
  rep.space = "Sp_r(R)/U_r";

  Poly r = Poly::var();
  Poly omega_sym = (Poly::constant(4) * r - Poly::constant(4))  // i(Sp_r)
                   + (r * r + r)                                // dim
                   - r                                          // rank
                   - r * r;                                     // dim K
  Poly four_r_minus_4 = Poly::constant(4) * r - Poly::constant(4);
  add(rep, "symbolic identity Omega(r) = 4(r-1)", kCitGroupIndex,
      "i(Sp_r) + r(r+1) - r - r^2 = 4r - 4", omega_sym == four_r_minus_4);

  Poly bound_sym = omega_sym;  // bound is Omega/2; compare 2*bound with Omega
  Poly i_r_sym = Poly::constant(2) * r - Poly::constant(2);
  add(rep, "symbolic bound Omega/2 = 2(r-1) = i_r", kCitReflective,
      "(4r - 4)/2 = 2r - 2", bound_sym == Poly::constant(2) * i_r_sym);

  bool sweep_ok = true;
  std::string first_bad;
  for (int rr = 3; rr <= 50; ++rr) {
    SpaceRecord m = instantiate(Family::CI, {rr});
    BoundBreakdown b = codim_bound(m);
    bool ok = b.omega == 4 * rr - 4 && b.bound_int == 2 * (rr - 1) &&
              m.reflective_index == 2 * (rr - 1) &&
              prove_easy(m).claimed_value == std::to_string(2 * (rr - 1));
    if (!ok && first_bad.empty()) first_bad = "r = " + std::to_string(rr);
    sweep_ok = sweep_ok && ok;
  }
  add(rep, "numeric sweep over 3 <= r <= 50", kCitBound,
      sweep_ok ? "48 instances verified" : "mismatch at " + first_bad, sweep_ok);

  rep.claimed_value = "2(r-1)";
  finish(rep);
  return rep;
}

namespace {

void lambda_cap_step(TheoremReport& rep, const SpaceRecord& m) {
  int lmax = lambda_max(m);
  std::string pairs;
  for (int rk = 1; rk <= m.rank; ++rk) {
    int emax = lmax - (m.rank - rk);
    if (emax < 0) continue;
    if (!pairs.empty()) pairs += ", ";
    pairs += "rk " + std::to_string(rk) + ": ell <= " + std::to_string(emax);
  }
  add(rep, "cap on Lambda = (rk M - rk Sigma) + ell below the reflective index",
      kCitBound,
      "Lambda <= 2 (i_r - 1) - Omega = " + std::to_string(lmax) + "; " + pairs, true);
}

void pipeline_step(TheoremReport& rep, const SpaceRecord& m, const std::set<int>& window,
                   const std::vector<RuleId>& rules) {
  PipelineReport pr = survivors(m, window, rules);
  std::ostringstream os;
  os << pr.candidates.size() << " candidate(s)";
  for (const auto& c : pr.candidates) {
    os << "; " << c.product.label() << " (codim " << c.codim << ")";
    for (const auto& v : c.verdicts)
      if (v.outcome == Outcome::Eliminated) {
        os << " eliminated by " << rule_name(v.rule) << ": " << v.detail;
        break;
      }
  }
  if (pr.survivors.empty()) {
    os << "; survivors: none";
    add(rep, "exhaustive elimination over the window", kCitSemisimple, os.str(), true);
  } else {
    os << "; SURVIVOR(S): ";
    for (const auto& c : pr.survivors) os << c.product.label() << " ";
    os << "- a survivor contradicts the recorded classification and marks a gap in "
          "the necessary-condition pipeline, not a new submanifold";
    add(rep, "exhaustive elimination over the window", kCitSemisimple, os.str(), false);
  }
}

}  // namespace

TheoremReport prove_elimination(const SpaceRecord& m) {
  TheoremReport rep;
  rep.space = m.label;
  if (m.id == "E7m5")
    rep.id = TheoremId::E7_SO12SP1;
  else if (m.id == "E7m25")
    rep.id = TheoremId::E7_E6U1;
  else if (m.id == "E8m24")
    rep.id = TheoremId::E8_E7SP1;
  else
    throw NotAnEasyCase("no elimination replay recorded for " + m.label);

  int irr = m.reflective_index.value();
  add(rep, "reflective index", kCitReflective, "i_r(M) = " + std::to_string(irr), true);
  BoundBreakdown b = codim_bound(m);
  bound_steps(rep, m);

  std::set<int> window;
  for (int c = b.bound_int; c < irr; ++c) window.insert(c);
  add(rep, "window of codimensions left open by the bound", kCitBound,
      "codim(Sigma) in [" + std::to_string(b.bound_int) + ", " + std::to_string(irr - 1) +
          "], i.e. dim(Sigma) in [" + std::to_string(m.dim - irr + 1) + ", " +
          std::to_string(m.dim - b.bound_int) + "]",
      !window.empty());
  lambda_cap_step(rep, m);
  add(rep, "reduction to semisimple candidates", kCitSemisimple,
      "candidates are products of irreducible factors, no Euclidean part", true);

  if (m.id == "E7m5") {
    auto hits = scan(41, 41, std::set<int>{3, 4});
    add(rep, "no irreducible symmetric space of dimension 41 has rank 3 or 4",
        kCitCatalog, "scan(dim = 41, rank in {3,4}) -> " + fmt_ids(hits), hits.empty());
    add(rep, "reducible case",
        "rank-one factors with ell <= 1 are RH^2, RH^3, CH^2; a 2+2 split of "
        "dimension 41 needs the odd-dimensional rank-2 factor SL3(R)/SO3",
        "both shapes fall to the hyperbolic-factor rule; exhaustive generation below "
        "confirms no product fits the window and cap at all",
        true);
  } else if (m.id == "E7m25") {
    auto rk2 = scan(33, 41, std::set<int>{2}, 15);
    add(rep, "irreducible rank-2 candidates", kCitCatalog,
        "spaces with dim in [33,41], rank 2, ell <= 15: " + fmt_ids(rk2), rk2.empty());
    auto rk3 = scan(33, 41, std::set<int>{3}, 16);
    bool stage_ok = rk3.size() == 2 &&
                    ((rk3[0].id == "AIII(3,3)" && rk3[1].id == "CII(3,0)") ||
                     (rk3[0].id == "CII(3,0)" && rk3[1].id == "AIII(3,3)"));
    add(rep, "irreducible rank-3 candidates", kCitCatalog,
        "spaces with dim in [33,41], rank 3, ell <= 16: " + fmt_ids(rk3), stage_ok);

    Candidate su36{make_product({by_id("AIII(3,3)")}, 0), m.dim - 36, 0, {}};
    su36.lambda = lambda(m, su36.product);
    Verdict v1 = apply_rule(RuleId::R1_LambdaBound, m, su36);
    add(rep, "SU(3,6)/S(U3U6) eliminated by the refined bound", kCitBound,
        "Lambda = " + std::to_string(su36.lambda) + "; " + v1.detail,
        v1.outcome == Outcome::Eliminated);

    Candidate sp33{make_product({by_id("CII(3,0)")}, 0), m.dim - 36, 0, {}};
    sp33.lambda = lambda(m, sp33.product);
    Verdict v2 = apply_rule(RuleId::R1_LambdaBound, m, sp33);
    add(rep, "Sp(3,3)/Sp3Sp3 passes the refined bound", kCitBound,
        "Lambda = " + std::to_string(sp33.lambda) + "; " + v2.detail,
        v2.outcome == Outcome::Survives);
    Verdict v3 = apply_rule(RuleId::R3_RootEmbedding, m, sp33);
    add(rep, "Sp(3,3)/Sp3Sp3 eliminated by the root filter: C3 with short "
             "multiplicity 4 and long multiplicity 3 cannot embed into C3 with short "
             "multiplicity 8 and long multiplicity 1",
        rule_citation(RuleId::R3_RootEmbedding), v3.detail,
        v3.outcome == Outcome::Eliminated &&
            v3.detail.find("multiplicity") != std::string::npos);
  } else if (m.id == "E8m24") {
    auto rk2 = scan(65, 70, std::set<int>{2});
    std::vector<std::string> want = {"AIII(2,15)", "BDI(2,31)", "BDI(2,32)", "BDI(2,33)"};
    std::vector<std::string> got;
    for (const auto& s : rk2) got.push_back(s.id);
    std::sort(got.begin(), got.end());
    bool all_big = !rk2.empty();
    for (const auto& s : rk2) all_big = all_big && s.ell > 8;
    add(rep, "irreducible rank-2 spaces in the window all have ell > 8", kCitCatalog,
        "scan(dim in [65,70], rank 2) -> " + fmt_ids(rk2), got == want && all_big);
    auto rk3 = scan(65, 70, std::set<int>{3}, 9);
    add(rep, "irreducible rank-3 candidates", kCitCatalog,
        "spaces with dim in [65,70], rank 3, ell <= 9: " + fmt_ids(rk3), rk3.empty());
    auto rk4 = scan(65, 70, std::set<int>{4}, 10);
    add(rep, "irreducible rank-4 candidates", kCitCatalog,
        "spaces with dim in [65,70], rank 4, ell <= 10: " + fmt_ids(rk4), rk4.empty());
  }

  pipeline_step(rep, m, window,
                {RuleId::R1_LambdaBound, RuleId::R2_HyperbolicFactor,
                 RuleId::R3_RootEmbedding, RuleId::R4_Hypersurface});
  add(rep, "conclusion", "no candidate below the reflective index survives",
      "i(M) = i_r(M) = " + std::to_string(irr), true);
  rep.claimed_value = std::to_string(irr);
  finish(rep);
  return rep;
}

TheoremReport prove_e6_sp4() {
  TheoremReport rep;
  rep.id = TheoremId::E6_SP4;
  SpaceRecord m = by_id("E6p6");
  rep.space = m.label;

  int irr = m.reflective_index.value();
  add(rep, "reflective index", kCitReflective, "i_r(M) = " + std::to_string(irr), true);
  BoundBreakdown b = codim_bound(m);
  bound_steps(rep, m);
  add(rep, "window of codimensions left open by the bound", kCitBound,
      "codim(Sigma) = 13 only", b.bound_int == 13 && irr == 14);
  int lmax = lambda_max(m);
  add(rep, "Lambda cap forces maximal rank and trivial principal isotropy", kCitBound,
      "Lambda <= " + std::to_string(lmax) + ", so rk(Sigma) = 6 and ell(Sigma) = 0",
      lmax == 0);

  std::vector<int> expected_codims = {16, 20, 27};
  auto list = e6_sp4_maximal_rank_list();
  bool list_ok = list.size() == 3;
  std::ostringstream os;
  for (size_t i = 0; i < list.size(); ++i) {
    const auto& e = list[i];
    int codim = m.dim - e.product.dim();
    bool entry_ok = codim == e.codim && list_ok && i < expected_codims.size() &&
                    codim == expected_codims[i] && e.product.rank() == 6 &&
                    e.product.ell() == 0;
    if (i) os << "; ";
    os << e.product.label() << ": dim " << e.product.dim() << ", rank "
       << e.product.rank() << ", ell " << e.product.ell() << ", codim " << codim
       << (e.reflective ? " (reflective)" : " (non-reflective)");
    if (!entry_ok) os << " MISMATCH: stored codim " << e.codim;
    list_ok = list_ok && entry_ok;
  }
  add(rep, "classified maximal-rank submanifolds, invariants recomputed from the "
           "catalog", kCitChenNagano, os.str(), list_ok);

  bool exceed = true;
  for (const auto& e : list) exceed = exceed && e.codim > 14;
  add(rep, "every classified codimension exceeds 14", kCitChenNagano,
      "{16, 20, 27} > 14, so no candidate of codimension 13 exists", exceed);

  pipeline_step(rep, m, {13},
                {RuleId::R1_LambdaBound, RuleId::R2_HyperbolicFactor,
                 RuleId::R3_RootEmbedding, RuleId::R4_Hypersurface,
                 RuleId::R5_MaximalRankList});
  add(rep, "conclusion", "the window is empty", "i(M) = i_r(M) = 14", true);
  rep.claimed_value = "14";
  finish(rep);
  return rep;
}

namespace {

struct Table1Row {
  const char* space;
  std::vector<const char*> sigmas;
  int dim, rank, index;
  const char* attribution;  // nullptr = computed by this library
};

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"E6p6", {"F4p4"}, 42, 6, 14, nullptr},
      {"E6p2", {"F4p4"}, 40, 4, 12, nullptr},
      {"E6m14", {"DIII(5)"}, 32, 2, 12, "Onishchik 1980"},
      {"E6m26", {"F4m20"}, 26, 2, 10, "Onishchik 1980"},
      {"E7p7", {"R1 x E6p6"}, 70, 7, 27, nullptr},
      {"E7m5", {"E6p2"}, 64, 4, 24, nullptr},
      {"E7m25", {"E6m14"}, 54, 3, 22, nullptr},
      {"E8p8", {"RH2 x E7p7"}, 128, 8, 56, nullptr},
      {"E8m24", {"E7m5"}, 112, 4, 48, nullptr},
      {"F4p4", {"BDI(4,1)"}, 28, 4, 8, "Berndt-Olmos 2016"},
      {"F4m20", {"RH8", "HH2"}, 16, 1, 8, "Wolf 1963"},
      {"G2p2", {"AI(2)"}, 8, 2, 3, "Onishchik 1980"},
  };
  return rows;
}

}  // namespace

TheoremReport verify_table1() {
  TheoremReport rep;
  rep.id = TheoremId::TABLE1;
  rep.space = "exceptional type III";

  for (const auto& row : table1_rows()) {
    SpaceRecord m = by_id(row.space);
    bool ok = m.dim == row.dim && m.rank == row.rank;
    std::ostringstream os;
    os << "dim " << m.dim << ", rank " << m.rank << ", i = " << row.index;

    if (row.attribution == nullptr) {
      // Recompute; never read the stored value to certify itself.
      std::string computed;
      if (m.id == "E6p6")
        computed = prove_e6_sp4().claimed_value;
      else if (m.id == "E6p2" || m.id == "E7p7" || m.id == "E8p8")
        computed = prove_easy(m).claimed_value;
      else
        computed = prove_elimination(m).claimed_value;
      os << " (computed " << computed << ")";
      ok = ok && computed == std::to_string(row.index);
    } else {
      os << " (imported)";
      ok = ok && m.known_index == row.index;
    }
    ok = ok && m.known_index == row.index;

    for (const char* sexpr : row.sigmas) {
      ProductSpace sigma = parse_product(sexpr);
      int codim = m.dim - sigma.dim();
      os << "; Sigma = " << sigma.label() << " codim " << m.dim << " - " << sigma.dim()
         << " = " << codim;
      ok = ok && codim == row.index;
    }
    add(rep, "row " + m.label,
        row.attribution ? row.attribution : "computed by the replayed theorems",
        os.str(), ok);
  }
  finish(rep);
  rep.claimed_value = "12 rows";
  return rep;
}

namespace {

struct Table2Row {
  const char* name;
  Family family;
  // Parameter sweep: r in [rmin, 12] if rmin > 0; k in [kmin, 12] if kmin >= 0.
  int rmin;  // 0 = row has no r parameter
  int kmin;  // -1 = row has no k parameter
  std::function<std::vector<int>(int, int)> params;
  std::function<long long(int, int)> dim, rank, ell;
};

const std::vector<Table2Row>& table2_rows() {
  auto P1 = [](int r, int) { return std::vector<int>{r}; };
  static const std::vector<Table2Row> rows = {
      {"SL(r+1,R)/SO(r+1)", Family::AI, 2, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (r + 3) / 2; },
       [](int r, int) -> long long { return r; },
       [](int, int) -> long long { return 0; }},
      {"SL(r+1,C)/SU(r+1)", Family::AC, 2, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (r + 2); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return r; }},
      {"SU*(2r+2)/Sp(r+1)", Family::AII, 2, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (2 * r + 3); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return 3LL * (r + 1); }},
      {"E6^-26/F4", Family::EIV, 0, -1, nullptr,
       [](int, int) -> long long { return 26; }, [](int, int) -> long long { return 2; },
       [](int, int) -> long long { return 28; }},
      {"SO(1,k+1)/SO(k+1)", Family::BDI, 0, 1,
       [](int, int k) { return std::vector<int>{1, k}; },
       [](int, int k) -> long long { return k + 1; },
       [](int, int) -> long long { return 1; },
       [](int, int k) -> long long { return 1LL * (k - 1) * k / 2; }},
      {"SO(r,r+k)/SOr SO(r+k)", Family::BDI, 2, 1,
       [](int r, int k) { return std::vector<int>{r, k}; },
       [](int r, int k) -> long long { return 1LL * r * (r + k); },
       [](int r, int) -> long long { return r; },
       [](int, int k) -> long long { return 1LL * (k - 1) * k / 2; }},
      {"SO(2r+1,C)/SO(2r+1)", Family::BC, 2, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (2 * r + 1); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return r; }},
      {"Sp_r(R)/U_r", Family::CI, 3, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (r + 1); },
       [](int r, int) -> long long { return r; },
       [](int, int) -> long long { return 0; }},
      {"SU(r,r)/S(UrUr)", Family::AIII, 3, -1,
       [](int r, int) { return std::vector<int>{r, 0}; },
       [](int r, int) -> long long { return 2LL * r * r; },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return r - 1; }},
      {"Sp_r(C)/Sp_r", Family::CC, 3, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (2 * r + 1); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return r; }},
      {"SO*(4r)/U(2r)", Family::DIII, 3, -1,
       [](int r, int) { return std::vector<int>{2 * r}; },
       [](int r, int) -> long long { return 2LL * r * (2 * r - 1); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return 3LL * r; }},
      {"Sp(r,r)/SprSpr", Family::CII, 3, -1,
       [](int r, int) { return std::vector<int>{r, 0}; },
       [](int r, int) -> long long { return 4LL * r * r; },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return 3LL * r; }},
      {"E7^-25/E6U1", Family::EVII, 0, -1, nullptr,
       [](int, int) -> long long { return 54; }, [](int, int) -> long long { return 3; },
       [](int, int) -> long long { return 28; }},
      {"SO(r,r)/SOrSOr", Family::BDI, 4, -1,
       [](int r, int) { return std::vector<int>{r, 0}; },
       [](int r, int) -> long long { return 1LL * r * r; },
       [](int r, int) -> long long { return r; },
       [](int, int) -> long long { return 0; }},
      {"SO(2r,C)/SO(2r)", Family::DC, 4, -1, P1,
       [](int r, int) -> long long { return 1LL * r * (2 * r - 1); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return r; }},
      {"SU(r,r+k)/S(Ur U(r+k))", Family::AIII, 2, 1,
       [](int r, int k) { return std::vector<int>{r, k}; },
       [](int r, int k) -> long long { return 2LL * r * (r + k); },
       [](int r, int) -> long long { return r; },
       [](int r, int k) -> long long { return 1LL * k * k + r - 1; }},
      {"Sp(r,r+k)/Spr Sp(r+k)", Family::CII, 2, 1,
       [](int r, int k) { return std::vector<int>{r, k}; },
       [](int r, int k) -> long long { return 4LL * r * (r + k); },
       [](int r, int) -> long long { return r; },
       [](int r, int k) -> long long { return 1LL * k * (2 * k + 1) + 3 * r; }},
      {"SO*(4r+2)/U(2r+1)", Family::DIII, 2, -1,
       [](int r, int) { return std::vector<int>{2 * r + 1}; },
       [](int r, int) -> long long { return 2LL * r * (2 * r + 1); },
       [](int r, int) -> long long { return r; },
       [](int r, int) -> long long { return 3LL * r + 1; }},
      {"E6^-14/Spin10U1", Family::EIII, 0, -1, nullptr,
       [](int, int) -> long long { return 32; }, [](int, int) -> long long { return 2; },
       [](int, int) -> long long { return 16; }},
      {"F4^-20/Spin9", Family::FII, 0, -1, nullptr,
       [](int, int) -> long long { return 16; }, [](int, int) -> long long { return 1; },
       [](int, int) -> long long { return 21; }},
      {"E6^6/Sp4", Family::EI, 0, -1, nullptr,
       [](int, int) -> long long { return 42; }, [](int, int) -> long long { return 6; },
       [](int, int) -> long long { return 0; }},
      {"E6(C)/E6", Family::E6C, 0, -1, nullptr,
       [](int, int) -> long long { return 78; }, [](int, int) -> long long { return 6; },
       [](int, int) -> long long { return 6; }},
      {"E7^7/SU8", Family::EV, 0, -1, nullptr,
       [](int, int) -> long long { return 70; }, [](int, int) -> long long { return 7; },
       [](int, int) -> long long { return 0; }},
      {"E7(C)/E7", Family::E7C, 0, -1, nullptr,
       [](int, int) -> long long { return 133; }, [](int, int) -> long long { return 7; },
       [](int, int) -> long long { return 7; }},
      {"E8^8/SO16", Family::EVIII, 0, -1, nullptr,
       [](int, int) -> long long { return 128; }, [](int, int) -> long long { return 8; },
       [](int, int) -> long long { return 0; }},
      {"E8(C)/E8", Family::E8C, 0, -1, nullptr,
       [](int, int) -> long long { return 248; }, [](int, int) -> long long { return 8; },
       [](int, int) -> long long { return 8; }},
      {"F4^4/Sp3Sp1", Family::FI, 0, -1, nullptr,
       [](int, int) -> long long { return 28; }, [](int, int) -> long long { return 4; },
       [](int, int) -> long long { return 0; }},
      {"E6^2/SU6Sp1", Family::EII, 0, -1, nullptr,
       [](int, int) -> long long { return 40; }, [](int, int) -> long long { return 4; },
       [](int, int) -> long long { return 2; }},
      {"F4(C)/F4", Family::F4C, 0, -1, nullptr,
       [](int, int) -> long long { return 52; }, [](int, int) -> long long { return 4; },
       [](int, int) -> long long { return 4; }},
      {"E7^-5/SO12Sp1", Family::EVI, 0, -1, nullptr,
       [](int, int) -> long long { return 64; }, [](int, int) -> long long { return 4; },
       [](int, int) -> long long { return 9; }},
      {"E8^-24/E7Sp1", Family::EIX, 0, -1, nullptr,
       [](int, int) -> long long { return 112; }, [](int, int) -> long long { return 4; },
       [](int, int) -> long long { return 28; }},
      {"G2^2/SO4", Family::G, 0, -1, nullptr,
       [](int, int) -> long long { return 8; }, [](int, int) -> long long { return 2; },
       [](int, int) -> long long { return 0; }},
      {"G2(C)/G2", Family::G2C, 0, -1, nullptr,
       [](int, int) -> long long { return 14; }, [](int, int) -> long long { return 2; },
       [](int, int) -> long long { return 2; }},
  };
  return rows;
}

}  // namespace

TheoremReport verify_table2() {
  TheoremReport rep;
  rep.id = TheoremId::TABLE2;
  rep.space = "invariant table";

  for (const auto& row : table2_rows()) {
    int instances = 0;
    bool ok = true;
    std::string bad;
    auto check_one = [&](int r, int k) {
      std::vector<int> params =
          row.params ? row.params(r, k) : std::vector<int>{};
      SpaceRecord s = instantiate(row.family, params);
      bool good = s.dim == row.dim(r, k) && s.rank == row.rank(r, k) &&
                  s.ell == row.ell(r, k) && s.ell == s.dim_isotropy - s.dim + s.rank;
      if (!good && bad.empty())
        bad = " first mismatch at r=" + std::to_string(r) + ", k=" + std::to_string(k) +
              " (" + s.label + ")";
      ok = ok && good;
      ++instances;
    };
    if (row.rmin == 0 && row.kmin < 0) {
      check_one(0, 0);
    } else if (row.kmin < 0) {
      for (int r = row.rmin; r <= 12; ++r) check_one(r, 0);
    } else if (row.rmin == 0) {
      for (int k = row.kmin; k <= 12; ++k) check_one(0, k);
    } else {
      for (int r = row.rmin; r <= 12; ++r)
        for (int k = row.kmin; k <= 12; ++k) check_one(r, k);
    }
    add(rep, std::string("row ") + row.name, kCitCatalog,
        "printed (dim, rank, ell) and the identity ell = dim K - dim + rank agree on " +
            std::to_string(instances) + " instance(s)" + bad,
        ok);
  }
  finish(rep);
  rep.claimed_value = std::to_string(table2_rows().size()) + " rows";
  return rep;
}

TheoremReport open_conjectures() {
  TheoremReport rep;
  rep.id = TheoremId::CONJECTURES;
  rep.space = "open series";

  auto context_line = [&](const SpaceRecord& m) {
    std::ostringstream os;
    try {
      BoundBreakdown b = codim_bound(m);
      auto gi = group_index(m.isometry_group);
      os << m.label << ": Omega = " << b.omega << ", uniform bound " << b.bound_int
         << (gi->imported ? " (group index imported)" : "");
    } catch (const UnknownGroupIndex&) {
      os << m.label << ": group index not tabulated";
    }
    return os.str();
  };

  {
    std::ostringstream os;
    os << "conjecture: i(M) = 2k; context only: ";
    for (int k : {5, 6, 7})
      os << context_line(instantiate(Family::DIII, {k + 1})) << "; ";
    add(rep, "series (i): SO*(2k+2)/U(k+1), k >= 5", "open", os.str(), true);
  }
  {
    std::ostringstream os;
    os << "conjecture: i(M) = 4k; context only: ";
    for (int k : {3, 4, 5}) os << context_line(instantiate(Family::AII, {k})) << "; ";
    add(rep, "series (ii): SU*(2k+2)/Sp(k+1), k >= 3", "open", os.str(), true);
  }
  {
    std::ostringstream os;
    os << "conjecture: i(M) = 4k; constraint k >= max(3, l+2); context only: ";
    for (auto [k, l] : {std::pair{3, 0}, {3, 1}, {4, 0}})
      os << context_line(instantiate(Family::CII, {k, l})) << "; ";
    add(rep, "series (iii): Sp(k,k+l)/Sp(k)Sp(k+l), l >= 0", "open", os.str(), true);
  }
  add(rep, "status", "the uniform bound is reported as context, never as a proof",
      "no verdict claimed for any series", true);
  finish(rep);
  return rep;
}

std::vector<TheoremReport> prove_all() {
  std::vector<TheoremReport> out;
  out.push_back(prove_easy(by_id("E6p2")));
  out.push_back(prove_easy(by_id("E7p7")));
  out.push_back(prove_easy(by_id("E8p8")));
  out.push_back(prove_sp_family());
  out.push_back(prove_e6_sp4());
  out.push_back(prove_elimination(by_id("E7m5")));
  out.push_back(prove_elimination(by_id("E7m25")));
  out.push_back(prove_elimination(by_id("E8m24")));
  out.push_back(verify_table1());
  out.push_back(verify_table2());
  return out;
}

}  // namespace symidx
