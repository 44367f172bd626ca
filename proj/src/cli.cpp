#include "symidx/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "symidx/json_io.hpp"

namespace symidx::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string catalog_file;

  std::string target;       // info/bound/enumerate space label
  std::string sigma;        // bound --sigma
  std::string codim;        // enumerate --codim a..b
  std::string rules = "R1,R2,R3,R4";
  std::string theorem;      // prove target
  bool export_catalog = false;
  int dim_max = 300;
};

std::set<int> parse_codim_window(const std::string& s) {
  auto dots = s.find("..");
  std::set<int> out;
  try {
    if (dots == std::string::npos) {
      out.insert(std::stoi(s));
    } else {
      int a = std::stoi(s.substr(0, dots));
      int b = std::stoi(s.substr(dots + 2));
      if (a > b) throw ParseError("empty codimension range " + s);
      for (int c = a; c <= b; ++c) out.insert(c);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad codimension window: " + s);
  }
  return out;
}

std::vector<RuleId> parse_rules(const std::string& s) {
  std::vector<RuleId> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rule_from_name(tok));
  if (out.empty()) throw ParseError("empty rule list");
  return out;
}

void print_space_text(const SpaceRecord& s, std::ostream& out) {
  out << s.label << " (id " << s.id << ")\n";
  out << "  family " << family_name(s.family) << ", params (";
  for (size_t i = 0; i < s.params.size(); ++i) out << (i ? "," : "") << s.params[i];
  out << ")\n";
  out << "  dim " << s.dim << " rank " << s.rank << " ℓ " << s.ell << " dim K "
      << s.dim_isotropy << "\n";
  if (s.root_system) {
    out << "  restricted roots: " << root_type_name(s.root_system->type)
        << s.root_system->rank << ", multiplicities";
    for (const auto& [c, m] : s.root_system->multiplicities)
      out << " " << length_class_name(c) << "=" << m;
    out << "\n";
  }
  out << "  reflective index: "
      << (s.reflective_index ? std::to_string(*s.reflective_index) : "not stored")
      << ", known index: "
      << (s.known_index ? std::to_string(*s.known_index) : "not stored") << "\n";
  if (s.family != Family::EUCLIDEAN)
    out << "  compact dual isometry group: " << s.isometry_group.name() << "\n";
}

void print_bound_text(const SpaceRecord& m, const BoundBreakdown& b,
                      const ProductSpace* sigma, std::ostream& out) {
  out << "M = " << m.label << "\n";
  out << "i(G*) = " << b.group_index << ", dim = " << b.dim_m << ", rank = " << b.rank_m
      << ", dim K = " << b.dim_k << "\n";
  if (sigma) {
    out << "Σ = " << sigma->label() << " (dim " << sigma->dim() << ", rank "
        << sigma->rank() << ", ℓ " << sigma->ell() << "), Λ = " << *b.lambda
        << "\n";
  }
  out << "Ω = " << b.omega << ", bound = " << b.bound_int << " (exact "
      << b.bound_exact.str() << ")\n";
}

void print_pipeline_text(const PipelineReport& p, std::ostream& out) {
  out << "ambient " << p.ambient.label << ", window codim {";
  for (size_t i = 0; i < p.window.size(); ++i) out << (i ? "," : "") << p.window[i];
  out << "}\n";
  out << "preamble:\n";
  for (const auto& line : p.preamble) out << "  - " << line << "\n";
  out << "candidates (" << p.candidates.size() << "):\n";
  for (const auto& c : p.candidates) {
    out << "  " << c.product.label() << "  codim " << c.codim << "  Λ " << c.lambda
        << "\n";
    for (const auto& v : c.verdicts)
      out << "    " << rule_name(v.rule) << ": " << outcome_name(v.outcome) << " - "
          << v.detail << "\n";
  }
  out << "survivors: ";
  if (p.survivors.empty()) {
    out << "none\n";
  } else {
    for (size_t i = 0; i < p.survivors.size(); ++i)
      out << (i ? ", " : "") << p.survivors[i].product.label();
    out << "\n";
  }
}

void print_theorem_text(const TheoremReport& t, std::ostream& out) {
  out << "== " << theorem_name(t.id) << ": " << t.space << " ==\n";
  for (const auto& s : t.steps) {
    out << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.description << " — "
        << s.payload << "\n";
    out << "        (" << s.citation << ")\n";
  }
  out << "  verdict: " << (t.verdict ? "PASS" : "FAIL");
  if (!t.claimed_value.empty()) out << " — " << t.claimed_value;
  out << "\n";
}

struct OverrideGuard {
  ~OverrideGuard() { set_catalog_override(std::nullopt); }
};

int run_impl(const Options& opt, const std::string& verb, std::ostream& out) {
  const bool json = opt.format == "json";

  if (verb == "info") {
    SpaceRecord s = resolve_space(opt.target);
    if (json)
      out << to_json(s).dump(2) << "\n";
    else
      print_space_text(s, out);
    return 0;
  }

  if (verb == "bound") {
    SpaceRecord m = resolve_space(opt.target);
    std::optional<ProductSpace> sigma;
    if (!opt.sigma.empty()) sigma = parse_product(opt.sigma);
    BoundBreakdown b = codim_bound(m, sigma ? &*sigma : nullptr);
    if (json) {
      Json j{{"space", m.label}};
      if (sigma) j["sigma"] = to_json(*sigma);
      j["bound"] = to_json(b);
      out << j.dump(2) << "\n";
    } else {
      print_bound_text(m, b, sigma ? &*sigma : nullptr, out);
    }
    return 0;
  }

  if (verb == "enumerate") {
    SpaceRecord m = resolve_space(opt.target);
    PipelineReport p = survivors(m, parse_codim_window(opt.codim), parse_rules(opt.rules));
    if (json)
      out << to_json(p).dump(2) << "\n";
    else
      print_pipeline_text(p, out);
    return 0;
  }

  if (verb == "prove") {
    std::vector<TheoremReport> reports;
    std::string t = opt.theorem;
    if (t == "all") {
      reports = prove_all();
    } else {
      switch (theorem_from_name(t)) {
        case TheoremId::EASY_E6II: reports.push_back(prove_easy(resolve_space("E6p2"))); break;
        case TheoremId::EASY_E7V: reports.push_back(prove_easy(resolve_space("E7p7"))); break;
        case TheoremId::EASY_E8VIII: reports.push_back(prove_easy(resolve_space("E8p8"))); break;
        case TheoremId::SP_R: reports.push_back(prove_sp_family()); break;
        case TheoremId::E6_SP4: reports.push_back(prove_e6_sp4()); break;
        case TheoremId::E7_SO12SP1: reports.push_back(prove_elimination(resolve_space("E7m5"))); break;
        case TheoremId::E7_E6U1: reports.push_back(prove_elimination(resolve_space("E7m25"))); break;
        case TheoremId::E8_E7SP1: reports.push_back(prove_elimination(resolve_space("E8m24"))); break;
        case TheoremId::TABLE1: reports.push_back(verify_table1()); break;
        case TheoremId::TABLE2: reports.push_back(verify_table2()); break;
        case TheoremId::CONJECTURES: reports.push_back(open_conjectures()); break;
      }
    }
    if (json) {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) print_theorem_text(r, out);
    }
    for (const auto& r : reports)
      if (!r.verdict) return 1;
    return 0;
  }

  if (verb == "tables") {
    std::vector<TheoremReport> reports = {verify_table1(), verify_table2()};
    if (json) {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) print_theorem_text(r, out);
    }
    for (const auto& r : reports)
      if (!r.verdict) return 1;
    return 0;
  }

  if (verb == "conjectures") {
    TheoremReport r = open_conjectures();
    if (json)
      out << to_json(r).dump(2) << "\n";
    else
      print_theorem_text(r, out);
    return r.verdict ? 0 : 1;
  }

  if (verb == "export") {
    out << catalog_to_json(opt.dim_max).dump(2) << "\n";
    return 0;
  }

  throw ParseError("unknown verb: " + verb);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"index computations for irreducible symmetric spaces of non-compact type"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--catalog-file", opt.catalog_file,
                 "JSON catalog overriding the built-in one for scans");

  auto* info = app.add_subcommand("info", "print one catalog record");
  info->add_option("label", opt.target, "space label, id or family expression")->required();

  auto* bound = app.add_subcommand("bound", "codimension lower bound for a space");
  bound->add_option("label", opt.target)->required();
  bound->add_option("--sigma", opt.sigma, "candidate product, factors joined by 'x'");

  auto* enumerate = app.add_subcommand("enumerate", "candidate pipeline over a window");
  enumerate->add_option("label", opt.target)->required();
  enumerate->add_option("--codim", opt.codim, "codimension window a..b")->required();
  enumerate->add_option("--rules", opt.rules, "comma-separated rules R1..R5")
      ->capture_default_str();

  auto* prove = app.add_subcommand("prove", "replay recorded theorems");
  prove->add_option("theorem", opt.theorem, "theorem id or 'all'")->required();

  app.add_subcommand("tables", "verify the index table and the invariant table");
  app.add_subcommand("conjectures", "print the open series");

  auto* exp = app.add_subcommand("export", "dump data as JSON");
  exp->add_flag("--catalog", opt.export_catalog, "export the catalog")->required();
  exp->add_option("--dim-max", opt.dim_max, "exhaustion bound for export")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  OverrideGuard guard;
  try {
    if (!opt.catalog_file.empty()) {
      std::ifstream in(opt.catalog_file);
      if (!in) throw ParseError("cannot open catalog file " + opt.catalog_file);
      Json j = Json::parse(in);
      set_catalog_override(catalog_from_json(j));
    }
    return run_impl(opt, app.get_subcommands().front()->get_name(), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symidx::cli
