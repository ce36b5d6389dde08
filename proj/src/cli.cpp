#include "qlogic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qlogic/error.hpp"
#include "qlogic/experiment.hpp"
#include "qlogic/formula.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/scenario.hpp"
#include "qlogic/truth.hpp"

namespace qlogic::cli {
namespace {

using nlohmann::ordered_json;

double rounded(double x) { return std::stod(format_number(x)); }

ordered_json json_number(double x) { return rounded(x); }

ordered_json json_truth(const TruthValue& t) {
  if (!t.defined()) return nullptr;
  return json_number(t.value());
}

ordered_json json_numbers(const std::vector<double>& xs) {
  ordered_json arr = ordered_json::array();
  for (double x : xs) arr.push_back(json_number(x));
  return arr;
}

std::string truth_text(const TruthValue& t) { return t.defined() ? format_number(t.value()) : "undefined"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Text table with left-aligned columns padded to the widest cell.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

bool is_runtime(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankAmbiguous:
    case ErrorKind::ZeroProbabilityBranch:
    case ErrorKind::NotHermitian:
    case ErrorKind::NotProjector:
    case ErrorKind::PreconditionViolation:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// eval

struct EvalOptions {
  std::string scenario;
  std::string formula;
  std::string policy;
};

void run_eval(const EvalOptions& opt, bool as_json, std::ostream& out) {
  ScenarioDocument doc = load_scenario(opt.scenario);
  const Formula f = parse_formula(opt.formula);
  Scenario sc = std::move(doc.scenario);
  if (!opt.policy.empty()) sc = with_policy(std::move(sc), opt.policy, doc.assignment);
  const EvaluationResult r = bind_and_evaluate(f, sc);

  const std::string policy = sc.policy.lattice_backed() ? std::string(to_string(sc.policy.kind))
                                                        : std::string(to_string(sc.policy.system));
  if (as_json) {
    ordered_json j;
    j["command"] = "eval";
    j["formula"] = print_formula(f);
    j["policy"] = policy;
    j["truth"] = json_truth(r.truth);
    j["probability"] = r.probability ? json_number(*r.probability) : ordered_json(nullptr);
    j["lattice_rank"] = r.lattice_element ? ordered_json(r.lattice_element->rank()) : ordered_json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "formula=" << print_formula(f) << '\n';
  out << "policy=" << policy << '\n';
  out << "truth=" << truth_text(r.truth) << '\n';
  if (r.probability) out << "probability=" << format_number(*r.probability) << '\n';
  if (r.lattice_element) out << "lattice_rank=" << r.lattice_element->rank() << '\n';
}

// ---------------------------------------------------------------------------
// lattice

struct LatticeOptions {
  std::string scenario;
  std::vector<std::string> checks;
};

const std::vector<std::string> kLatticeChecks{"compatibility", "absorption", "demorgan", "orthomodular",
                                              "distributivity"};

void run_lattice(const LatticeOptions& opt, bool as_json, std::ostream& out) {
  const ScenarioDocument doc = load_scenario(opt.scenario);
  const Scenario& sc = doc.scenario;
  const Tolerance& tol = sc.tol;
  auto enabled = [&](const std::string& name) {
    return opt.checks.empty() || std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
  };

  std::vector<std::pair<std::string, const Subspace*>> atoms;
  for (const auto& [name, s] : sc.atoms) atoms.emplace_back(name, &s);

  ordered_json j;
  j["command"] = "lattice";
  j["dimension"] = sc.dimension;
  j["atoms"] = ordered_json::array();
  for (const auto& [name, s] : atoms) j["atoms"].push_back({{"name", name}, {"rank", s->rank()}});
  j["pairs"] = ordered_json::array();
  j["orthomodular"] = ordered_json::array();
  j["distributivity"] = ordered_json::array();

  Table pairs({"a", "b", "compatible", "a<=b", "b<=a", "meet_rank", "join_rank", "absorption_residual",
               "demorgan_residual"});
  Table ortho({"a", "b", "residual", "holds"});
  Table distrib({"a", "b", "c", "defect"});

  for (std::size_t x = 0; x < atoms.size(); ++x) {
    for (std::size_t y = x + 1; y < atoms.size(); ++y) {
      const Subspace& a = *atoms[x].second;
      const Subspace& b = *atoms[y].second;
      const Subspace m = meet(a, b, tol);
      const Subspace jn = join(a, b, tol);
      ordered_json p{{"a", atoms[x].first}, {"b", atoms[y].first}, {"meet_rank", m.rank()}, {"join_rank", jn.rank()}};
      std::vector<std::string> row{atoms[x].first, atoms[y].first, "-", yes_no(leq(a, b, tol)), yes_no(leq(b, a, tol)),
                                   std::to_string(m.rank()), std::to_string(jn.rank()), "-", "-"};
      p["leq"] = leq(a, b, tol);
      p["geq"] = leq(b, a, tol);
      if (enabled("compatibility")) {
        p["compatible"] = compatible(a, b, tol);
        row[2] = yes_no(compatible(a, b, tol));
      }
      if (enabled("absorption")) {
        const double res = std::max(distance(join(a, m, tol), a), distance(meet(a, jn, tol), a));
        p["absorption_residual"] = json_number(res);
        row[7] = format_number(res);
      }
      if (enabled("demorgan")) {
        const double res = distance(orthocomplement(jn), meet(orthocomplement(a), orthocomplement(b), tol));
        p["demorgan_residual"] = json_number(res);
        row[8] = format_number(res);
      }
      j["pairs"].push_back(std::move(p));
      pairs.add(std::move(row));

      if (enabled("orthomodular")) {
        for (const auto& [lo, hi] : {std::pair{x, y}, std::pair{y, x}}) {
          const Subspace& s = *atoms[lo].second;
          const Subspace& t = *atoms[hi].second;
          if (!leq(s, t, tol)) continue;
          const double res = orthomodular_residual(s, t, tol);
          j["orthomodular"].push_back({{"a", atoms[lo].first},
                                       {"b", atoms[hi].first},
                                       {"residual", json_number(res)},
                                       {"holds", res <= tol.proj}});
          ortho.add({atoms[lo].first, atoms[hi].first, format_number(res), yes_no(res <= tol.proj)});
        }
      }
    }
  }

  if (enabled("distributivity")) {
    for (std::size_t x = 0; x < atoms.size(); ++x)
      for (std::size_t y = 0; y < atoms.size(); ++y)
        for (std::size_t z = y + 1; z < atoms.size(); ++z) {
          if (y == x || z == x) continue;
          const double d = distributivity_defect(*atoms[x].second, *atoms[y].second, *atoms[z].second, tol);
          j["distributivity"].push_back(
              {{"a", atoms[x].first}, {"b", atoms[y].first}, {"c", atoms[z].first}, {"defect", json_number(d)}});
          distrib.add({atoms[x].first, atoms[y].first, atoms[z].first, format_number(d)});
        }
  }

  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << "dimension=" << sc.dimension << '\n';
  for (const auto& [name, s] : atoms) out << "atom " << name << " rank=" << s->rank() << '\n';
  out << "\n[pairs]\n";
  pairs.print(out);
  if (enabled("orthomodular")) {
    out << "\n[orthomodular]\n";
    ortho.print(out);
  }
  if (enabled("distributivity")) {
    out << "\n[distributivity]\n";
    distrib.print(out);
  }
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentOptions {
  std::string scenario;
  std::size_t trials = 10000;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

ordered_json experiment_json(const ExperimentConfig& cfg, const PatternReport& rep, const WhichWayResult& ww) {
  ordered_json j;
  j["command"] = "experiment";
  j["n_paths"] = cfg.n_paths();
  j["screen_cells"] = cfg.screen_cells;
  j["seed"] = cfg.seed;
  j["coherent"] = json_numbers(rep.coherent);
  j["mixture"] = json_numbers(rep.mixture);
  j["interference_term"] = json_numbers(rep.interference_term);
  j["regions"] = ordered_json::array();
  for (const auto& r : rep.regions) {
    j["regions"].push_back({{"name", r.name},
                            {"coherent", json_number(r.coherent)},
                            {"mixture", json_number(r.mixture)},
                            {"conditional", json_numbers(r.conditional)}});
  }
  ordered_json w;
  w["trials"] = ww.trials;
  w["clicks"] = ww.clicks;
  std::vector<double> freq;
  for (std::size_t c : ww.clicks) freq.push_back(static_cast<double>(c) / static_cast<double>(ww.trials));
  w["frequencies"] = json_numbers(freq);
  w["xor_always_true"] = ww.xor_always_true;
  w["post_click_bivalent"] = ww.post_click_bivalent;
  j["which_way"] = std::move(w);
  return j;
}

void run_experiment(const ExperimentOptions& opt, bool as_json, std::ostream& out) {
  ExperimentConfig cfg = parse_experiment(read_text_file(opt.scenario));
  if (opt.seed) cfg.seed = *opt.seed;
  const PatternReport rep = run_patterns(cfg);
  const WhichWayResult ww = simulate_which_way(cfg, opt.trials);
  const ordered_json j = experiment_json(cfg, rep, ww);

  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) fail(ErrorKind::ConfigInvalid, "cannot write report to '" + opt.out_path + "'");
    f << j.dump(2) << '\n';
  }
  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }

  out << "paths=" << cfg.n_paths() << " cells=" << cfg.screen_cells << " seed=" << cfg.seed << '\n';
  out << "\n[pattern]\n";
  Table cells({"cell", "coherent", "mixture", "interference"});
  for (std::size_t m = 0; m < cfg.screen_cells; ++m) {
    cells.add({std::to_string(m), format_number(rep.coherent[m]), format_number(rep.mixture[m]),
               format_number(rep.interference_term[m])});
  }
  cells.print(out);
  if (!rep.regions.empty()) {
    out << "\n[regions]\n";
    std::vector<std::string> header{"region", "coherent", "mixture"};
    for (std::size_t i = 0; i < cfg.n_paths(); ++i) header.push_back("P[R|X" + std::to_string(i + 1) + "]");
    Table regions(std::move(header));
    for (const auto& r : rep.regions) {
      std::vector<std::string> row{r.name, format_number(r.coherent), format_number(r.mixture)};
      for (double c : r.conditional) row.push_back(format_number(c));
      regions.add(std::move(row));
    }
    regions.print(out);
  }
  out << "\n[which-way]\n";
  out << "trials=" << ww.trials << '\n';
  Table clicks({"path", "clicks", "frequency", "born"});
  for (std::size_t i = 0; i < cfg.n_paths(); ++i) {
    clicks.add({"X" + std::to_string(i + 1), std::to_string(ww.clicks[i]),
                format_number(static_cast<double>(ww.clicks[i]) / static_cast<double>(ww.trials)),
                format_number(std::norm(cfg.amplitudes[i]))});
  }
  clicks.print(out);
  out << "xor_always_true=" << yes_no(ww.xor_always_true) << '\n';
  out << "post_click_bivalent=" << yes_no(ww.post_click_bivalent) << '\n';
}

// ---------------------------------------------------------------------------
// limit

void run_limit(const std::vector<std::size_t>& dims, const std::string& family_name, bool as_json, std::ostream& out) {
  const OperatorFamily family = operator_family_from_string(family_name);
  const std::vector<SweepRow> rows = commutator_sweep(family, dims);
  if (as_json) {
    ordered_json j;
    j["command"] = "limit";
    j["family"] = std::string(to_string(family));
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"dim", r.dim},
                           {"max_projector_commutator_norm", json_number(r.max_projector_commutator_norm)},
                           {"operator_commutator_norm", json_number(r.operator_commutator_norm)}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "family=" << to_string(family) << '\n';
  Table t({"dim", "max_projector_commutator_norm", "operator_commutator_norm"});
  for (const auto& r : rows) {
    t.add({std::to_string(r.dim), format_number(r.max_projector_commutator_norm),
           format_number(r.operator_commutator_norm)});
  }
  t.print(out);
}

// ---------------------------------------------------------------------------
// tables

std::vector<double> table_grid(LogicSystem sys) {
  switch (sys) {
    case LogicSystem::Bivalent: return {0.0, 1.0};
    case LogicSystem::Kleene3: return {0.0, 0.5, 1.0};
    case LogicSystem::LukasiewiczFuzzy: return {0.0, 0.25, 0.5, 0.75, 1.0};
  }
  return {};
}

void run_tables(const std::string& system_name, bool as_json, std::ostream& out) {
  const auto sys = logic_system_from_string(system_name);
  if (!sys) fail(ErrorKind::InvalidArgument, "unknown logic system '" + system_name + "'");
  const std::vector<double> grid = table_grid(*sys);

  ordered_json j;
  j["command"] = "tables";
  j["system"] = std::string(to_string(*sys));
  j["values"] = json_numbers(grid);
  j["negation"] = ordered_json::array();
  j["binary"] = ordered_json::array();

  Table unary({"t", "!t"});
  Table binary({"a", "b", "a&b", "a|b", "a^b"});
  for (double t : grid) {
    const TruthValue v = TruthValue::degree(t);
    j["negation"].push_back({{"t", json_number(t)}, {"not", json_truth(neg(v))}});
    unary.add({format_number(t), truth_text(neg(v))});
  }
  for (double a : grid) {
    for (double b : grid) {
      const TruthValue va = TruthValue::degree(a);
      const TruthValue vb = TruthValue::degree(b);
      const TruthValue c = conj(va, vb, *sys);
      const TruthValue d = disj(va, vb, *sys);
      const TruthValue x = xor_compound(va, vb, *sys);
      j["binary"].push_back({{"a", json_number(a)},
                             {"b", json_number(b)},
                             {"and", json_truth(c)},
                             {"or", json_truth(d)},
                             {"xor", json_truth(x)}});
      binary.add({format_number(a), format_number(b), truth_text(c), truth_text(d), truth_text(x)});
    }
  }
  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << "system=" << to_string(*sys) << "\n\n[negation]\n";
  unary.print(out);
  out << "\n[binary]\n";
  binary.print(out);
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  if (std::string_view(buf) == "-0") return "0";
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truth values of quantum propositions over subspace lattices", "qlogic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula against a scenario");
  eval->add_option("--scenario", eval_opt.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  eval->add_option("--formula", eval_opt.formula, "Formula text")->required();
  eval->add_option("--policy", eval_opt.policy, "Override the scenario policy")
      ->check(CLI::IsMember({"bivalent", "born", "super", "kleene3", "lukasiewicz"}));
  eval->add_flag("--json", as_json, "Emit JSON");

  LatticeOptions lattice_opt;
  auto* lattice = app.add_subcommand("lattice", "Check lattice laws over the scenario atoms");
  lattice->add_option("--scenario", lattice_opt.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  lattice->add_option("--checks", lattice_opt.checks, "Subset of checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember(kLatticeChecks));
  lattice->add_flag("--json", as_json, "Emit JSON");

  ExperimentOptions exp_opt;
  std::uint64_t seed = 0;
  auto* experiment = app.add_subcommand("experiment", "Interference patterns and which-way sampling");
  experiment->add_option("--scenario", exp_opt.scenario, "Document with an 'experiment' object")
      ->required()
      ->check(CLI::ExistingFile);
  experiment->add_option("--trials", exp_opt.trials, "Which-way trials")->check(CLI::PositiveNumber);
  auto* seed_opt = experiment->add_option("--seed", seed, "Sampling seed (default: config seed, else 20190101)");
  experiment->add_option("--out", exp_opt.out_path, "Also write the JSON report to this file");
  experiment->add_flag("--json", as_json, "Emit JSON");

  std::vector<std::size_t> dims{2, 4, 8, 16};
  std::string family = "clock-shift";
  auto* limit = app.add_subcommand("limit", "Projector commutator sweep over dimensions");
  limit->add_option("--dims", dims, "Comma-separated dimensions")->delimiter(',')->check(CLI::Range(2, 256));
  limit->add_option("--family", family, "Operator family")->check(CLI::IsMember({"clock-shift", "diagonal"}));
  limit->add_flag("--json", as_json, "Emit JSON");

  std::string system = "kleene3";
  auto* tables = app.add_subcommand("tables", "Print connective truth tables");
  tables->add_option("--system", system, "Logic system")->check(CLI::IsMember({"bivalent", "kleene3", "lukasiewicz"}));
  tables->add_flag("--json", as_json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (*seed_opt) exp_opt.seed = seed;

  std::ostringstream buffer;
  try {
    if (*eval) run_eval(eval_opt, as_json, buffer);
    if (*lattice) run_lattice(lattice_opt, as_json, buffer);
    if (*experiment) run_experiment(exp_opt, as_json, buffer);
    if (*limit) run_limit(dims, family, as_json, buffer);
    if (*tables) run_tables(system, as_json, buffer);
  } catch (const ParseError& e) {
    err << "error: ParseError: offset " << e.offset() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return is_runtime(e.kind()) ? kExitRuntime : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace qlogic::cli
