#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "primaltop/space_io.hpp"

namespace primaltop {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string input;
  std::string op;
  std::string set_arg;
  bool set_given = false;
  std::string theorems = "all";
  int n = 0;
  std::string strategy = "exhaustive";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "table";
};

void emit(const Report& report, const Options& opt, std::ostream& out) {
  out << (opt.format == "machine" ? report.machine() : report.table());
}

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  return text.substr(begin, text.find_last_not_of(" \t") - begin + 1);
}

// "a,b" or "{a,b}" or "" / "{}" for the empty set.
Subset parse_set_arg(const UniversePtr& universe, std::string text) {
  text = trimmed(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}')
    text = text.substr(1, text.size() - 2);
  std::vector<std::string> names;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ','))
    if (!trimmed(current).empty()) names.push_back(trimmed(current));
  return Subset::of(universe, names);
}

std::vector<std::string> resolve_theorem_ids(const std::string& arg) {
  std::vector<std::string> ids;
  if (arg == "all") {
    for (const auto& info : theorem_catalog()) ids.emplace_back(info.id);
    return ids;
  }
  std::string current;
  std::istringstream in(arg);
  while (std::getline(in, current, ','))
    if (!current.empty()) {
      require_theorem(current);
      ids.push_back(current);
    }
  if (ids.empty()) throw Error("unknown-theorem", "no theorem ids given");
  return ids;
}

SweepStrategy parse_strategy(const Options& opt) {
  if (opt.strategy == "exhaustive") return SweepStrategy::exhaustive();
  std::string name = opt.strategy;
  int samples = 1000;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    try {
      size_t used = 0;
      samples = std::stoi(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw ParseError("sample count in \"" + opt.strategy + "\" must be a number");
    }
    name = name.substr(0, colon);
    if (samples <= 0) throw ParseError("sample count must be positive");
  }
  if (name != "sampled")
    throw ParseError("unknown strategy \"" + opt.strategy +
                     "\" (use exhaustive or sampled[:count])");
  if (!opt.seed_given) throw ParseError("the sampled strategy requires --seed");
  return SweepStrategy::sampled(samples, opt.seed);
}

json violation_json(const Universe& u, const Error& e, const std::vector<Bits>& witness) {
  json sets = json::array();
  for (Bits b : witness) {
    json names = json::array();
    for (int i = 0; i < u.size(); ++i)
      if ((b >> i) & 1u) names.push_back(u.name_of(i));
    sets.push_back(std::move(names));
  }
  return json{{"code", e.code()}, {"message", e.what()}, {"witness", std::move(sets)}};
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const SpaceDocument doc = load_space_document(opt.input);
  json body{
      {"schema_version", kReportSchemaVersion},
      {"command", "validate"},
      {"input", opt.input},
      {"name", doc.name},
      {"universe", doc.universe->points()},
  };

  static constexpr const char* kTopologyAxioms[] = {
      "topology-has-empty", "topology-has-universe", "topology-closed-under-union",
      "topology-closed-under-intersection"};
  static constexpr const char* kPrimalAxioms[] = {
      "primal-excludes-universe", "primal-downward-closed", "primal-intersection-splitting"};

  auto all_ok = [&] {
    json axioms = json::array();
    for (const char* a : kTopologyAxioms) axioms.push_back(json{{"axiom", a}, {"ok", true}});
    for (const char* a : kPrimalAxioms) axioms.push_back(json{{"axiom", a}, {"ok", true}});
    return axioms;
  };

  try {
    doc.to_space();
  } catch (const TopologyValidationError& e) {
    body["status"] = "invalid";
    body["violation"] = violation_json(*doc.universe, e, e.witness());
    emit(Report(std::move(body)), opt, out);
    return kExitValidation;
  } catch (const PrimalValidationError& e) {
    body["status"] = "invalid";
    body["violation"] = violation_json(*doc.universe, e, e.witness());
    emit(Report(std::move(body)), opt, out);
    return kExitValidation;
  }
  body["status"] = "ok";
  body["axioms"] = all_ok();
  emit(Report(std::move(body)), opt, out);
  return kExitOk;
}

int cmd_compute(const Options& opt, std::ostream& out) {
  const SpaceDocument doc = load_space_document(opt.input);
  const PrimalSpace space = doc.to_space();

  json body{
      {"schema_version", kReportSchemaVersion},
      {"command", "compute"},
      {"input", opt.input},
      {"name", doc.name},
      {"operator", opt.op},
  };

  const bool pointwise = opt.op == "diamond" || opt.op == "diamond-r" || opt.op == "cl" ||
                         opt.op == "cl-r";
  if (pointwise) {
    auto apply = [&](const Subset& a) {
      if (opt.op == "diamond") return diamond(space, a);
      if (opt.op == "diamond-r") return diamond_r(space, a);
      if (opt.op == "cl") return cl_diamond(space, a);
      return cl_diamond_r(space, a);
    };
    if (opt.set_given) {
      const Subset a = parse_set_arg(space.universe_ptr(), opt.set_arg);
      body["set"] = subset_to_json(a);
      body["result"] = subset_to_json(apply(a));
    } else {
      json table = json::array();
      for (const Subset& a : Powerset(space.universe_ptr()))
        table.push_back(json{{"set", subset_to_json(a)}, {"value", subset_to_json(apply(a))}});
      body["table"] = std::move(table);
    }
  } else {
    if (opt.set_given)
      throw ParseError("--set only applies to the pointwise operators "
                       "(diamond, diamond-r, cl, cl-r)");
    SetFamily family(space.universe_ptr(), {});
    if (opt.op == "tau")
      family = tau_diamond(space);
    else if (opt.op == "tau-r")
      family = tau_diamond_r(space);
    else if (opt.op == "tau-delta")
      family = space.topology().delta_open_family();
    else if (opt.op == "ro")
      family = space.topology().regular_open_family();
    else if (opt.op == "base")
      family = base_family(space);
    else
      throw ParseError("unknown operator \"" + opt.op + "\"");
    body["family"] = family_to_json(family);
  }
  emit(Report(std::move(body)), opt, out);
  return kExitOk;
}

json results_body(const char* command, const std::vector<CheckReport>& reports) {
  json results = json::array();
  bool direct_ok = true;
  for (const auto& r : reports) {
    results.push_back(check_report_to_json(r));
    if (r.kind == TheoremKind::Direct && !r.passed) direct_ok = false;
  }
  return json{
      {"schema_version", kReportSchemaVersion},
      {"command", command},
      {"results", std::move(results)},
      {"status", direct_ok ? "pass" : "fail"},
  };
}

int cmd_check(const Options& opt, std::ostream& out) {
  const SpaceDocument doc = load_space_document(opt.input);
  const PrimalSpace space = doc.to_space();
  const auto ids = resolve_theorem_ids(opt.theorems);

  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) reports.push_back(check_theorem(id, space));

  json body = results_body("check", reports);
  body["input"] = opt.input;
  body["name"] = doc.name;
  const bool ok = body["status"] == "pass";
  emit(Report(std::move(body)), opt, out);
  return ok ? kExitOk : kExitInternal;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const auto ids = resolve_theorem_ids(opt.theorems);
  const SweepStrategy strategy = parse_strategy(opt);
  const auto reports = sweep_catalog(ids, opt.n, strategy);

  json body = results_body("sweep", reports);
  body["n"] = opt.n;
  body["strategy"] = strategy.label();
  body["seed"] =
      strategy.mode == SweepStrategy::Mode::Sampled ? json(strategy.seed) : json(nullptr);
  const bool ok = body["status"] == "pass";
  emit(Report(std::move(body)), opt, out);
  return ok ? kExitOk : kExitInternal;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const UniversePtr universe = Universe::make(default_point_names(opt.n));
  json body{
      {"schema_version", kReportSchemaVersion},
      {"command", "enumerate"},
      {"n", opt.n},
      {"topologies", static_cast<long long>(enumerate_topologies(universe).size())},
      {"primals", static_cast<long long>(enumerate_primals(universe).size())},
  };
  emit(Report(std::move(body)), opt, out);
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite primal topological space engine"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"machine", "table"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check the space axioms of a document");
  validate->add_option("--input", opt.input, "space document")->required();
  add_format(validate);

  CLI::App* compute = app.add_subcommand("compute", "evaluate an operator on a space");
  compute->add_option("--input", opt.input, "space document")->required();
  compute->add_option("--operator", opt.op, "diamond|diamond-r|cl|cl-r|tau|tau-r|tau-delta|ro|base")
      ->required()
      ->check(CLI::IsMember({"diamond", "diamond-r", "cl", "cl-r", "tau", "tau-r", "tau-delta",
                             "ro", "base"}));
  compute->add_option("--set", opt.set_arg, "subset as comma-separated point names");
  add_format(compute);

  CLI::App* check = app.add_subcommand("check", "run theorem checks on one space");
  check->add_option("--input", opt.input, "space document")->required();
  check->add_option("--theorems", opt.theorems, "comma-separated theorem ids or \"all\"");
  add_format(check);

  CLI::App* sweep = app.add_subcommand("sweep", "run theorem checks over all spaces on n points");
  sweep->add_option("--n", opt.n, "number of points (1-4)")->required();
  sweep->add_option("--theorems", opt.theorems, "comma-separated theorem ids or \"all\"");
  sweep->add_option("--strategy", opt.strategy, "exhaustive or sampled[:count]");
  sweep->add_option("--seed", opt.seed, "random seed (required for sampled)");
  add_format(sweep);

  CLI::App* enumerate = app.add_subcommand("enumerate", "count topologies and primals on n points");
  enumerate->add_option("--n", opt.n, "number of points (1-4)")->required();
  add_format(enumerate);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  opt.set_given = compute->count("--set") > 0;
  opt.seed_given = sweep->count("--seed") > 0;

  try {
    if (*validate) return cmd_validate(opt, out);
    if (*compute) return cmd_compute(opt, out);
    if (*check) return cmd_check(opt, out);
    if (*sweep) return cmd_sweep(opt, out);
    if (*enumerate) return cmd_enumerate(opt, out);
    err << "error: no command given\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const TopologyValidationError& e) {
    err << "invalid space: " << e.what() << "\n";
    return kExitValidation;
  } catch (const PrimalValidationError& e) {
    err << "invalid space: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace primaltop
