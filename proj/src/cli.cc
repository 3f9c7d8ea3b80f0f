#include "insp/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "insp/error.h"
#include "insp/generator.h"
#include "insp/instance_io.h"
#include "insp/solver.h"
#include "insp/verify.h"

namespace insp {
namespace {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InspError(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance LoadInstance(const std::string& path) {
  try {
    return ParseInstance(ReadFile(path));
  } catch (const InspError& error) {
    throw InspError(error.code(), path + ": " + error.what());
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json ViolationsToJson(const Instance& instance,
                      const PreconditionReport& report) {
  const MetricTree& tree = instance.tree();
  json out = json::array();
  for (const EdgeViolation& v : report.violations) {
    out.push_back({{"u", tree.name(tree.edge(v.edge).u)},
                   {"v", tree.name(tree.edge(v.edge).v)},
                   {"R", v.cut_requirement}});
  }
  return out;
}

int SolveCommand(const std::string& path, bool trace, bool check,
                 std::ostream& out, std::ostream& err) {
  const Instance instance = LoadInstance(path);
  const MetricTree& tree = instance.tree();
  if (const PreconditionReport report = CheckPreconditions(instance);
      !report.ok()) {
    for (const EdgeViolation& v : report.violations) {
      err << "precondition violated: edge " << tree.name(tree.edge(v.edge).u)
          << "-" << tree.name(tree.edge(v.edge).v) << " has R(X_e) = "
          << v.cut_requirement << " (need >= 2)\n";
    }
    out << json{{"status", "precondition_violated"},
                {"violations", ViolationsToJson(instance, report)},
                {"instance_hash", InstanceHash(instance)}}
               .dump(2)
        << "\n";
    return kExitPrecondition;
  }

  SolveOptions options;
  if (trace) {
    options.on_split = [&](const SplitEvent& event, const SplitState&) {
      err << "split " << tree.name(event.s) << " " << tree.name(event.u) << " "
          << tree.name(event.w) << " " << event.amount << "\n";
    };
  }
  const Solution solution = Solve(instance, options);

  if (check) {
    const RealizationReport report =
        VerifyRealization(instance, solution.realization);
    for (const Deficit& d : report.deficits) {
      err << "check failed: " << tree.name(d.s) << "-" << tree.name(d.t)
          << " max-flow " << d.achieved << " < r = " << d.required << "\n";
    }
    if (!report.ok()) return kExitVerification;
    if (solution.cost != OptimalCostFormula(instance)) {
      err << "check failed: cost differs from the closed-form optimum\n";
      return kExitInternal;
    }
  }
  out << SolutionToJson(instance, solution).dump(2) << "\n";
  return kExitOk;
}

int BoundCommand(const std::string& path, std::ostream& out) {
  const Instance instance = LoadInstance(path);
  const PreconditionReport report = CheckPreconditions(instance);
  json doc{{"fractional_lower_bound",
            FormatRational(FractionalLowerBound(instance))},
           {"preconditions_hold", report.ok()},
           {"instance_hash", InstanceHash(instance)}};
  if (report.ok()) {
    doc["formula_cost"] = FormatRational(OptimalCostFormula(instance));
  } else {
    doc["formula_cost"] = nullptr;
    doc["violations"] = ViolationsToJson(instance, report);
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int JoinCommand(const std::string& path, const std::string& even,
                const std::string& odd, std::ostream& out) {
  const Instance instance = LoadInstance(path);
  ParityInstance p{&instance.tree(), {}, {}};
  for (const std::string& name : SplitList(even)) {
    p.even_set.push_back(instance.tree().FindNode(name));
  }
  for (const std::string& name : SplitList(odd)) {
    p.odd_set.push_back(instance.tree().FindNode(name));
  }
  const auto join = MinCostIJJoin(p);
  if (!join) {
    out << json{{"status", "infeasible"}}.dump(2) << "\n";
    return kExitOk;
  }
  json doc = JoinToJson(instance.tree(), *join);
  doc["status"] = "ok";
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int VerifyCommand(const std::string& instance_path,
                  const std::string& realization_path, std::ostream& out,
                  std::ostream& err) {
  const Instance instance = LoadInstance(instance_path);
  const RealizationDocument doc =
      ParseRealization(ReadFile(realization_path), instance);
  const std::string hash = InstanceHash(instance);
  if (doc.instance_hash && *doc.instance_hash != hash) {
    err << "instance hash mismatch: realization was produced for "
        << *doc.instance_hash << ", instance is " << hash << "\n";
    return kExitInputError;
  }
  const RealizationReport report = VerifyRealization(instance, doc.realization);
  const MetricTree& tree = instance.tree();
  json deficits = json::array();
  for (const Deficit& d : report.deficits) {
    deficits.push_back({{"s", tree.name(d.s)},
                        {"t", tree.name(d.t)},
                        {"required", d.required},
                        {"achieved", d.achieved}});
    err << "violation: " << tree.name(d.s) << "-" << tree.name(d.t)
        << " deficit " << d.required - d.achieved << "\n";
  }
  out << json{{"status", report.ok() ? "ok" : "violated"},
              {"cost", FormatRational(RealizationCost(instance, doc.realization))},
              {"violations", std::move(deficits)},
              {"instance_hash", hash}}
             .dump(2)
      << "\n";
  return report.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Minimum-cost integer network synthesis under tree metrics",
               "insp"};
  app.require_subcommand(1);

  std::string solve_file;
  bool trace = false;
  bool check = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("file", solve_file, "INSP-JSON instance")->required();
  solve->add_flag("--trace", trace, "Print one 'split s u w t' line per split");
  solve->add_flag("--check", check, "Verify the result before printing");

  std::string bound_file;
  CLI::App* bound = app.add_subcommand("bound", "Lower bound and optimum");
  bound->add_option("file", bound_file, "INSP-JSON instance")->required();

  std::string join_file;
  std::string even;
  std::string odd;
  CLI::App* join = app.add_subcommand("join", "Minimum (I,J)-join on the tree");
  join->add_option("file", join_file, "INSP-JSON instance")->required();
  join->add_option("--even", even, "Comma-separated even-degree nodes");
  join->add_option("--odd", odd, "Comma-separated odd-degree nodes");

  std::string verify_instance;
  std::string verify_realization;
  CLI::App* verify = app.add_subcommand("verify", "Check a realization");
  verify->add_option("instance", verify_instance, "INSP-JSON instance")
      ->required();
  verify->add_option("realization", verify_realization,
                     "Realization or result document")
      ->required();

  GeneratorOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Random instance");
  gen->add_option("--terminals", gen_options.terminals)->required();
  gen->add_option("--inner", gen_options.inner)->required();
  gen->add_option("--rmin", gen_options.rmin)->default_val(2);
  gen->add_option("--rmax", gen_options.rmax)->required();
  gen->add_option("--seed", gen_options.seed)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << error.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*solve) return SolveCommand(solve_file, trace, check, out, err);
    if (*bound) return BoundCommand(bound_file, out);
    if (*join) return JoinCommand(join_file, even, odd, out);
    if (*verify) {
      return VerifyCommand(verify_instance, verify_realization, out, err);
    }
    if (*gen) {
      out << GenerateInstanceDocument(gen_options).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const InspError& error) {
    err << error.what() << "\n";
    switch (error.code()) {
      case ErrorCode::kPreconditionViolated:
        return kExitPrecondition;
      case ErrorCode::kSolverInternalError:
      case ErrorCode::kNoSplittablePair:
      case ErrorCode::kResidualInnerDegree:
        return kExitInternal;
      default:
        return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace insp
