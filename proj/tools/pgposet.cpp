// Command-line front end: build posets, run verification tasks, sweep catalogs.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgposet/pposets.hpp"
#include "pgposet/quotient.hpp"
#include "pgposet/verify.hpp"

using namespace pgposet;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text << "\n";
}

void addBudgets(CLI::App* app, Budgets& b, std::size_t& cap) {
  app->add_option("--budget-chains", b.chains, "chain count bound")->capture_default_str();
  app->add_option("--budget-cosets", b.cosets, "coset enumeration bound")->capture_default_str();
  app->add_option("--budget-retract", b.retract, "retract search nodes")->capture_default_str();
  app->add_option("--budget-fusion", b.fusion, "fusion search states")->capture_default_str();
  app->add_option("--budget-iso", b.iso, "isomorphism size bound")->capture_default_str();
  app->add_option("--budget-group", cap, "group enumeration cap")->capture_default_str();
}

struct BuildArgs {
  std::string group;
  unsigned prime = 0;
  std::string poset = "Sp";
  std::string quotient = "none";
  unsigned subdivide = 0;
  std::string out;
  std::string dot;
};

/// The requested G-poset before subdivision.
GPoset basePoset(const PContext& ctx, const std::string& kind) {
  if (auto k = parsePosetKind(kind)) return buildPSubgroupPoset(ctx, *k).gposet();
  if (auto c = parseChainKind(kind)) return buildChainSubcomplexPoset(ctx, *c).gposet;
  throw Error(ErrorKind::InvalidInput, "unknown poset kind " + kind);
}

int cmdBuild(const BuildArgs& a, const Budgets& b, std::size_t cap) {
  if (a.quotient != "none" && a.quotient != "orbit") {
    throw Error(ErrorKind::InvalidInput, "--quotient takes none or orbit");
  }
  if (a.subdivide > 2) throw Error(ErrorKind::InvalidInput, "--subdivide is limited to 0, 1 or 2");
  auto g = loadGroupSpec(a.group, cap);
  PContext ctx(g, a.prime);
  GPoset xg = basePoset(ctx, a.poset);
  Poset result;
  if (a.quotient == "orbit") {
    for (unsigned i = 1; i < a.subdivide; ++i) xg = subdivideG(xg, b.chains);
    result = a.subdivide == 0 ? orbitPoset(xg).space : chainOrbitPoset(xg, b.chains).quotient.space;
  } else {
    result = xg.space;
    for (unsigned i = 0; i < a.subdivide; ++i) result = subdivide(result, b.chains);
  }

  auto j = nlohmann::ordered_json::parse(toJson(result));
  nlohmann::ordered_json out;
  out["group"] = g->name();
  out["order"] = g->order();
  out["prime"] = a.prime;
  out["poset"] = a.poset;
  out["quotient"] = a.quotient;
  out["subdivide"] = a.subdivide;
  out["size"] = result.size();
  out["height"] = result.height();
  out["core"] = coreIndices(result).size();
  out["labels"] = j["labels"];
  out["covers"] = j["covers"];
  emit(out.dump(2), a.out);
  if (!a.dot.empty()) emit(toDot(result, a.poset), a.dot);
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Posets of p-subgroups, their subdivisions and orbit spaces"};
  app.require_subcommand(1);
  Budgets budgets;
  std::size_t cap = kDefaultGroupCap;

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a poset and dump it as JSON");
  b->add_option("--group", build.group, "builtin:<name> or file:<path>")->required();
  b->add_option("--prime", build.prime, "prime p")->required();
  b->add_option("--poset", build.poset, "Sp, Ap, Bp, Xp, iSp, Rp or N")->capture_default_str();
  b->add_option("--quotient", build.quotient, "none or orbit")->capture_default_str();
  b->add_option("--subdivide", build.subdivide, "number of subdivisions (0-2)")->capture_default_str();
  b->add_option("--out", build.out, "JSON output path (stdout by default)");
  b->add_option("--dot", build.dot, "DOT output path");
  addBudgets(b, budgets, cap);

  std::string task, group, out;
  unsigned prime = 0;
  bool noTimings = false;
  auto* v = app.add_subcommand("verify", "Run one verification task");
  v->add_option("--task", task, "task id")->required()->check(CLI::IsMember(taskNames()));
  v->add_option("--group", group, "builtin:<name> or file:<path>")->required();
  v->add_option("--prime", prime, "prime p")->required();
  v->add_option("--out", out, "report path (stdout by default)");
  v->add_flag("--no-timings", noTimings, "leave timings out of the report");
  addBudgets(v, budgets, cap);

  std::string dir;
  bool builtins = false;
  std::vector<std::string> tasks{"conjecture"};
  auto* c = app.add_subcommand("catalog", "Sweep tasks over a catalog of groups");
  c->add_option("--dir", dir, "directory of group files");
  c->add_flag("--builtins", builtins, "include the builtin catalog");
  c->add_option("--task", tasks, "task ids")->check(CLI::IsMember(taskNames()))->capture_default_str();
  c->add_option("--out", out, "summary path (stdout by default)");
  c->add_flag("--no-timings", noTimings, "leave timings out of the reports");
  addBudgets(c, budgets, cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*b) return cmdBuild(build, budgets, cap);
    if (*v) {
      auto g = loadGroupSpec(group, cap);
      auto report = runTask(task, g, prime, budgets, group);
      emit(report.toJson(!noTimings).dump(2), out);
      return report.exitCode();
    }
    std::vector<std::string> specs;
    if (!dir.empty()) specs = groupFilesIn(dir);
    if (builtins || dir.empty()) {
      for (const auto& name : builtinCatalog()) specs.push_back("builtin:" + name);
    }
    auto summary = runCatalog(specs, tasks, budgets);
    emit(summary.toJson(!noTimings).dump(2), out);
    return summary.exitCode();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.isBudget() ? kBudget : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
