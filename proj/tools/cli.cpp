#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "hgkit/errors.hpp"
#include "hgkit/extremal.hpp"
#include "hgkit/hg_io.hpp"
#include "hgkit/kernel.hpp"
#include "hgkit/sunflower.hpp"
#include "hgkit/transversal.hpp"

namespace hgkit::cli {

namespace {

template <typename T>
std::optional<T> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  try {
    if constexpr (std::is_floating_point_v<T>)
      return static_cast<T>(std::stod(raw));
    else
      return static_cast<T>(std::stoull(raw));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

const char* command_name(Command c) {
  switch (c) {
    case Command::codegree: return "codegree";
    case Command::tau: return "tau";
    case Command::cover: return "cover";
    case Command::sunflower: return "sunflower";
    case Command::kernel: return "kernel";
    case Command::cross_max: return "cross-max";
    case Command::extremal: return "extremal";
    case Command::verify: return "verify";
  }
  return "?";
}

SearchBudget make_budget(const RunConfig& c) {
  SearchBudget b;
  if (c.node_budget) b.with_max_nodes(*c.node_budget);
  if (c.time_budget) b.with_time_limit(std::chrono::duration<double>(*c.time_budget));
  return b;
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1)
    throw std::invalid_argument(std::string(command_name(c.command)) + " expects one .hg file");
  return c.inputs.front();
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

Json hg_params(const std::string& path, const Hypergraph& h) {
  return Json{{"file", path}, {"n", h.n()}, {"r", h.r()}, {"edges", h.size()}};
}

Json run_codegree(const RunConfig& c) {
  const auto& path = single_input(c);
  Hypergraph h = read_hg_file(path);
  Json report = make_report("codegree", hg_params(path, h));
  report["value"] = min_positive_codegree(h);
  report["details"] = {{"intersecting", is_intersecting(h)}};
  return report;
}

Json run_tau(const RunConfig& c) {
  const auto& path = single_input(c);
  Hypergraph h = read_hg_file(path);
  Json report = make_report("tau", hg_params(path, h));
  VertexSet x = minimum_transversal(h);
  report["value"] = x.size();
  report["witness"] = to_json(x);
  return report;
}

Json run_cover(const RunConfig& c) {
  const auto& path = single_input(c);
  const int t = require(c.t, "--t");
  Hypergraph h = read_hg_file(path);
  Json params = hg_params(path, h);
  params["t"] = t;
  Json report = make_report("cover", std::move(params));
  CoveringFamily f = covering_family(h, t);
  report["value"] = f.members.size();
  report["witness"] = edges_json(f.members);
  report["details"] = {{"bound", to_json(power(h.r(), t))}, {"covers", covers(f, h)}};
  return report;
}

Json run_sunflower(const RunConfig& c) {
  const auto& path = single_input(c);
  const int p = require(c.p, "--p");
  Hypergraph h = read_hg_file(path);
  Json params = hg_params(path, h);
  params["mode"] = c.mode;
  params["p"] = p;

  std::optional<Sunflower> found;
  if (c.mode == "exact") {
    const int max_core = c.max_core.value_or(h.r());
    params["max_core"] = max_core;
    found = find_sunflower_exact(h, p, max_core);
  } else if (c.mode == "greedy") {
    found = erdos_rado_greedy(h, p);
    if (c.max_core) {
      params["max_core"] = *c.max_core;
      if (found && found->core.size() > *c.max_core) found.reset();
    }
  } else if (c.mode == "smallcore") {
    const int k = c.max_core.value_or(h.r() - 1);
    params["max_core"] = k;
    found = extract_small_core(h, p, k);
  } else {
    throw std::invalid_argument("unknown sunflower mode '" + c.mode + "'");
  }

  Json report = make_report("sunflower", std::move(params));
  if (found) {
    report["value"] = found->petal_count();
    report["witness"] = to_json(*found);
  }
  return report;
}

Json run_kernel(const RunConfig& c) {
  Json params{{"action", c.mode}};
  if (c.mode == "cover") {
    const auto& path = single_input(c);
    const int k = require(c.k, "--k");
    Hypergraph h = read_hg_file(path);
    params = hg_params(path, h);
    params["action"] = c.mode;
    params["k"] = k;
    Json report = make_report("kernel", std::move(params));
    if (auto x = kernel_cover(h, k)) report["value"] = to_json(*x);
    return report;
  }

  KernelParams kp{require(c.n, "--n"), require(c.r, "--r"), require(c.k, "--k")};
  params["n"] = kp.n;
  params["r"] = kp.r;
  params["k"] = kp.k;
  if (c.mode == "count") {
    Json report = make_report("kernel", std::move(params));
    report["value"] = to_json(kernel_edge_count(kp));
    return report;
  }
  if (c.mode != "gen") throw std::invalid_argument("unknown kernel action '" + c.mode + "'");
  Hypergraph h = build_kernel_system(kp);
  if (!c.hg_out.empty()) {
    write_hg_file(c.hg_out, h);
    params["out"] = c.hg_out;
  }
  Json report = make_report("kernel", std::move(params));
  report["value"] = h.size();
  report["witness"] = {{"kernel", to_json(kernel_set(kp.k))}, {"hypergraph", to_json(h)}};
  return report;
}

Json run_cross_max(const RunConfig& c) {
  const int N = require(c.N, "--N");
  const int a = require(c.a, "--a");
  Json report = make_report("cross-max", Json{{"N", N}, {"a", a}});
  CrossPairReport rep = max_cross_pair(N, a, make_budget(c));
  report["value"] = rep.max_value;
  report["witness"] = {{"A", edges_json(rep.witness_a.edges())},
                       {"B", edges_json(rep.witness_b.edges())}};
  report["details"] = {{"bound", rep.bound},
                       {"attains_bound", rep.max_value == rep.bound},
                       {"optimizers", rep.optimizer_count},
                       {"empty_b_optimizers", rep.empty_b_optimizers},
                       {"common_star_optimizers", rep.common_star_optimizers},
                       {"all_optimizers_match_equality_cases",
                        rep.all_optimizers_match_equality_cases},
                       {"nodes", rep.nodes}};
  return report;
}

Json run_extremal(const RunConfig& c) {
  const int n = require(c.n, "--n");
  const int r = require(c.r, "--r");
  const int k = require(c.k, "--k");
  Json params{{"n", n}, {"r", r}, {"k", k}, {"iso", c.iso}, {"naive_check", c.naive_check}};
  Json report = make_report("extremal", std::move(params));

  SearchOptions options;
  options.iso = c.iso;
  options.naive_check = c.naive_check;
  options.allow_large = c.allow_large;
  options.budget = make_budget(c);
  SearchReport rep = max_intersecting_with_codegree(n, r, k, std::move(options));

  report["value"] = rep.max_edges;
  report["witness"] = to_json(rep.optimizer);
  Json details;
  details["kernel_count"] = rep.kernel_count ? to_json(*rep.kernel_count) : Json(nullptr);
  details["matches_kernel"] = rep.matches_kernel;
  details["kernel"] = rep.kernel ? to_json(*rep.kernel) : Json(nullptr);
  details["kernel_covered"] = rep.kernel_covered;
  details["optimizers"] = rep.optimizer_count;
  details["unique_up_to_iso"] =
      rep.unique_up_to_iso ? Json(*rep.unique_up_to_iso) : Json(nullptr);
  details["optimizer_classes"] =
      rep.optimizer_classes ? Json(*rep.optimizer_classes) : Json(nullptr);
  details["maximal_families"] = rep.maximal_families;
  details["nodes"] = rep.nodes;
  if (rep.naive_max_edges) {
    details["naive_max_edges"] = *rep.naive_max_edges;
    details["naive_nodes"] = *rep.naive_nodes;
    details["naive_agrees"] = *rep.naive_agrees;
  }
  report["details"] = std::move(details);
  if (rep.naive_agrees && !*rep.naive_agrees) report["error"] = "naive oracle disagrees";
  return report;
}

Json run_verify(const RunConfig& c, int& status) {
  const double budget = c.time_budget.value_or(600.0);
  Json report = make_report("verify", Json{{"seed", c.seed}, {"budget", budget}});
  VerifySummary summary = verify_all(c.seed, budget);
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& check : summary.checks) {
    passed += check.status == "pass";
    checks.push_back({{"name", check.name},
                      {"status", check.status},
                      {"params", check.params},
                      {"detail", check.detail},
                      {"elapsed", check.elapsed}});
  }
  report["value"] = Json{{"passed", passed}, {"total", summary.checks.size()}};
  report["witness"] = std::move(checks);
  status = summary.exit_status();
  return report;
}

}  // namespace

ParsedArgs parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.node_budget = env_number<std::uint64_t>("HGKIT_NODE_BUDGET");
  config.time_budget = env_number<double>("HGKIT_TIME_BUDGET");

  CLI::App app{"Uniform hypergraph toolkit", "hgkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", config.out, "Write the JSON report to this file");
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  app.add_option("--node-budget", node_budget, "Search node limit");
  app.add_option("--time-budget", time_budget, "Time limit in seconds");

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", config.inputs, "Input .hg file")->required();
  };

  auto* codegree = app.add_subcommand("codegree", "Minimum positive co-degree");
  add_file(codegree);

  auto* tau = app.add_subcommand("tau", "Transversal number");
  add_file(tau);

  auto* cover = app.add_subcommand("cover", "Covering family of t-sets");
  cover->add_option("--t", config.t)->required();
  add_file(cover);

  auto* sunflower = app.add_subcommand("sunflower", "Sunflower search");
  sunflower->add_option("mode", config.mode)
      ->required()
      ->check(CLI::IsMember({"exact", "greedy", "smallcore"}));
  sunflower->add_option("--p", config.p)->required();
  sunflower->add_option("--max-core", config.max_core);
  add_file(sunflower);

  auto* kernel = app.add_subcommand("kernel", "Kernel systems");
  kernel->require_subcommand(1);
  kernel->fallthrough();
  auto* gen = kernel->add_subcommand("gen", "Build a kernel system");
  auto* count = kernel->add_subcommand("count", "Closed-form edge count");
  for (auto* sub : {gen, count}) {
    sub->fallthrough();
    sub->add_option("--n", config.n)->required();
    sub->add_option("--r", config.r)->required();
    sub->add_option("--k", config.k)->required();
  }
  gen->add_option("--out", config.hg_out, "Write the hypergraph as .hg");
  auto* kcover = kernel->add_subcommand("cover", "Find a covering kernel");
  kcover->fallthrough();
  kcover->add_option("--k", config.k)->required();
  add_file(kcover);

  auto* cross = app.add_subcommand("cross-max", "Maximum cross-intersecting pair");
  cross->add_option("--N", config.N)->required();
  cross->add_option("--a", config.a)->required();

  auto* extremal = app.add_subcommand("extremal", "Extremal search");
  extremal->add_option("--n", config.n)->required();
  extremal->add_option("--r", config.r)->required();
  extremal->add_option("--k", config.k)->required();
  extremal->add_flag("--iso", config.iso, "Keep one family per isomorphism class");
  extremal->add_flag("--naive-check", config.naive_check, "Cross-check with the naive search");
  extremal->add_flag("--allow-large", config.allow_large, "Lift the default size limits");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--seed", config.seed);
  std::optional<double> verify_budget;
  verify->add_option("--budget", verify_budget, "Total time budget in seconds");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, exit_code::ok};
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return {std::nullopt, exit_code::ok};
    }
    err << "hgkit: " << e.what() << '\n';
    return {std::nullopt, exit_code::input_error};
  }

  config.format = format == "table" ? Format::table : Format::json;
  if (node_budget) config.node_budget = node_budget;
  if (time_budget) config.time_budget = time_budget;

  const std::pair<CLI::App*, Command> table[] = {
      {codegree, Command::codegree}, {tau, Command::tau},
      {cover, Command::cover},       {sunflower, Command::sunflower},
      {kernel, Command::kernel},     {cross, Command::cross_max},
      {extremal, Command::extremal}, {verify, Command::verify}};
  for (const auto& [sub, cmd] : table)
    if (sub->parsed()) config.command = cmd;
  if (config.command == Command::kernel)
    config.mode = gen->parsed() ? "gen" : count->parsed() ? "count" : "cover";
  if (config.command == Command::verify && verify_budget) config.time_budget = verify_budget;
  return {std::move(config), exit_code::ok};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  int status = exit_code::ok;
  try {
    switch (config.command) {
      case Command::codegree: report = run_codegree(config); break;
      case Command::tau: report = run_tau(config); break;
      case Command::cover: report = run_cover(config); break;
      case Command::sunflower: report = run_sunflower(config); break;
      case Command::kernel: report = run_kernel(config); break;
      case Command::cross_max: report = run_cross_max(config); break;
      case Command::extremal: report = run_extremal(config); break;
      case Command::verify: report = run_verify(config, status); break;
    }
  } catch (const TransversalTooSmall& e) {
    err << "hgkit: " << e.what() << '\n';
    return exit_code::precondition;
  } catch (const PreconditionError& e) {
    err << "hgkit: " << e.what() << '\n';
    return exit_code::precondition;
  } catch (const LimitExceeded& e) {
    err << "hgkit: " << e.what() << '\n';
    return exit_code::limit;
  } catch (const ParseError& e) {
    err << "hgkit: " << (config.inputs.empty() ? std::string() : config.inputs.front() + ":")
        << e.what() << '\n';
    return exit_code::input_error;
  } catch (const std::exception& e) {
    err << "hgkit: " << e.what() << '\n';
    return exit_code::input_error;
  }

  if (report.contains("error")) status = exit_code::input_error;
  report["elapsed"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) {
      err << "hgkit: cannot write " << config.out << '\n';
      return exit_code::input_error;
    }
    file << report.dump(2) << '\n';
  }
  if (config.format == Format::table)
    out << render_table(report);
  else
    out << report.dump(2) << '\n';
  return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParsedArgs parsed = parse_args(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace hgkit::cli
