// masim: compare sequential remote invocation (DNR) against mobile-agent
// itinerary migration (MA) with a closed-form cost model and a deterministic
// discrete-event simulator.
//
// Exit codes: 0 success / validation pass, 1 validation fail, 2 config error,
// 3 runtime error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "masim/agent.hpp"
#include "masim/regime.hpp"
#include "masim/remoting.hpp"
#include "masim/scenario.hpp"
#include "masim/sweep.hpp"
#include "masim/validate.hpp"

using namespace masim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFail = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

struct ParamFlags {
  std::optional<double> tr, ty, t_obj, t_proxy, alpha, beta, psi, sigma, code_size;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--tr", tr, "one-way request/response transit time");
    cmd->add_option("--ty", ty, "agent code transfer time per link");
    cmd->add_option("--t-obj", t_obj, "object search time");
    cmd->add_option("--t-proxy", t_proxy, "one-time proxy download cost");
    cmd->add_option("--alpha", alpha, "request size (bytes)");
    cmd->add_option("--beta", beta, "response size for the distinct-size cost variants");
    cmd->add_option("--psi", psi, "cost of one remote invocation");
    cmd->add_option("--sigma", sigma, "cost of one local invocation");
    cmd->add_option("--code-size", code_size, "agent code size (bytes)");
  }

  void apply(CostParams& p) const {
    if (tr) p.tr = *tr;
    if (ty) p.ty = *ty;
    if (t_obj) p.t_obj = *t_obj;
    if (t_proxy) p.t_proxy = *t_proxy;
    if (alpha) p.alpha = *alpha;
    if (beta) p.beta = *beta;
    if (psi) p.psi = *psi;
    if (sigma) p.sigma = *sigma;
    if (code_size) p.code_size = *code_size;
  }
};

ExperimentSpec load_spec(const std::string& config_path) {
  if (config_path.empty()) return ExperimentSpec{};
  return parse_config_file(config_path);
}

void print_kv(const std::string& key, const std::string& value, bool csv) {
  if (csv) {
    std::cout << key << ',' << value << '\n';
  } else {
    std::cout << key << " = " << value << '\n';
  }
}

int cmd_predict(const CostParams& p, std::uint32_t n, bool csv) {
  if (csv) std::cout << "metric,value\n";
  print_kv("n", std::to_string(n), csv);
  print_kv("dnr.comm_time.search_negligible",
           format_number(dnr_comm_time(p, n, ObjSearch::Negligible)), csv);
  print_kv("dnr.comm_time.search_once", format_number(dnr_comm_time(p, n, ObjSearch::Once)), csv);
  print_kv("dnr.comm_time.search_per_node",
           format_number(dnr_comm_time(p, n, ObjSearch::PerNode)), csv);
  print_kv("ma.comm_time.with_return", format_number(ma_comm_time(p, n, true)), csv);
  print_kv("ma.comm_time.without_return", format_number(ma_comm_time(p, n, false)), csv);
  print_kv("dnr.cost.with_proxy", format_number(dnr_invocation_cost(p, n, true)), csv);
  print_kv("dnr.cost.without_proxy", format_number(dnr_invocation_cost(p, n, false)), csv);
  print_kv("dnr.cost.distinct_sizes", format_number(dnr_invocation_cost_distinct_sizes(p, n)),
           csv);
  print_kv("ma.cost", format_number(ma_invocation_cost(p, n)), csv);
  print_kv("ma.cost.distinct_sizes", format_number(ma_invocation_cost_distinct_sizes(p, n)), csv);
  return kExitOk;
}

int cmd_crossover(const CostParams& p, bool csv) {
  const CrossoverResult time = comm_crossover(p);
  const CrossoverResult cost = cost_crossover(p);
  if (csv) {
    std::cout << "metric,kind,n_star,margin_at_threshold\n";
    std::cout << "time," << to_string(time.kind) << ',' << time.n_star << ','
              << format_number(time.margin_at_threshold) << '\n';
    std::cout << "cost," << to_string(cost.kind) << ',' << cost.n_star << ','
              << format_number(cost.margin_at_threshold) << '\n';
  } else {
    std::cout << time.describe("time") << '\n' << cost.describe("cost") << '\n';
  }
  return kExitOk;
}

void print_id_list(const char* label, const std::vector<NodeId>& ids) {
  std::cout << label << " =";
  for (const NodeId id : ids) std::cout << ' ' << id;
  std::cout << '\n';
}

int cmd_simulate(const ExperimentSpec& spec, const std::string& paradigm, std::uint32_t n,
                 bool dump_trace) {
  std::set<NodeId> faulty(spec.topology.faulty.begin(), spec.topology.faulty.end());
  UniformScenario s =
      make_uniform_scenario(n, spec.topology.latency, spec.topology.bandwidth, faulty);
  Engine engine(spec.seed);

  RunReport report;
  if (paradigm == "dnr") {
    RemotingOptions opt;
    opt.mode = spec.mode;
    opt.obj_search = spec.obj_search;
    opt.stop_on_found = spec.stop_on_found;
    opt.timeout_factor = spec.timeout_factor;
    opt.proxy_bytes = spec.proxy_bytes;
    report = run_remoting(engine, s.topology, spec.fixed, n, opt);
  } else {
    AgentOptions opt;
    opt.mode = spec.mode;
    opt.bag_growth = spec.bag_growth;
    opt.return_style = spec.return_style;
    opt.result_bytes = spec.result_bytes;
    report = run_agent(engine, s.topology, spec.fixed, s.agent_itinerary, opt);
  }

  std::cout << "paradigm = " << report.paradigm << '\n'
            << "n = " << report.n << '\n'
            << "comm_time = " << format_number(report.comm_time) << '\n'
            << "invocation_cost = " << format_number(report.invocation_cost) << '\n'
            << "messages = " << report.messages << '\n'
            << "bytes_on_wire = " << format_number(report.bytes_on_wire) << '\n'
            << "remote_invocations = " << report.remote_invocations << '\n'
            << "local_invocations = " << report.local_invocations << '\n'
            << "hops = " << report.hops << '\n'
            << "found = " << (report.found ? "true" : "false") << '\n';
  print_id_list("visited", report.visited);
  print_id_list("skipped", report.skipped);
  if (dump_trace) {
    std::cout << "--- trace ---\n" << engine.trace().to_text();
  }
  return kExitOk;
}

int cmd_sweep(const ExperimentSpec& spec, const std::string& out_dir) {
  const SweepResult result = run_sweep(spec);
  const std::string csv_path = write_sweep_outputs(result, spec, out_dir);
  std::cout << "wrote " << result.rows.size() << " rows to " << csv_path << '\n';
  return kExitOk;
}

int cmd_validate(const ExperimentSpec& spec, double tolerance) {
  const ValidationReport report = validate(spec, tolerance);
  std::cout << report.summary() << '\n';
  std::size_t shown = 0;
  for (const auto& f : report.failures()) {
    if (++shown > 20) {
      std::cout << "  ... more failures elided\n";
      break;
    }
    std::cout << "  " << f.paradigm << ' ' << f.metric << " at " << format_number(f.n)
              << ": simulated " << format_number(f.simulated) << " vs analytical "
              << format_number(f.analytical) << " (rel err " << format_number(f.rel_err) << ")\n";
  }
  return report.pass ? kExitOk : kExitValidationFail;
}

int cmd_regime(const ExperimentSpec& spec, bool csv) {
  std::vector<std::uint32_t> n_rows = spec.regime_n_rows;
  if (n_rows.empty()) {
    for (std::uint32_t i = 1; i <= 10; ++i) n_rows.push_back(i);
  }
  const RegimeTable table =
      regime_table(spec.fixed, n_rows, spec.regime_size_rows, spec.regime_size_n);
  std::cout << (csv ? table.to_csv() : table.to_text());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form model and discrete-event simulator comparing sequential remote "
               "invocation (DNR) with mobile-agent migration (MA)"};
  app.require_subcommand(1);
  // Global flags may appear after the subcommand name.
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed_flag;
  std::string out_dir = ".";
  std::string format = "table";
  double tolerance = 1e-9;
  app.add_option("--config", config_path, "experiment config file (key = value)");
  app.add_option("--seed", seed_flag, "override the experiment seed");
  app.add_option("--out", out_dir, "output directory for generated files");
  app.add_option("--format", format, "output format: table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--tolerance", tolerance, "max relative error for validate");

  ParamFlags params;
  std::optional<std::uint32_t> n;
  std::string paradigm = "dnr";
  bool dump_trace = false;

  CLI::App* predict = app.add_subcommand("predict", "evaluate the closed-form metrics at one n");
  params.add_to(predict);
  predict->add_option("-n,--n", n, "request count (servers interrogated / itinerary nodes)");

  CLI::App* simulate = app.add_subcommand("simulate", "run one paradigm once and print the report");
  params.add_to(simulate);
  simulate->add_option("-n,--n", n, "request count");
  simulate->add_option("--paradigm", paradigm, "dnr or ma")->check(CLI::IsMember({"dnr", "ma"}));
  simulate->add_flag("--trace", dump_trace, "dump the event trace after the report");

  CLI::App* sweep = app.add_subcommand("sweep", "run the configured sweep and write CSV + gnuplot");

  CLI::App* crossover = app.add_subcommand("crossover", "report the crossover for both metrics");
  params.add_to(crossover);

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "compare simulated runs against the closed forms");

  CLI::App* regime = app.add_subcommand("regime", "winner table over server count and data size");
  params.add_to(regime);

  try {
    app.parse(argc, argv);

    ExperimentSpec spec = load_spec(config_path);
    if (seed_flag) spec.seed = *seed_flag;
    params.apply(spec.fixed);
    const bool csv = format == "csv";
    // -n beats the config; the config's topology size is the fallback.
    const std::uint32_t run_n = n ? *n : (spec.topology.n_set ? spec.topology.n_servers : 1);

    if (predict->parsed()) return cmd_predict(spec.fixed, run_n, csv);
    if (crossover->parsed()) return cmd_crossover(spec.fixed, csv);
    if (regime->parsed()) return cmd_regime(spec, csv);
    if (simulate->parsed()) return cmd_simulate(spec, paradigm, run_n, dump_trace);
    if (sweep->parsed()) {
      if (config_path.empty()) throw ConfigError("sweep requires --config");
      return cmd_sweep(spec, out_dir);
    }
    if (validate_cmd->parsed()) {
      if (config_path.empty()) throw ConfigError("validate requires --config");
      return cmd_validate(spec, tolerance);
    }
    return kExitConfigError;  // unreachable with require_subcommand
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    // Bad parameter values are user-input problems, same class as config errors.
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}
