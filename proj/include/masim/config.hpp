#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "masim/agent.hpp"
#include "masim/cost_model.hpp"
#include "masim/remoting.hpp"
#include "masim/topology.hpp"

namespace masim {

// Config file problems: unknown keys, bad values, conflicting fields. The CLI
// maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepVar { NServers, Alpha, CodeSize, Tr, Ty };

const char* to_string(SweepVar var);

struct SweepRange {
  double start = 1;
  double stop = 1;
  double step = 1;

  std::vector<double> values() const;  // inclusive of stop, step > 0
};

struct TopologySpec {
  std::uint32_t n_servers = 0;  // mandatory unless the sweep varies it
  bool n_set = false;
  Duration latency = 0;
  double bandwidth = kInfiniteBandwidth;
  std::vector<NodeId> faulty;  // explicit faulty server ids (1-based server ids)
  double failure_prob = 0;     // sampled per run from the experiment seed
};

// One experiment: which paradigms run, what is swept, every fixed parameter,
// the topology and all mode flags. Parsed from a flat key = value file; see
// docs/config-format.md for the schema.
struct ExperimentSpec {
  std::string name = "experiment";
  bool run_dnr = true;
  bool run_ma = true;
  SweepVar swept = SweepVar::NServers;
  SweepRange range;
  CostParams fixed;
  TopologySpec topology;
  TimeMode mode = TimeMode::Paper;
  ObjSearch obj_search = ObjSearch::Negligible;
  BagGrowth bag_growth = BagGrowth::Ignored;
  ReturnStyle return_style = ReturnStyle::Migration;
  bool stop_on_found = false;
  double timeout_factor = 2.0;
  Bytes proxy_bytes = 0;
  double result_bytes = -1;
  std::uint64_t seed = 0;
  std::string csv_name;  // defaults to <name>.csv

  // Regime-table rows (regime subcommand only).
  std::vector<std::uint32_t> regime_n_rows;
  std::vector<double> regime_size_rows;
  std::uint32_t regime_size_n = 5;

  std::string csv_filename() const { return csv_name.empty() ? name + ".csv" : csv_name; }
  void validate() const;  // throws ConfigError
};

ExperimentSpec parse_config_text(const std::string& text, const std::string& source_name);
ExperimentSpec parse_config_file(const std::string& path);

}  // namespace masim
