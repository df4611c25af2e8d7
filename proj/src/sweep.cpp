#include "masim/sweep.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "masim/scenario.hpp"

namespace masim {

const char* const kCsvHeader =
    "paradigm,sweep_var,sweep_value,n,comm_time,invocation_cost,messages,bytes_on_wire,"
    "remote_invocations,local_invocations,hops,found";

namespace {

struct PointSetup {
  CostParams params;
  std::uint32_t n = 0;
};

PointSetup apply_sweep_value(const ExperimentSpec& spec, double value) {
  PointSetup point;
  point.params = spec.fixed;
  point.n = spec.topology.n_servers;
  switch (spec.swept) {
    case SweepVar::NServers: {
      if (value < 1 || std::floor(value) != value) {
        throw ConfigError("sweep over n_servers needs integer values >= 1, got " +
                          format_number(value));
      }
      point.n = static_cast<std::uint32_t>(value);
      break;
    }
    case SweepVar::Alpha: point.params.alpha = value; break;
    case SweepVar::CodeSize: point.params.code_size = value; break;
    case SweepVar::Tr: point.params.tr = value; break;
    case SweepVar::Ty: point.params.ty = value; break;
  }
  return point;
}

std::set<NodeId> faulty_servers_for_point(const ExperimentSpec& spec, std::uint32_t n,
                                          std::size_t point_index) {
  std::set<NodeId> faulty;
  for (const NodeId id : spec.topology.faulty) {
    if (id <= static_cast<NodeId>(n)) faulty.insert(id);
  }
  if (spec.topology.failure_prob > 0) {
    // One sampling stream per point, derived from the experiment seed.
    Engine sampler(mix_seed(spec.seed, 0xFA013ULL + point_index));
    for (NodeId id = 1; id <= static_cast<NodeId>(n); ++id) {
      if (sampler.uniform01() < spec.topology.failure_prob) faulty.insert(id);
    }
  }
  return faulty;
}

RunReport run_point(const ExperimentSpec& spec, const PointSetup& point, bool agent,
                    std::size_t point_index) {
  const auto faulty = faulty_servers_for_point(spec, point.n, point_index);
  UniformScenario scenario = make_uniform_scenario(point.n, spec.topology.latency,
                                                   spec.topology.bandwidth, faulty);
  Engine engine(mix_seed(spec.seed, (agent ? 0x4D41ULL : 0x444EULL) ^ (point_index << 8)));
  if (agent) {
    AgentOptions options;
    options.mode = spec.mode;
    options.bag_growth = spec.bag_growth;
    options.return_style = spec.return_style;
    options.result_bytes = spec.result_bytes;
    return run_agent(engine, scenario.topology, point.params, scenario.agent_itinerary, options);
  }
  RemotingOptions options;
  options.mode = spec.mode;
  options.obj_search = spec.obj_search;
  options.stop_on_found = spec.stop_on_found;
  options.timeout_factor = spec.timeout_factor;
  options.proxy_bytes = spec.proxy_bytes;
  return run_remoting(engine, scenario.topology, point.params, point.n, options);
}

}  // namespace

SweepResult run_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const std::vector<double> values = spec.range.values();

  SweepResult result;
  const std::string var_name = to_string(spec.swept);
  // Report order is fixed by (paradigm, sweep value) regardless of how the
  // points are executed.
  for (const bool agent : {false, true}) {
    if (agent && !spec.run_ma) continue;
    if (!agent && !spec.run_dnr) continue;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const PointSetup point = apply_sweep_value(spec, values[i]);
      SweepRow row;
      row.paradigm = agent ? "MA" : "DNR";
      row.sweep_var = var_name;
      row.sweep_value = values[i];
      row.report = run_point(spec, point, agent, i);
      result.rows.push_back(std::move(row));
    }
  }
  result.csv = rows_to_csv(result.rows);
  return result;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& row : rows) {
    const RunReport& r = row.report;
    out += row.paradigm;
    out += ',';
    out += row.sweep_var;
    out += ',';
    out += format_number(row.sweep_value);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += format_number(r.comm_time);
    out += ',';
    out += format_number(r.invocation_cost);
    out += ',';
    out += std::to_string(r.messages);
    out += ',';
    out += format_number(r.bytes_on_wire);
    out += ',';
    out += std::to_string(r.remote_invocations);
    out += ',';
    out += std::to_string(r.local_invocations);
    out += ',';
    out += std::to_string(r.hops);
    out += ',';
    out += r.found ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_reports_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);

  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 12) throw std::runtime_error("bad CSV row: " + line);
    SweepRow row;
    row.paradigm = cells[0];
    row.sweep_var = cells[1];
    row.sweep_value = std::stod(cells[2]);
    row.report.paradigm = cells[0];
    row.report.n = static_cast<std::uint32_t>(std::stoul(cells[3]));
    row.report.comm_time = std::stod(cells[4]);
    row.report.invocation_cost = std::stod(cells[5]);
    row.report.messages = std::stoull(cells[6]);
    row.report.bytes_on_wire = std::stod(cells[7]);
    row.report.remote_invocations = std::stoull(cells[8]);
    row.report.local_invocations = std::stoull(cells[9]);
    row.report.hops = std::stoull(cells[10]);
    if (cells[11] == "true") {
      row.report.found = true;
    } else if (cells[11] == "false") {
      row.report.found = false;
    } else {
      throw std::runtime_error("bad found flag: " + cells[11]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string gnuplot_script(const ExperimentSpec& spec, const std::string& csv_filename) {
  std::ostringstream gp;
  gp << "# gnuplot script generated by masim sweep\n"
     << "set datafile separator \",\"\n"
     << "set key outside\n"
     << "set xlabel \"" << to_string(spec.swept) << "\"\n"
     << "set term pngcairo size 900,600\n"
     << "set output \"" << spec.name << "_time.png\"\n"
     << "set ylabel \"comm_time\"\n"
     << "plot \"" << csv_filename << "\" every ::1 "
     << "using 3:(strcol(1) eq \"DNR\" ? column(5) : 1/0) with linespoints title \"DNR\", \\\n"
     << "     \"" << csv_filename << "\" every ::1 "
     << "using 3:(strcol(1) eq \"MA\" ? column(5) : 1/0) with linespoints title \"MA\"\n"
     << "set output \"" << spec.name << "_cost.png\"\n"
     << "set ylabel \"invocation_cost\"\n"
     << "plot \"" << csv_filename << "\" every ::1 "
     << "using 3:(strcol(1) eq \"DNR\" ? column(6) : 1/0) with linespoints title \"DNR\", \\\n"
     << "     \"" << csv_filename << "\" every ::1 "
     << "using 3:(strcol(1) eq \"MA\" ? column(6) : 1/0) with linespoints title \"MA\"\n";
  return gp.str();
}

void write_whole_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string write_sweep_outputs(const SweepResult& result, const ExperimentSpec& spec,
                                const std::string& out_dir) {
  namespace fs = std::filesystem;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  const std::string csv_filename = spec.csv_filename();
  const fs::path csv_path = dir / csv_filename;
  const fs::path gp_path = dir / (spec.name + ".gp");
  try {
    write_whole_file(csv_path, result.csv);
    write_whole_file(gp_path, gnuplot_script(spec, csv_filename));
  } catch (...) {
    // No partial outputs: drop whatever did land before the failure.
    std::error_code ec;
    fs::remove(csv_path, ec);
    fs::remove(gp_path, ec);
    throw;
  }
  return csv_path.string();
}

}  // namespace masim
