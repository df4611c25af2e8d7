#include "masim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace masim {

const char* to_string(SweepVar var) {
  switch (var) {
    case SweepVar::NServers: return "n_servers";
    case SweepVar::Alpha: return "alpha";
    case SweepVar::CodeSize: return "code_size";
    case SweepVar::Tr: return "tr";
    case SweepVar::Ty: return "ty";
  }
  return "?";
}

std::vector<double> SweepRange::values() const {
  if (!(step > 0)) throw ConfigError("sweep.step must be > 0");
  if (stop < start) throw ConfigError("sweep.stop must be >= sweep.start");
  std::vector<double> out;
  // Half-step slack keeps the stop point included under float stepping.
  for (double v = start; v <= stop + step * 0.5; v += step) out.push_back(v);
  if (out.empty()) throw ConfigError("sweep range is empty");
  return out;
}

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
  bool used = false;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class ConfigReader {
 public:
  ConfigReader(const std::string& text, std::string source) : source_(std::move(source)) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail(line_no, "expected 'key = value', got '" + line + "'");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail(line_no, "missing key before '='");
      if (entries_.count(key)) fail(line_no, "duplicate key '" + key + "'");
      entries_[key] = RawEntry{value, line_no, false};
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string str(const std::string& key, const std::string& fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.used = true;
    return it->second.value;
  }

  double number(const std::string& key, double fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.used = true;
    const std::string& raw = it->second.value;
    if (lower(raw) == "inf") return kInfiniteBandwidth;
    try {
      std::size_t pos = 0;
      const double v = std::stod(raw, &pos);
      if (pos != raw.size()) throw std::invalid_argument(raw);
      return v;
    } catch (const std::exception&) {
      fail(it->second.line, key + ": expected a number, got '" + raw + "'");
    }
    return fallback;
  }

  std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const double v = number(key, 0);
    if (v < 0 || std::floor(v) != v || v > 1.8e19) {
      fail(it->second.line, key + ": expected a non-negative integer");
    }
    return static_cast<std::uint64_t>(v);
  }

  bool boolean(const std::string& key, bool fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.used = true;
    const std::string v = lower(it->second.value);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    fail(it->second.line, key + ": expected true or false, got '" + it->second.value + "'");
    return fallback;
  }

  // Comma list of numbers; "a..b" expands to the inclusive integer range.
  std::vector<double> number_list(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return {};
    it->second.used = true;
    std::vector<double> out;
    std::istringstream in(it->second.value);
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      const auto dots = item.find("..");
      try {
        if (dots != std::string::npos) {
          const double a = std::stod(item.substr(0, dots));
          const double b = std::stod(item.substr(dots + 2));
          for (double v = a; v <= b; v += 1) out.push_back(v);
        } else {
          out.push_back(std::stod(item));
        }
      } catch (const std::exception&) {
        fail(it->second.line, key + ": bad list item '" + item + "'");
      }
    }
    return out;
  }

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw ConfigError(source_ + ":" + std::to_string(line) + ": " + message);
  }

  void reject_unknown() const {
    for (const auto& [key, entry] : entries_) {
      if (!entry.used) {
        throw ConfigError(source_ + ":" + std::to_string(entry.line) + ": unknown key '" + key +
                          "'");
      }
    }
  }

  int line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

 private:
  std::string source_;
  std::map<std::string, RawEntry> entries_;
};

SweepVar parse_sweep_var(ConfigReader& cfg) {
  const std::string raw = lower(cfg.str("sweep.var", "n_servers"));
  if (raw == "n_servers" || raw == "n") return SweepVar::NServers;
  if (raw == "alpha" || raw == "data_size") return SweepVar::Alpha;
  if (raw == "code_size") return SweepVar::CodeSize;
  if (raw == "tr") return SweepVar::Tr;
  if (raw == "ty") return SweepVar::Ty;
  cfg.fail(cfg.line_of("sweep.var"), "sweep.var: expected one of n_servers, alpha (data_size), "
                                     "code_size, tr, ty; got '" + raw + "'");
}

}  // namespace

void ExperimentSpec::validate() const {
  if (!run_dnr && !run_ma) throw ConfigError("paradigms: at least one of DNR, MA required");
  if (!(timeout_factor >= 0)) throw ConfigError("run.timeout_factor must be >= 0");
  if (proxy_bytes < 0) throw ConfigError("run.proxy_bytes must be >= 0");
  if (!(topology.failure_prob >= 0 && topology.failure_prob <= 1)) {
    throw ConfigError("topology.failure_prob must be in [0, 1]");
  }
  if (swept != SweepVar::NServers && !topology.n_set) {
    throw ConfigError("topology.n is required unless sweep.var = n_servers");
  }
  range.values();  // validates the range shape
  try {
    fixed.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  for (const NodeId id : topology.faulty) {
    if (id <= 0) throw ConfigError("topology.faulty: server ids start at 1");
  }
}

ExperimentSpec parse_config_text(const std::string& text, const std::string& source_name) {
  ConfigReader cfg(text, source_name);
  ExperimentSpec spec;

  spec.name = cfg.str("name", spec.name);

  const std::string paradigms = lower(cfg.str("paradigms", "both"));
  if (paradigms == "both" || paradigms == "dnr,ma" || paradigms == "ma,dnr") {
    spec.run_dnr = spec.run_ma = true;
  } else if (paradigms == "dnr") {
    spec.run_dnr = true;
    spec.run_ma = false;
  } else if (paradigms == "ma") {
    spec.run_dnr = false;
    spec.run_ma = true;
  } else {
    cfg.fail(cfg.line_of("paradigms"), "paradigms: expected dnr, ma or both");
  }

  const std::string mode = lower(cfg.str("mode", "paper"));
  if (mode == "paper") {
    spec.mode = TimeMode::Paper;
  } else if (mode == "physical") {
    spec.mode = TimeMode::Physical;
  } else {
    cfg.fail(cfg.line_of("mode"), "mode: expected paper or physical");
  }

  const bool sweep_requested = cfg.has("sweep.var") || cfg.has("sweep.start") ||
                               cfg.has("sweep.stop") || cfg.has("sweep.step");
  spec.swept = parse_sweep_var(cfg);
  spec.range.start = cfg.number("sweep.start", spec.range.start);
  spec.range.stop = cfg.number("sweep.stop", spec.range.stop);
  spec.range.step = cfg.number("sweep.step", spec.range.step);

  // The swept variable must come from the sweep range alone. Configs without
  // sweep keys (single runs, regime tables) may pin anything.
  const auto forbid_fixed = [&](const char* key, SweepVar var) {
    if (sweep_requested && spec.swept == var && cfg.has(key)) {
      cfg.fail(cfg.line_of(key),
               std::string(key) + " conflicts with sweep.var = " + to_string(var));
    }
  };
  forbid_fixed("params.alpha", SweepVar::Alpha);
  forbid_fixed("params.code_size", SweepVar::CodeSize);
  forbid_fixed("params.tr", SweepVar::Tr);
  forbid_fixed("params.ty", SweepVar::Ty);
  forbid_fixed("topology.n", SweepVar::NServers);

  spec.fixed.tr = cfg.number("params.tr", spec.fixed.tr);
  spec.fixed.ty = cfg.number("params.ty", spec.fixed.ty);
  spec.fixed.t_obj = cfg.number("params.t_obj", spec.fixed.t_obj);
  spec.fixed.t_proxy = cfg.number("params.t_proxy", spec.fixed.t_proxy);
  spec.fixed.alpha = cfg.number("params.alpha", spec.fixed.alpha);
  spec.fixed.beta = cfg.number("params.beta", spec.fixed.beta);
  spec.fixed.psi = cfg.number("params.psi", spec.fixed.psi);
  spec.fixed.sigma = cfg.number("params.sigma", spec.fixed.sigma);
  spec.fixed.code_size = cfg.number("params.code_size", spec.fixed.code_size);

  if (cfg.has("topology.n")) {
    spec.topology.n_servers = static_cast<std::uint32_t>(cfg.unsigned_int("topology.n", 0));
    spec.topology.n_set = true;
    if (spec.topology.n_servers == 0) {
      cfg.fail(cfg.line_of("topology.n"), "topology.n must be >= 1");
    }
  }
  spec.topology.latency = cfg.number("topology.latency", spec.topology.latency);
  spec.topology.bandwidth = cfg.number("topology.bandwidth", spec.topology.bandwidth);
  spec.topology.failure_prob = cfg.number("topology.failure_prob", spec.topology.failure_prob);
  for (const double v : cfg.number_list("topology.faulty")) {
    if (v < 1 || std::floor(v) != v) {
      cfg.fail(cfg.line_of("topology.faulty"), "topology.faulty: server ids are integers >= 1");
    }
    spec.topology.faulty.push_back(static_cast<NodeId>(v));
  }

  const std::string search = lower(cfg.str("run.obj_search", "negligible"));
  if (search == "once") {
    spec.obj_search = ObjSearch::Once;
  } else if (search == "per_node") {
    spec.obj_search = ObjSearch::PerNode;
  } else if (search == "negligible") {
    spec.obj_search = ObjSearch::Negligible;
  } else {
    cfg.fail(cfg.line_of("run.obj_search"), "run.obj_search: expected once, per_node or negligible");
  }

  const std::string bag = lower(cfg.str("run.bag_growth", "ignored"));
  if (bag == "ignored") {
    spec.bag_growth = BagGrowth::Ignored;
  } else if (bag == "carried") {
    spec.bag_growth = BagGrowth::Carried;
  } else {
    cfg.fail(cfg.line_of("run.bag_growth"), "run.bag_growth: expected ignored or carried");
  }

  const std::string ret = lower(cfg.str("run.return_style", "migration"));
  if (ret == "migration") {
    spec.return_style = ReturnStyle::Migration;
  } else if (ret == "message") {
    spec.return_style = ReturnStyle::Message;
  } else if (ret == "none") {
    spec.return_style = ReturnStyle::None;
  } else {
    cfg.fail(cfg.line_of("run.return_style"), "run.return_style: expected migration, message or none");
  }

  spec.stop_on_found = cfg.boolean("run.stop_on_found", spec.stop_on_found);
  spec.timeout_factor = cfg.number("run.timeout_factor", spec.timeout_factor);
  spec.proxy_bytes = cfg.number("run.proxy_bytes", spec.proxy_bytes);
  spec.result_bytes = cfg.number("run.result_bytes", spec.result_bytes);
  spec.seed = cfg.unsigned_int("seed", spec.seed);
  spec.csv_name = cfg.str("output.csv", spec.csv_name);

  for (const double v : cfg.number_list("regime.n_rows")) {
    if (v < 1 || std::floor(v) != v) {
      cfg.fail(cfg.line_of("regime.n_rows"), "regime.n_rows: integers >= 1");
    }
    spec.regime_n_rows.push_back(static_cast<std::uint32_t>(v));
  }
  spec.regime_size_rows = cfg.number_list("regime.size_rows");
  spec.regime_size_n = static_cast<std::uint32_t>(cfg.unsigned_int("regime.size_n", spec.regime_size_n));
  if (spec.regime_size_n == 0) cfg.fail(cfg.line_of("regime.size_n"), "regime.size_n must be >= 1");

  cfg.reject_unknown();
  spec.validate();
  return spec;
}

ExperimentSpec parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace masim
