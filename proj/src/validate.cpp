#include "masim/validate.hpp"

#include <cmath>
#include <sstream>

#include "masim/sweep.hpp"

namespace masim {

std::vector<ValidationPoint> ValidationReport::failures() const {
  std::vector<ValidationPoint> out;
  for (const auto& p : points) {
    if (!(p.rel_err <= tolerance)) out.push_back(p);
  }
  return out;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << ": " << points.size() << " points, max relative error "
      << format_number(max_rel_err) << " (tolerance " << format_number(tolerance) << ")";
  return out.str();
}

ValidationReport grade_points(std::vector<ValidationPoint> points, double tolerance) {
  ValidationReport report;
  report.tolerance = tolerance;
  for (auto& p : points) {
    p.abs_err = std::abs(p.simulated - p.analytical);
    if (p.abs_err == 0) {
      p.rel_err = 0;
    } else if (p.analytical != 0) {
      p.rel_err = p.abs_err / std::abs(p.analytical);
    } else {
      p.rel_err = std::numeric_limits<double>::infinity();
    }
    report.max_rel_err = std::max(report.max_rel_err, p.rel_err);
  }
  report.points = std::move(points);
  report.pass = report.max_rel_err <= tolerance;
  return report;
}

ValidationReport validate(const ExperimentSpec& spec, double tolerance) {
  spec.validate();
  if (spec.mode != TimeMode::Paper) {
    throw ConfigError(
        "validate: the closed-form model prices hops at fixed per-hop times; physical mode has "
        "no analytical counterpart, use mode = paper");
  }
  if (!spec.topology.faulty.empty() || spec.topology.failure_prob > 0) {
    throw ConfigError("validate: the closed forms assume a fault-free run; remove faulty nodes");
  }
  if (spec.stop_on_found) {
    throw ConfigError("validate: the closed forms assume every server is visited; disable "
                      "run.stop_on_found");
  }

  SweepResult sweep = run_sweep(spec);
  std::vector<ValidationPoint> points;
  for (const auto& row : sweep.rows) {
    // Rebuild the per-point parameters exactly as the sweep applied them.
    CostParams p = spec.fixed;
    std::uint32_t n = spec.topology.n_servers;
    switch (spec.swept) {
      case SweepVar::NServers: n = static_cast<std::uint32_t>(row.sweep_value); break;
      case SweepVar::Alpha: p.alpha = row.sweep_value; break;
      case SweepVar::CodeSize: p.code_size = row.sweep_value; break;
      case SweepVar::Tr: p.tr = row.sweep_value; break;
      case SweepVar::Ty: p.ty = row.sweep_value; break;
    }

    ValidationPoint time_point;
    time_point.paradigm = row.paradigm;
    time_point.metric = "time";
    time_point.n = row.sweep_value;
    time_point.simulated = row.report.comm_time;

    ValidationPoint cost_point = time_point;
    cost_point.metric = "cost";
    cost_point.simulated = row.report.invocation_cost;

    if (row.paradigm == "DNR") {
      time_point.analytical = dnr_comm_time(p, n, spec.obj_search);
      cost_point.analytical = dnr_invocation_cost(p, n, /*with_proxy=*/true);
    } else {
      switch (spec.return_style) {
        case ReturnStyle::Migration:
          time_point.analytical = ma_comm_time(p, n, /*include_return=*/true);
          cost_point.analytical = ma_invocation_cost(p, n);
          break;
        case ReturnStyle::Message:
          // The report travels without the agent code: one tr, not tr + ty.
          time_point.analytical = ma_comm_time(p, n, /*include_return=*/false) + p.tr;
          cost_point.analytical = ma_invocation_cost(p, n);
          break;
        case ReturnStyle::None:
          // No report leg, so the response share of the wire cost never accrues.
          time_point.analytical = ma_comm_time(p, n, /*include_return=*/false);
          cost_point.analytical = ma_invocation_cost(p, n) - p.alpha;
          break;
      }
    }
    points.push_back(time_point);
    points.push_back(cost_point);
  }
  return grade_points(std::move(points), tolerance);
}

}  // namespace masim
