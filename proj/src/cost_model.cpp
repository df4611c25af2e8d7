#include "masim/cost_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace masim {

namespace {

void require_positive_n(std::uint32_t n) {
  if (n == 0) {
    throw std::domain_error("n must be >= 1 (the request count includes the launching node)");
  }
}

double checked(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::overflow_error(std::string(what) + " overflowed double range");
  }
  return value;
}

// Closed forms on a real-valued n, shared with the crossover solver where the
// decisive n can exceed the uint32 operation domain.
double dnr_cost_at(const CostParams& p, double n, bool with_proxy) {
  return 2.0 * n * p.alpha + n * p.psi + (with_proxy ? p.t_proxy : 0.0);
}

double ma_cost_at(const CostParams& p, double n) {
  return (n + 1.0) * p.alpha + p.code_size + n * p.sigma;
}

}  // namespace

void CostParams::validate() const {
  const struct {
    const char* name;
    double value;
  } fields[] = {
      {"tr", tr},       {"ty", ty},     {"t_obj", t_obj},   {"t_proxy", t_proxy},
      {"alpha", alpha}, {"beta", beta}, {"psi", psi},       {"sigma", sigma},
      {"code_size", code_size},
  };
  for (const auto& f : fields) {
    if (std::isnan(f.value) || f.value < 0.0) {
      throw std::domain_error(std::string("params.") + f.name + " must be >= 0");
    }
    if (!std::isfinite(f.value)) {
      throw std::domain_error(std::string("params.") + f.name + " must be finite");
    }
  }
}

Duration dnr_comm_time(const CostParams& p, std::uint32_t n, ObjSearch search) {
  p.validate();
  require_positive_n(n);
  const double round_trips = 2.0 * static_cast<double>(n) * p.tr;
  double search_term = 0.0;
  switch (search) {
    case ObjSearch::Once: search_term = p.t_obj; break;
    case ObjSearch::PerNode: search_term = static_cast<double>(n) * p.t_obj; break;
    case ObjSearch::Negligible: break;
  }
  return checked(round_trips + search_term, "dnr_comm_time");
}

Duration ma_comm_time(const CostParams& p, std::uint32_t n, bool include_return) {
  p.validate();
  require_positive_n(n);
  const double hops = include_return ? static_cast<double>(n) : static_cast<double>(n) - 1.0;
  return checked(hops * (p.tr + p.ty), "ma_comm_time");
}

Cost dnr_invocation_cost(const CostParams& p, std::uint32_t n, bool with_proxy) {
  p.validate();
  require_positive_n(n);
  return checked(dnr_cost_at(p, static_cast<double>(n), with_proxy), "dnr_invocation_cost");
}

Cost ma_invocation_cost(const CostParams& p, std::uint32_t n) {
  p.validate();
  require_positive_n(n);
  return checked(ma_cost_at(p, static_cast<double>(n)), "ma_invocation_cost");
}

Cost dnr_invocation_cost_distinct_sizes(const CostParams& p, std::uint32_t n) {
  p.validate();
  require_positive_n(n);
  const double dn = n;
  return checked(dn * p.alpha + dn * p.beta + dn * p.psi, "dnr_invocation_cost_distinct_sizes");
}

Cost ma_invocation_cost_distinct_sizes(const CostParams& p, std::uint32_t n) {
  p.validate();
  require_positive_n(n);
  const double dn = n;
  return checked(dn * p.alpha + dn * p.sigma + p.code_size + p.beta,
                 "ma_invocation_cost_distinct_sizes");
}

std::string CrossoverResult::describe(const std::string& metric) const {
  switch (kind) {
    case CrossoverKind::AlwaysMA:
      return metric + ": MA no worse for every n >= 1 (margin at n=1: " +
             format_number(margin_at_threshold) + ")";
    case CrossoverKind::AlwaysDNR:
      return metric + ": DNR strictly better for every n >= 1 (deficit at n=1: " +
             format_number(margin_at_threshold) + ")";
    case CrossoverKind::Tie:
      return metric + ": both schemes identical for every n";
    case CrossoverKind::ThresholdAt:
      return metric + ": MA no worse from n* = " + std::to_string(n_star) +
             " (margin at n*: " + format_number(margin_at_threshold) + ")";
  }
  return metric;
}

CrossoverResult comm_crossover(const CostParams& p) {
  p.validate();
  // Both time metrics scale linearly with n (2*tr vs tr + ty per step), so
  // whichever scheme wins at n = 1 wins at every n. ThresholdAt cannot occur.
  CrossoverResult result;
  result.margin_at_threshold = p.tr - p.ty;  // 2*tr - (tr + ty)
  if (p.ty < p.tr) {
    result.kind = CrossoverKind::AlwaysMA;
  } else if (p.ty > p.tr) {
    result.kind = CrossoverKind::AlwaysDNR;
  } else {
    result.kind = CrossoverKind::Tie;
    result.margin_at_threshold = 0;
  }
  return result;
}

CrossoverResult cost_crossover(const CostParams& p) {
  p.validate();
  // MA(n) <= DNR(n)  <=>  code_size + alpha - t_proxy <= n * (alpha + psi - sigma).
  const double gap_per_step = p.alpha + p.psi - p.sigma;
  const double fixed_offset = p.code_size + p.alpha - p.t_proxy;

  const auto ma_no_worse = [&](double n) {
    return ma_cost_at(p, n) <= dnr_cost_at(p, n, true);
  };

  CrossoverResult result;
  if (gap_per_step <= 0.0) {
    // The gap never moves in MA's favour: decided entirely at n = 1.
    if (ma_no_worse(1.0)) {
      result.kind = CrossoverKind::AlwaysMA;
      result.n_star = 1;
    } else {
      result.kind = CrossoverKind::AlwaysDNR;
    }
    result.margin_at_threshold = dnr_cost_at(p, 1.0, true) - ma_cost_at(p, 1.0);
    if (result.margin_at_threshold == 0.0 && gap_per_step == 0.0) {
      result.kind = CrossoverKind::Tie;
      result.n_star = 0;
    }
    return result;
  }

  double candidate = std::ceil(fixed_offset / gap_per_step);
  if (!(candidate >= 1.0)) candidate = 1.0;
  if (!(candidate < 9.0e15)) {
    // Beyond contiguous integers in a double; the exact threshold is not
    // representable, so refuse rather than return a wrong n*.
    throw std::overflow_error("cost crossover point exceeds the exact integer range");
  }
  // Pin the float estimate to the exact integer satisfying the inequality.
  while (candidate > 1.0 && ma_no_worse(candidate - 1.0)) candidate -= 1.0;
  while (!ma_no_worse(candidate)) candidate += 1.0;

  result.n_star = static_cast<std::uint64_t>(candidate);
  result.margin_at_threshold = dnr_cost_at(p, candidate, true) - ma_cost_at(p, candidate);
  result.kind = result.n_star == 1 ? CrossoverKind::AlwaysMA : CrossoverKind::ThresholdAt;
  return result;
}

namespace {

Winner pick_winner(double dnr_value, double ma_value) {
  if (ma_value < dnr_value) return Winner::MA;
  if (dnr_value < ma_value) return Winner::DNR;
  return Winner::Tie;
}

}  // namespace

RegimeResult classify_regime(const CostParams& p, std::uint32_t n) {
  RegimeResult r;
  r.time_winner = pick_winner(dnr_comm_time(p, n, ObjSearch::Negligible),
                              ma_comm_time(p, n, /*include_return=*/true));
  r.cost_winner = pick_winner(dnr_invocation_cost(p, n, /*with_proxy=*/true),
                              ma_invocation_cost(p, n));

  const bool ma_win = r.time_winner == Winner::MA || r.cost_winner == Winner::MA;
  const bool dnr_win = r.time_winner == Winner::DNR || r.cost_winner == Winner::DNR;
  if (ma_win && !dnr_win) {
    r.overall = Overall::MA_Best;
  } else if (dnr_win && !ma_win) {
    r.overall = Overall::DNR_Best;
  } else if (!ma_win && !dnr_win) {
    r.overall = Overall::Tie;
  } else {
    r.overall = Overall::Mixed;
  }
  return r;
}

const char* to_string(CrossoverKind kind) {
  switch (kind) {
    case CrossoverKind::AlwaysMA: return "AlwaysMA";
    case CrossoverKind::AlwaysDNR: return "AlwaysDNR";
    case CrossoverKind::Tie: return "Tie";
    case CrossoverKind::ThresholdAt: return "ThresholdAt";
  }
  return "?";
}

const char* to_string(Winner winner) {
  switch (winner) {
    case Winner::MA: return "MA";
    case Winner::DNR: return "DNR";
    case Winner::Tie: return "Tie";
  }
  return "?";
}

const char* to_string(Overall overall) {
  switch (overall) {
    case Overall::MA_Best: return "MA_Best";
    case Overall::DNR_Best: return "DNR_Best";
    case Overall::Mixed: return "Mixed";
    case Overall::Tie: return "Tie";
  }
  return "?";
}

}  // namespace masim
