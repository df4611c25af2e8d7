#pragma once

#include <cstdint>
#include <string>

#include "masim/types.hpp"

namespace masim {

// Parameters of the closed-form interaction model. One instance holds every
// knob used by both the analytical operations and the simulator, so a run and
// its prediction always read the same values. Field names match the config
// schema (params.*, see docs/config-format.md).
struct CostParams {
  Duration tr = 0;      // one-way transit time of a request or a response
  Duration ty = 0;      // time to move the agent code across one link
  Duration t_obj = 0;   // time to locate the target object in an address space
  Cost t_proxy = 0;     // one-time proxy download cost, charged at first contact
  Bytes alpha = 0;      // request size on the wire; responses use the same size
  Bytes beta = 0;       // distinct response size, used only by *_distinct_sizes
  Cost psi = 0;         // cost of one invocation that crosses the network
  Cost sigma = 0;       // cost of one invocation executed locally
  Bytes code_size = 0;  // agent code size, carried on every migration

  // Throws std::domain_error on negative or non-finite fields.
  void validate() const;

  // The regime the linear model assumes; checkable, not enforced, since
  // degenerate (zero) parameter sets are legitimate inputs.
  bool remote_costlier_than_local() const { return psi > sigma; }
  bool agent_hop_faster() const { return ty < tr; }
};

// Where the object-search delay is charged in the client/server scheme.
enum class ObjSearch { Once, PerNode, Negligible };

// Communication time of the sequential remote-invocation scheme: n round
// trips of 2*tr plus the search term selected by ObjSearch.
Duration dnr_comm_time(const CostParams& p, std::uint32_t n, ObjSearch search);

// Communication time of the migrating agent: one (tr + ty) hop per node after
// the first, plus one more hop for the final report when include_return.
Duration ma_comm_time(const CostParams& p, std::uint32_t n, bool include_return);

// Invocation/data cost of the client/server scheme: 2*n*alpha + n*psi, plus
// the one-time proxy download when with_proxy.
Cost dnr_invocation_cost(const CostParams& p, std::uint32_t n, bool with_proxy);

// Invocation/data cost of the agent scheme: (n+1)*alpha + code_size + n*sigma.
// A single network invocation carries all n requests; every request then
// executes locally.
Cost ma_invocation_cost(const CostParams& p, std::uint32_t n);

// Variants that keep the response size distinct (beta instead of alpha).
// The default operations above use the unified request/response size.
Cost dnr_invocation_cost_distinct_sizes(const CostParams& p, std::uint32_t n);
Cost ma_invocation_cost_distinct_sizes(const CostParams& p, std::uint32_t n);

enum class CrossoverKind { AlwaysMA, AlwaysDNR, Tie, ThresholdAt };

// Outcome of comparing one metric across the two schemes over all n >= 1.
// margin_at_threshold is the DNR metric minus the MA metric at the decisive
// point: n_star for ThresholdAt, n = 1 otherwise (>= 0 unless AlwaysDNR).
struct CrossoverResult {
  CrossoverKind kind = CrossoverKind::Tie;
  std::uint64_t n_star = 0;  // first n where MA is no worse; 1 for AlwaysMA, 0 otherwise
  Cost margin_at_threshold = 0;

  std::string describe(const std::string& metric) const;
};

// Time metric. Both schemes are linear homogeneous in n, so dominance never
// depends on n: the result is AlwaysMA (ty < tr), AlwaysDNR (ty > tr) or Tie,
// never ThresholdAt.
CrossoverResult comm_crossover(const CostParams& p);

// Cost metric with proxy download included. Returns the smallest n >= 1 where
// the agent is no worse, found in closed form from the per-step gap
// d = alpha + psi - sigma and fixed offset C + alpha - t_proxy, then pinned to
// the exact integer satisfying the defining inequality. AlwaysDNR when the
// agent never catches up; AlwaysMA when it wins from n = 1.
CrossoverResult cost_crossover(const CostParams& p);

enum class Winner { MA, DNR, Tie };
enum class Overall { MA_Best, DNR_Best, Mixed, Tie };

struct RegimeResult {
  Winner time_winner = Winner::Tie;
  Winner cost_winner = Winner::Tie;
  Overall overall = Overall::Tie;
};

// Compares both metrics at one n. Overall is MA_Best when the agent weakly
// wins both metrics and strictly wins at least one; symmetrically DNR_Best;
// Tie when both metrics tie; Mixed otherwise.
RegimeResult classify_regime(const CostParams& p, std::uint32_t n);

const char* to_string(CrossoverKind kind);
const char* to_string(Winner winner);
const char* to_string(Overall overall);

}  // namespace masim
