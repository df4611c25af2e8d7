#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "masim/cost_model.hpp"
#include "masim/engine.hpp"
#include "masim/report.hpp"
#include "masim/topology.hpp"

namespace masim {

// Whether carried results add to the agent's wire payload. Ignored matches
// the per-hop pricing of the closed-form model; Carried weighs the bag on
// every later hop (visible in physical mode only).
enum class BagGrowth { Ignored, Carried };

// How the final report reaches the origin. Migration prices a full agent hop
// (tr + ty in paper mode); Message prices a plain response (tr); None ends the
// run at the last itinerary node.
enum class ReturnStyle { Migration, Message, None };

struct AgentOptions {
  TimeMode mode = TimeMode::Paper;
  BagGrowth bag_growth = BagGrowth::Ignored;
  ReturnStyle return_style = ReturnStyle::Migration;
  // Result bytes each node adds to the bag; negative means "use params.beta".
  double result_bytes = -1;
  // Charge each node's search_time while executing (off reproduces the
  // closed-form times exactly).
  bool per_node_search = false;
};

// The migrating agent between hops: code, bag, itinerary bookkeeping and the
// resumable position marker.
struct AgentState {
  Bytes code_size = 0;
  std::vector<BagRecord> bag;
  std::vector<NodeId> itinerary;
  std::vector<NodeId> visited;
  std::vector<NodeId> skipped;
  NodeId current_node = 0;
  std::uint64_t hops = 0;
  std::size_t next_index = 0;  // next itinerary entry to consider

  Bytes bag_bytes() const;
};

// First itinerary entry not yet visited or skipped whose node is up; faulty
// entries are appended to skipped and passed over. Empty result means the
// agent is out of targets and returns to the origin.
std::optional<NodeId> next_hop(AgentState& state, const Topology& topo);

// One local interaction: adds the node's local invocation cost plus the
// request's wire-data share to the run cost and appends the node's result to
// the bag. Executing at a faulty node is a logic error.
void execute_locally(AgentState& state, const NodeSpec& node, const CostParams& params,
                     const AgentOptions& options, Engine& engine, RunReport& report);

// Launches one agent at the origin, walks the itinerary (skipping faulty
// nodes), executes locally at each visited node and finally reports back to
// the origin with the bag. The itinerary may start with the origin itself,
// which is then visited in place without a hop.
RunReport run_agent(Engine& engine, const Topology& topo, const CostParams& params,
                    const std::vector<NodeId>& itinerary, const AgentOptions& options = {});

}  // namespace masim
