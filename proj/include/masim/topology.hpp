#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "masim/types.hpp"

namespace masim {

// Transfer pricing. Paper mode charges a fixed per-hop time (tr, ty) so runs
// reproduce the closed-form model exactly; physical mode derives hop times
// from link latency plus payload/bandwidth.
enum class TimeMode { Paper, Physical };

enum class NodeStatus { Up, Faulty };

struct NodeSpec {
  NodeId id = 0;
  NodeStatus status = NodeStatus::Up;
  // Per-node overrides; empty means "use the model parameter" (t_obj, sigma).
  std::optional<Duration> search_time;
  std::optional<Cost> local_invocation_cost;
  bool holds_resource = false;
};

constexpr double kInfiniteBandwidth = std::numeric_limits<double>::infinity();

// Node set plus link model. Links default to one uniform latency/bandwidth on
// every pair; per-pair overrides are available for irregular layouts.
struct Topology {
  std::vector<NodeSpec> nodes;
  NodeId origin = 0;
  Duration uniform_latency = 0;
  double uniform_bandwidth = kInfiniteBandwidth;  // bytes per time unit
  std::map<std::pair<NodeId, NodeId>, Duration> latency_overrides;
  std::map<std::pair<NodeId, NodeId>, double> bandwidth_overrides;

  // Origin node 0 plus servers 1..n_servers, identical latency on all pairs.
  static Topology uniform(std::uint32_t n_servers, Duration latency = 0,
                          double bandwidth = kInfiniteBandwidth);

  const NodeSpec& node(NodeId id) const;  // throws std::out_of_range on unknown id
  NodeSpec& node(NodeId id);
  bool has_node(NodeId id) const;
  Duration latency(NodeId from, NodeId to) const;
  double bandwidth(NodeId from, NodeId to) const;

  // Unique ids, origin present, latency >= 0, bandwidth > 0, at most one
  // resource holder. Throws std::invalid_argument.
  void validate() const;
};

// Wire time for one message. A fixed_time_override prices the hop verbatim
// (paper mode); otherwise latency(from,to) + payload_bytes / bandwidth(from,to).
// Node ids are checked either way.
Duration transfer_duration(const Topology& topo, NodeId from, NodeId to, Bytes payload_bytes,
                           std::optional<Duration> fixed_time_override = std::nullopt);

}  // namespace masim
