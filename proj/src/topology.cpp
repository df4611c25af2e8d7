#include "masim/topology.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace masim {

Topology Topology::uniform(std::uint32_t n_servers, Duration latency, double bandwidth) {
  Topology topo;
  topo.origin = 0;
  topo.uniform_latency = latency;
  topo.uniform_bandwidth = bandwidth;
  topo.nodes.reserve(n_servers + 1);
  for (NodeId id = 0; id <= static_cast<NodeId>(n_servers); ++id) {
    NodeSpec node;
    node.id = id;
    topo.nodes.push_back(node);
  }
  return topo;
}

namespace {

// Builders assign ids equal to vector positions, which keeps lookups O(1);
// hand-assembled topologies fall back to the scan.
template <typename Nodes>
auto* find_node(Nodes& nodes, NodeId id) {
  if (id >= 0 && static_cast<std::size_t>(id) < nodes.size() &&
      nodes[static_cast<std::size_t>(id)].id == id) {
    return &nodes[static_cast<std::size_t>(id)];
  }
  for (auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return decltype(&nodes.front()){nullptr};
}

}  // namespace

bool Topology::has_node(NodeId id) const { return find_node(nodes, id) != nullptr; }

const NodeSpec& Topology::node(NodeId id) const {
  if (const auto* n = find_node(nodes, id)) return *n;
  throw std::out_of_range("unknown node id " + std::to_string(id));
}

NodeSpec& Topology::node(NodeId id) {
  if (auto* n = find_node(nodes, id)) return *n;
  throw std::out_of_range("unknown node id " + std::to_string(id));
}

Duration Topology::latency(NodeId from, NodeId to) const {
  if (from == to) return 0;
  auto it = latency_overrides.find({from, to});
  if (it != latency_overrides.end()) return it->second;
  return uniform_latency;
}

double Topology::bandwidth(NodeId from, NodeId to) const {
  if (from == to) return kInfiniteBandwidth;
  auto it = bandwidth_overrides.find({from, to});
  if (it != bandwidth_overrides.end()) return it->second;
  return uniform_bandwidth;
}

void Topology::validate() const {
  if (nodes.empty()) throw std::invalid_argument("topology has no nodes");
  std::set<NodeId> ids;
  int holders = 0;
  for (const auto& n : nodes) {
    if (!ids.insert(n.id).second) {
      throw std::invalid_argument("duplicate node id " + std::to_string(n.id));
    }
    if (n.search_time && (*n.search_time < 0 || !std::isfinite(*n.search_time))) {
      throw std::invalid_argument("node search_time must be >= 0");
    }
    if (n.local_invocation_cost &&
        (*n.local_invocation_cost < 0 || !std::isfinite(*n.local_invocation_cost))) {
      throw std::invalid_argument("node local_invocation_cost must be >= 0");
    }
    if (n.holds_resource) ++holders;
  }
  if (holders > 1) throw std::invalid_argument("at most one node may hold the resource");
  if (!ids.count(origin)) {
    throw std::invalid_argument("origin node " + std::to_string(origin) + " missing");
  }
  if (uniform_latency < 0 || !std::isfinite(uniform_latency)) {
    throw std::invalid_argument("latency must be >= 0 and finite");
  }
  if (!(uniform_bandwidth > 0)) throw std::invalid_argument("bandwidth must be > 0");
  for (const auto& [pair, lat] : latency_overrides) {
    if (lat < 0 || !std::isfinite(lat)) throw std::invalid_argument("latency must be >= 0");
    (void)pair;
  }
  for (const auto& [pair, bw] : bandwidth_overrides) {
    if (!(bw > 0)) throw std::invalid_argument("bandwidth must be > 0");
    (void)pair;
  }
}

Duration transfer_duration(const Topology& topo, NodeId from, NodeId to, Bytes payload_bytes,
                           std::optional<Duration> fixed_time_override) {
  topo.node(from);  // id checks apply in both modes
  topo.node(to);
  if (fixed_time_override) return *fixed_time_override;
  const double bw = topo.bandwidth(from, to);
  const double serialization = std::isinf(bw) ? 0.0 : payload_bytes / bw;
  return topo.latency(from, to) + serialization;
}

}  // namespace masim
