#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "masim/topology.hpp"

namespace masim {

// The canonical comparison setup for one request count n: origin node 0 plus
// n uniform servers. The client/server run interrogates servers 1..n; the
// agent walks [origin, 1, .., n-1], i.e. n itinerary nodes counting the
// launching node, so both paradigms model the same n requests.
struct UniformScenario {
  Topology topology;
  std::vector<NodeId> agent_itinerary;
  std::uint32_t n = 0;
};

UniformScenario make_uniform_scenario(std::uint32_t n, Duration latency = 0,
                                      double bandwidth = kInfiniteBandwidth,
                                      const std::set<NodeId>& faulty_servers = {});

}  // namespace masim
