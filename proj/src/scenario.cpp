#include "masim/scenario.hpp"

#include <stdexcept>
#include <string>

namespace masim {

UniformScenario make_uniform_scenario(std::uint32_t n, Duration latency, double bandwidth,
                                      const std::set<NodeId>& faulty_servers) {
  if (n == 0) throw std::domain_error("scenario needs n >= 1");
  UniformScenario s;
  s.n = n;
  s.topology = Topology::uniform(n, latency, bandwidth);
  for (const NodeId id : faulty_servers) {
    if (id == s.topology.origin) {
      throw std::invalid_argument("launching node cannot be marked faulty");
    }
    s.topology.node(id).status = NodeStatus::Faulty;
  }
  s.agent_itinerary.reserve(n);
  s.agent_itinerary.push_back(s.topology.origin);
  for (NodeId id = 1; id < static_cast<NodeId>(n); ++id) {
    s.agent_itinerary.push_back(id);
  }
  return s;
}

}  // namespace masim
