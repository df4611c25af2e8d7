#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "masim/types.hpp"

namespace masim {

struct BagRecord {
  NodeId node = 0;
  Bytes bytes = 0;
};

// Measured totals of one run. Counters are sums over the run's trace records,
// so conservation against the trace always holds.
struct RunReport {
  std::string paradigm;  // "DNR" or "MA"
  std::uint32_t n = 0;   // request count the run models
  Duration comm_time = 0;
  Cost invocation_cost = 0;
  std::uint64_t messages = 0;
  Bytes bytes_on_wire = 0;
  std::uint64_t remote_invocations = 0;
  std::uint64_t local_invocations = 0;
  std::uint64_t hops = 0;  // agent migrations, final report leg included; 0 for DNR
  std::vector<NodeId> visited;
  std::vector<NodeId> skipped;
  std::vector<BagRecord> bag;  // agent runs only
  bool found = false;
};

}  // namespace masim
