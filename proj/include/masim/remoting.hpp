#pragma once

#include <cstdint>

#include "masim/cost_model.hpp"
#include "masim/engine.hpp"
#include "masim/report.hpp"
#include "masim/topology.hpp"

namespace masim {

// Per-server progress of the client/server state machine. Phases only ever
// advance; servers are handled strictly one after another.
enum class RemotingPhase { Pending, ProxyDownload, RequestInFlight, Searching, ResponseInFlight, Done, TimedOut };

struct RemotingOptions {
  TimeMode mode = TimeMode::Paper;
  ObjSearch obj_search = ObjSearch::Negligible;
  bool stop_on_found = false;
  // A request to a faulty server is abandoned after timeout_factor times the
  // one-way transit time; the wasted request still costs alpha + psi.
  double timeout_factor = 2.0;
  Bytes proxy_bytes = 0;  // proxy download size; its transit is free in paper mode
};

// Client at the origin interrogates the first n_servers non-origin nodes in
// topology order, one request/response round trip each, downloading the proxy
// before the first request. With stop_on_found, iteration ends after the
// response of the server holding the resource.
RunReport run_remoting(Engine& engine, const Topology& topo, const CostParams& params,
                       std::uint32_t n_servers, const RemotingOptions& options = {});

}  // namespace masim
