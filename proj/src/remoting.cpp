#include "masim/remoting.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace masim {

namespace {

struct RemotingMachine {
  Engine& eng;
  const Topology& topo;
  const CostParams& p;
  const RemotingOptions& opt;
  std::vector<NodeId> servers;
  std::vector<RemotingPhase> phases;

  RunReport report;
  std::size_t index = 0;
  bool searched_once = false;

  RemotingMachine(Engine& e, const Topology& t, const CostParams& cp, const RemotingOptions& o)
      : eng(e), topo(t), p(cp), opt(o) {}

  std::optional<Duration> fixed(Duration paper_value) const {
    if (opt.mode == TimeMode::Paper) return paper_value;
    return std::nullopt;
  }

  void advance(std::size_t phase_index, RemotingPhase next) {
    // Phases move forward only; a regression is a machine bug.
    if (next < phases[phase_index]) throw std::logic_error("remoting phase went backwards");
    phases[phase_index] = next;
  }

  void start() {
    // Proxy download from the first server, strictly before the first
    // request. The model prices it as a cost, not a delay, so the leg takes
    // no time in paper mode.
    advance(0, RemotingPhase::ProxyDownload);
    const Duration d = transfer_duration(topo, servers.front(), topo.origin, opt.proxy_bytes,
                                         fixed(0.0));
    eng.schedule_after(d, [this] {
      eng.record(topo.origin, "DNR proxy download", opt.proxy_bytes, p.t_proxy);
      report.messages += 1;
      report.bytes_on_wire += opt.proxy_bytes;
      report.invocation_cost += p.t_proxy;
      send_request();
    });
  }

  void send_request() {
    const NodeId server = servers[index];
    advance(index, RemotingPhase::RequestInFlight);
    const Duration d = transfer_duration(topo, topo.origin, server, p.alpha, fixed(p.tr));
    const bool faulty = topo.node(server).status == NodeStatus::Faulty;
    eng.schedule_after(d, [this, server, faulty] {
      report.messages += 1;
      report.bytes_on_wire += p.alpha;
      report.invocation_cost += p.alpha + p.psi;
      report.remote_invocations += 1;
      if (faulty) {
        eng.record(server, "DNR request lost " + std::to_string(server), p.alpha, p.alpha + p.psi);
        wait_for_timeout(server);
      } else {
        eng.record(server, "DNR request " + std::to_string(server), p.alpha, p.alpha + p.psi);
        search(server);
      }
    });
  }

  void search(NodeId server) {
    advance(index, RemotingPhase::Searching);
    Duration search_delay = 0;
    switch (opt.obj_search) {
      case ObjSearch::Once:
        // Charged at the first server that actually processes a request.
        if (!searched_once) {
          searched_once = true;
          search_delay = p.t_obj;
        }
        break;
      case ObjSearch::PerNode:
        search_delay = topo.node(server).search_time.value_or(p.t_obj);
        break;
      case ObjSearch::Negligible:
        break;
    }
    eng.schedule_after(search_delay, [this, server] { send_response(server); });
  }

  void send_response(NodeId server) {
    advance(index, RemotingPhase::ResponseInFlight);
    const Duration d = transfer_duration(topo, server, topo.origin, p.alpha, fixed(p.tr));
    eng.schedule_after(d, [this, server] {
      eng.record(topo.origin, "DNR response " + std::to_string(server), p.alpha, p.alpha);
      report.messages += 1;
      report.bytes_on_wire += p.alpha;
      report.invocation_cost += p.alpha;
      advance(index, RemotingPhase::Done);
      report.visited.push_back(server);
      const bool hit = topo.node(server).holds_resource;
      if (hit) report.found = true;
      if (hit && opt.stop_on_found) return;
      next_server();
    });
  }

  void wait_for_timeout(NodeId server) {
    const Duration one_way = opt.mode == TimeMode::Paper ? p.tr : topo.latency(topo.origin, server);
    eng.schedule_after(opt.timeout_factor * one_way, [this, server] {
      eng.record(topo.origin, "DNR timeout " + std::to_string(server), 0, 0);
      advance(index, RemotingPhase::TimedOut);
      report.skipped.push_back(server);
      next_server();
    });
  }

  void next_server() {
    ++index;
    if (index < servers.size()) send_request();
  }
};

}  // namespace

RunReport run_remoting(Engine& engine, const Topology& topo, const CostParams& params,
                       std::uint32_t n_servers, const RemotingOptions& options) {
  params.validate();
  topo.validate();
  if (n_servers == 0) throw std::domain_error("n_servers must be >= 1");
  if (options.timeout_factor < 0) throw std::domain_error("timeout_factor must be >= 0");

  RemotingMachine machine(engine, topo, params, options);
  for (const auto& node : topo.nodes) {
    if (node.id == topo.origin) continue;
    machine.servers.push_back(node.id);
    if (machine.servers.size() == n_servers) break;
  }
  if (machine.servers.size() < n_servers) {
    throw std::invalid_argument("topology has " + std::to_string(machine.servers.size()) +
                                " servers, run needs " + std::to_string(n_servers));
  }
  machine.phases.assign(n_servers, RemotingPhase::Pending);
  machine.report.paradigm = "DNR";
  machine.report.n = n_servers;

  const Duration start = engine.now();
  engine.schedule_after(0, [&machine] { machine.start(); });
  engine.run_until_idle();
  machine.report.comm_time = engine.now() - start;
  return machine.report;
}

}  // namespace masim
