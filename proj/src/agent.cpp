#include "masim/agent.hpp"

#include <stdexcept>
#include <string>

namespace masim {

Bytes AgentState::bag_bytes() const {
  Bytes total = 0;
  for (const auto& r : bag) total += r.bytes;
  return total;
}

std::optional<NodeId> next_hop(AgentState& state, const Topology& topo) {
  while (state.next_index < state.itinerary.size()) {
    const NodeId candidate = state.itinerary[state.next_index];
    if (topo.node(candidate).status == NodeStatus::Faulty) {
      state.skipped.push_back(candidate);
      ++state.next_index;
      continue;
    }
    return candidate;
  }
  return std::nullopt;
}

void execute_locally(AgentState& state, const NodeSpec& node, const CostParams& params,
                     const AgentOptions& options, Engine& engine, RunReport& report) {
  if (node.status == NodeStatus::Faulty) {
    throw std::logic_error("agent executing at faulty node " + std::to_string(node.id));
  }
  // Each executed request accounts for its share of the launch invocation's
  // wire data (alpha) plus one local invocation. Charging alpha per executed
  // request keeps a run with skipped nodes equal to the fault-free run over
  // the reduced node count.
  const Cost local = node.local_invocation_cost.value_or(params.sigma);
  engine.record(node.id, "MA execute " + std::to_string(node.id), 0, params.alpha + local);
  report.invocation_cost += params.alpha + local;
  report.local_invocations += 1;
  const Bytes result = options.result_bytes >= 0 ? options.result_bytes : params.beta;
  state.bag.push_back(BagRecord{node.id, result});
  state.visited.push_back(node.id);
}

namespace {

struct AgentMachine {
  Engine& eng;
  const Topology& topo;
  const CostParams& p;
  const AgentOptions& opt;
  AgentState state;
  RunReport report;

  AgentMachine(Engine& e, const Topology& t, const CostParams& cp, const AgentOptions& o)
      : eng(e), topo(t), p(cp), opt(o) {}

  std::optional<Duration> fixed(Duration paper_value) const {
    if (opt.mode == TimeMode::Paper) return paper_value;
    return std::nullopt;
  }

  // Wire size of the agent at this moment: code plus the requests still to
  // deliver, plus the bag when it is carried.
  Bytes payload() const {
    const Bytes pending_requests =
        static_cast<Bytes>(state.itinerary.size() - state.next_index) * p.alpha;
    const Bytes bag = opt.bag_growth == BagGrowth::Carried ? state.bag_bytes() : 0;
    return state.code_size + pending_requests + bag;
  }

  void launch() {
    // The single network invocation: it carries the code and all requests.
    eng.record(topo.origin, "MA launch", 0, p.code_size);
    report.invocation_cost += p.code_size;
    report.remote_invocations = 1;
    proceed();
  }

  void proceed() {
    const auto target = next_hop(state, topo);
    if (!target) {
      report_back();
      return;
    }
    if (*target == state.current_node) {
      execute(*target);
      return;
    }
    const Bytes moved = payload();
    const Duration d = transfer_duration(topo, state.current_node, *target, moved,
                                         fixed(p.tr + p.ty));
    eng.schedule_after(d, [this, target = *target, moved] {
      state.current_node = target;
      state.hops += 1;
      report.messages += 1;
      report.bytes_on_wire += moved;
      eng.record(target, "MA migrate " + std::to_string(target), moved, 0);
      execute(target);
    });
  }

  void execute(NodeId node_id) {
    const NodeSpec& node = topo.node(node_id);
    const Duration search =
        opt.per_node_search ? node.search_time.value_or(p.t_obj) : Duration{0};
    eng.schedule_after(search, [this, node_id] {
      execute_locally(state, topo.node(node_id), p, opt, eng, report);
      if (topo.node(node_id).holds_resource) report.found = true;
      ++state.next_index;
      proceed();
    });
  }

  void report_back() {
    if (opt.return_style == ReturnStyle::None) return;
    // The report leg is priced even when the agent never left the origin:
    // the model charges the final response hop for every n.
    const bool migration = opt.return_style == ReturnStyle::Migration;
    const Bytes carried_bag = opt.bag_growth == BagGrowth::Carried ? state.bag_bytes() : 0;
    const Bytes moved = migration ? state.code_size + carried_bag : carried_bag;
    const Duration paper_time = migration ? p.tr + p.ty : p.tr;
    const Duration d = transfer_duration(topo, state.current_node, topo.origin, moved,
                                         fixed(paper_time));
    eng.schedule_after(d, [this, moved] {
      state.current_node = topo.origin;
      state.hops += 1;
      report.messages += 1;
      report.bytes_on_wire += moved;
      eng.record(topo.origin, "MA return", moved, p.alpha);
      report.invocation_cost += p.alpha;
    });
  }
};

}  // namespace

RunReport run_agent(Engine& engine, const Topology& topo, const CostParams& params,
                    const std::vector<NodeId>& itinerary, const AgentOptions& options) {
  params.validate();
  topo.validate();
  if (itinerary.empty()) throw std::domain_error("itinerary must not be empty");
  for (const NodeId id : itinerary) topo.node(id);  // reject unknown entries up front

  AgentMachine machine(engine, topo, params, options);
  machine.state.code_size = params.code_size;
  machine.state.itinerary = itinerary;
  machine.state.current_node = topo.origin;
  machine.report.paradigm = "MA";
  machine.report.n = static_cast<std::uint32_t>(itinerary.size());

  const Duration start = engine.now();
  engine.schedule_after(0, [&machine] { machine.launch(); });
  engine.run_until_idle();
  machine.report.comm_time = engine.now() - start;
  machine.report.hops = machine.state.hops;
  machine.report.visited = machine.state.visited;
  machine.report.skipped = machine.state.skipped;
  machine.report.bag = machine.state.bag;
  return machine.report;
}

}  // namespace masim
