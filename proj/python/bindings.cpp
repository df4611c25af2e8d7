#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <stdexcept>
#include <string>

#include "masim/agent.hpp"
#include "masim/regime.hpp"
#include "masim/remoting.hpp"
#include "masim/scenario.hpp"
#include "masim/sweep.hpp"
#include "masim/validate.hpp"

namespace py = pybind11;
using namespace masim;

namespace {

ObjSearch parse_obj_search(const std::string& name) {
  if (name == "once") return ObjSearch::Once;
  if (name == "per_node") return ObjSearch::PerNode;
  if (name == "negligible") return ObjSearch::Negligible;
  throw std::invalid_argument("obj_search must be once, per_node or negligible");
}

RunReport simulate_remoting(const CostParams& params, std::uint32_t n,
                            const std::vector<NodeId>& faulty, const std::string& obj_search,
                            bool stop_on_found, double timeout_factor, std::uint64_t seed) {
  const UniformScenario s = make_uniform_scenario(
      n, 0, kInfiniteBandwidth, std::set<NodeId>(faulty.begin(), faulty.end()));
  Engine engine(seed);
  RemotingOptions opt;
  opt.obj_search = parse_obj_search(obj_search);
  opt.stop_on_found = stop_on_found;
  opt.timeout_factor = timeout_factor;
  return run_remoting(engine, s.topology, params, n, opt);
}

RunReport simulate_agent(const CostParams& params, std::uint32_t n,
                         const std::vector<NodeId>& faulty, bool include_return,
                         std::uint64_t seed) {
  const UniformScenario s = make_uniform_scenario(
      n, 0, kInfiniteBandwidth, std::set<NodeId>(faulty.begin(), faulty.end()));
  Engine engine(seed);
  AgentOptions opt;
  opt.return_style = include_return ? ReturnStyle::Migration : ReturnStyle::None;
  return run_agent(engine, s.topology, params, s.agent_itinerary, opt);
}

}  // namespace

PYBIND11_MODULE(_masim, m) {
  m.doc() = "closed-form model and deterministic simulator comparing sequential remote "
            "invocation (DNR) with mobile-agent migration (MA)";

  py::class_<CostParams>(m, "CostParams")
      .def(py::init<>())
      .def_readwrite("tr", &CostParams::tr)
      .def_readwrite("ty", &CostParams::ty)
      .def_readwrite("t_obj", &CostParams::t_obj)
      .def_readwrite("t_proxy", &CostParams::t_proxy)
      .def_readwrite("alpha", &CostParams::alpha)
      .def_readwrite("beta", &CostParams::beta)
      .def_readwrite("psi", &CostParams::psi)
      .def_readwrite("sigma", &CostParams::sigma)
      .def_readwrite("code_size", &CostParams::code_size)
      .def("validate", &CostParams::validate);

  py::class_<CrossoverResult>(m, "CrossoverResult")
      .def_property_readonly("kind",
                             [](const CrossoverResult& r) { return std::string(to_string(r.kind)); })
      .def_readonly("n_star", &CrossoverResult::n_star)
      .def_readonly("margin_at_threshold", &CrossoverResult::margin_at_threshold)
      .def("__repr__", [](const CrossoverResult& r) { return r.describe("crossover"); });

  py::class_<RegimeResult>(m, "RegimeResult")
      .def_property_readonly("time_winner", [](const RegimeResult& r) {
        return std::string(to_string(r.time_winner));
      })
      .def_property_readonly("cost_winner", [](const RegimeResult& r) {
        return std::string(to_string(r.cost_winner));
      })
      .def_property_readonly("overall", [](const RegimeResult& r) {
        return std::string(to_string(r.overall));
      });

  py::class_<BagRecord>(m, "BagRecord")
      .def_readonly("node", &BagRecord::node)
      .def_readonly("bytes", &BagRecord::bytes);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("paradigm", &RunReport::paradigm)
      .def_readonly("n", &RunReport::n)
      .def_readonly("comm_time", &RunReport::comm_time)
      .def_readonly("invocation_cost", &RunReport::invocation_cost)
      .def_readonly("messages", &RunReport::messages)
      .def_readonly("bytes_on_wire", &RunReport::bytes_on_wire)
      .def_readonly("remote_invocations", &RunReport::remote_invocations)
      .def_readonly("local_invocations", &RunReport::local_invocations)
      .def_readonly("hops", &RunReport::hops)
      .def_readonly("visited", &RunReport::visited)
      .def_readonly("skipped", &RunReport::skipped)
      .def_readonly("bag", &RunReport::bag)
      .def_readonly("found", &RunReport::found);

  m.def(
      "dnr_comm_time",
      [](const CostParams& p, std::uint32_t n, const std::string& obj_search) {
        return dnr_comm_time(p, n, parse_obj_search(obj_search));
      },
      py::arg("params"), py::arg("n"), py::arg("obj_search") = "negligible");
  m.def("ma_comm_time", &ma_comm_time, py::arg("params"), py::arg("n"),
        py::arg("include_return") = true);
  m.def("dnr_invocation_cost", &dnr_invocation_cost, py::arg("params"), py::arg("n"),
        py::arg("with_proxy") = true);
  m.def("ma_invocation_cost", &ma_invocation_cost, py::arg("params"), py::arg("n"));
  m.def("comm_crossover", &comm_crossover, py::arg("params"));
  m.def("cost_crossover", &cost_crossover, py::arg("params"));
  m.def(
      "classify_regime",
      [](const CostParams& p, std::uint32_t n) { return classify_regime(p, n); },
      py::arg("params"), py::arg("n"));

  m.def("simulate_remoting", &simulate_remoting, py::arg("params"), py::arg("n"),
        py::arg("faulty") = std::vector<NodeId>{}, py::arg("obj_search") = "negligible",
        py::arg("stop_on_found") = false, py::arg("timeout_factor") = 2.0, py::arg("seed") = 0);
  m.def("simulate_agent", &simulate_agent, py::arg("params"), py::arg("n"),
        py::arg("faulty") = std::vector<NodeId>{}, py::arg("include_return") = true,
        py::arg("seed") = 0);

#ifdef MASIM_VERSION
  m.attr("__version__") = MASIM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
