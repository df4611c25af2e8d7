#include "doctest.h"

#include <stdexcept>
#include <string>

#include "masim/remoting.hpp"
#include "masim/scenario.hpp"
#include "../test_support.hpp"

using namespace masim;
using namespace masim::test;

namespace {

RunReport run_uniform(const CostParams& p, std::uint32_t n, const RemotingOptions& opt = {},
                      const std::set<NodeId>& faulty = {}, NodeId resource_at = -1,
                      Engine* engine_out = nullptr) {
  UniformScenario s = make_uniform_scenario(n, 0, kInfiniteBandwidth, faulty);
  if (resource_at >= 0) s.topology.node(resource_at).holds_resource = true;
  Engine local;
  Engine& eng = engine_out ? *engine_out : local;
  return run_remoting(eng, s.topology, p, n, opt);
}

}  // namespace

TEST_CASE("fault-free run reproduces the closed forms") {
  CostParams p;
  p.tr = 1;
  SUBCASE("time with negligible search") {
    const RunReport r = run_uniform(p, 5);
    CHECK(r.comm_time == doctest::Approx(10).epsilon(1e-12));
    CHECK(r.messages == 11);  // 2n round trip messages plus the proxy download
    CHECK(r.remote_invocations == 5);
    CHECK(r.hops == 0);
    CHECK(r.visited.size() == 5);
    CHECK(r.n == 5);
  }
  SUBCASE("cost with proxy") {
    CostParams c;
    c.alpha = 100;
    c.psi = 10;
    c.t_proxy = 50;
    const RunReport r = run_uniform(c, 4);
    CHECK(r.invocation_cost == doctest::Approx(890).epsilon(1e-12));
    CHECK(r.bytes_on_wire == doctest::Approx(800).epsilon(1e-12));
  }
  SUBCASE("search once vs per node") {
    CostParams s;
    s.tr = 1;
    s.t_obj = 3;
    RemotingOptions once;
    once.obj_search = ObjSearch::Once;
    CHECK(run_uniform(s, 4, once).comm_time == doctest::Approx(11).epsilon(1e-12));
    RemotingOptions per_node;
    per_node.obj_search = ObjSearch::PerNode;
    CHECK(run_uniform(s, 4, per_node).comm_time == doctest::Approx(20).epsilon(1e-12));
  }
}

TEST_CASE("stop_on_found exits after the holder's response") {
  CostParams p;
  p.tr = 1;
  RemotingOptions opt;
  opt.stop_on_found = true;
  const RunReport r = run_uniform(p, 5, opt, {}, /*resource_at=*/1);
  CHECK(r.comm_time == doctest::Approx(2).epsilon(1e-12));
  CHECK(r.messages == 3);  // proxy + one round trip
  CHECK(r.found);
  CHECK(r.visited == std::vector<NodeId>{1});
}

TEST_CASE("faulty servers cost a send plus a timeout wait") {
  CostParams p;
  p.tr = 1;
  SUBCASE("one faulty of three") {
    const RunReport r = run_uniform(p, 3, {}, {2});
    CHECK(r.comm_time == doctest::Approx(7).epsilon(1e-12));  // 2 + (1 + 2) + 2
    CHECK(r.skipped == std::vector<NodeId>{2});
    CHECK(r.visited == std::vector<NodeId>{1, 3});
  }
  SUBCASE("no faults matches the baseline") {
    CHECK(run_uniform(p, 3).comm_time == doctest::Approx(6).epsilon(1e-12));
  }
  SUBCASE("all faulty yields no result") {
    CostParams c = p;
    c.alpha = 10;
    c.psi = 2;
    const RunReport r = run_uniform(c, 3, {}, {1, 2, 3});
    CHECK(r.comm_time == doctest::Approx(9).epsilon(1e-12));
    CHECK(r.visited.empty());
    CHECK(!r.found);
    CHECK(r.skipped == std::vector<NodeId>{1, 2, 3});
    // Wasted requests still hit the wire: alpha + psi each.
    CHECK(r.invocation_cost == doctest::Approx(3 * 12).epsilon(1e-12));
    CHECK(r.messages == 4);  // proxy + three lost requests
  }
}

TEST_CASE("trace is sequential and matches the frozen golden form") {
  CostParams p;
  p.tr = 1;
  p.alpha = 10;
  p.psi = 2;
  p.t_proxy = 5;
  Engine eng;
  run_uniform(p, 2, {}, {}, -1, &eng);
  CHECK(eng.trace().to_text() ==
        "0\t0\tDNR proxy download\t0\t5\n"
        "1\t1\tDNR request 1\t10\t12\n"
        "2\t0\tDNR response 1\t10\t10\n"
        "3\t2\tDNR request 2\t10\t12\n"
        "4\t0\tDNR response 2\t10\t10\n");
}

TEST_CASE("trace never interleaves servers") {
  CostParams p;
  p.tr = 2;
  Engine eng;
  run_uniform(p, 6, {}, {}, -1, &eng);
  int last_done = 0;
  for (const auto& rec : eng.trace().records) {
    if (rec.event.rfind("DNR request ", 0) == 0) {
      const int server = std::stoi(rec.event.substr(12));
      CHECK(server == last_done + 1);  // next request only after previous response
    } else if (rec.event.rfind("DNR response ", 0) == 0) {
      last_done = std::stoi(rec.event.substr(13));
    }
  }
  CHECK(last_done == 6);
}

TEST_CASE("report totals equal trace folds") {
  CostParams p;
  p.tr = 1;
  p.alpha = 7;
  p.psi = 3;
  p.t_proxy = 11;
  Engine eng;
  const RunReport r = run_uniform(p, 4, {}, {3}, -1, &eng);
  CHECK(r.invocation_cost == doctest::Approx(eng.trace().total_cost()).epsilon(1e-12));
  CHECK(r.bytes_on_wire == doctest::Approx(eng.trace().total_bytes()).epsilon(1e-12));
}

TEST_CASE("simulated totals equal the analytical forms across n") {
  TestRng rng(7);
  for (int set = 0; set < 10; ++set) {
    CostParams p = random_params(rng, false);
    for (std::uint32_t n : {1u, 2u, 3u, 7u, 20u, 41u}) {
      const RunReport r = run_uniform(p, n);
      const double expect_time = dnr_comm_time(p, n, ObjSearch::Negligible);
      const double expect_cost = dnr_invocation_cost(p, n, true);
      CHECK(r.comm_time == doctest::Approx(expect_time).epsilon(1e-9));
      CHECK(r.invocation_cost == doctest::Approx(expect_cost).epsilon(1e-9));
      CHECK(r.messages == 2 * n + 1);
    }
  }
}

TEST_CASE("physical mode derives hop times from latency and bandwidth") {
  CostParams p;
  p.alpha = 300;
  RemotingOptions opt;
  opt.mode = TimeMode::Physical;
  UniformScenario s = make_uniform_scenario(1, /*latency=*/2, /*bandwidth=*/100);
  Engine eng;
  const RunReport r = run_remoting(eng, s.topology, p, 1, opt);
  // proxy (latency only, zero bytes) + request (2 + 3) + response (2 + 3)
  CHECK(r.comm_time == doctest::Approx(12).epsilon(1e-12));
}

TEST_CASE("input validation") {
  CostParams p;
  Engine eng;
  Topology empty;
  CHECK_THROWS_AS(run_remoting(eng, empty, p, 1), std::invalid_argument);
  UniformScenario s = make_uniform_scenario(2);
  CHECK_THROWS_AS(run_remoting(eng, s.topology, p, 3), std::invalid_argument);
  CHECK_THROWS_AS(run_remoting(eng, s.topology, p, 0), std::domain_error);
}
