#include <algorithm>

#include "doctest.h"
#include "steinred/oracle.hpp"
#include "steinred/reduce.hpp"
#include "support.hpp"

using namespace steinred;
using namespace steinred::testing;

namespace {

bool contains(const std::vector<VertexId>& set, VertexId v) { return std::binary_search(set.begin(), set.end(), v); }

}  // namespace

TEST_CASE("reduce_loop: star7 loses s2 and keeps the optimum") {
  const auto r = reduce_loop(star7());
  CHECK_FALSE(r.instance.alive(star7_ids::s2));
  CHECK(brute_force_opt(r.instance).optimum == 10);
  CHECK(r.upper_bound == 10);
  CHECK(evaluate_cost(star7(), r.incumbent) == 10);
}

TEST_CASE("reduce_loop: triangle of required terminals is already reduced") {
  auto inst = make_instance(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {});
  for (VertexId v = 0; v < 3; ++v) inst.set_fixed(v);
  const auto r = reduce_loop(inst);
  CHECK(r.log.empty());
  CHECK(r.instance == inst);
}

TEST_CASE("reduce_loop: heavy prizes on a triangle only become fixings") {
  const auto inst = make_instance(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {{0, 100}, {1, 100}, {2, 100}});
  const auto r = reduce_loop(inst);
  CHECK(r.log.size() == 3);
  CHECK(r.log.count(EventKind::FixTerminal) == 3);
  CHECK(r.instance.alive_edge_count() == 3);
  CHECK(reduce_loop(r.instance).log.empty());
}

TEST_CASE("basic_reductions: leaves, degree two and lone terminals") {
  auto inst = make_instance(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}, {{0, 5}, {3, 5}});
  EventLog log(inst);
  basic_reductions(inst, log);
  inst.check_invariants();
  CHECK_FALSE(inst.alive(4));
  CHECK(inst.alive_vertex_count() == 2);
  CHECK(inst.edge(*inst.find_edge(0, 3)).cost == 3);

  auto lone = make_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{1, 4}});
  EventLog log2(lone);
  basic_reductions(lone, log2);
  CHECK(lone.alive_vertices() == std::vector<VertexId>{1});
  CHECK(lone.offset() == 0);
}

TEST_CASE("probe_vertex: symmetric pair leaves both choices open") {
  const auto inst = make_instance(2, {{0, 1, 3}}, {{0, 3}, {1, 3}});
  auto work = inst;
  EventLog log(work);
  CHECK(probe_vertex(work, log, 0, 3).empty());
  CHECK(work == inst);
}

TEST_CASE("probe_vertex: a prize above the bound gap is fixed") {
  // Leaving out vertex 1 forgoes 20, far above the optimum of 1.
  auto inst = make_instance(3, {{0, 1, 1}, {1, 2, 4}}, {{0, 10}, {1, 20}, {2, 1}});
  EventLog log(inst);
  const auto events = probe_vertex(inst, log, 1, 2);
  REQUIRE(events.size() >= 1);
  CHECK(events.front().kind == EventKind::FixTerminal);
  CHECK(inst.fixed(1));
}

TEST_CASE("probe_vertex: sound on random instances") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    CAPTURE(seed);
    const auto inst = random_instance(seed);
    const auto opt = brute_force_opt(inst, true);
    for (VertexId t : inst.unfixed_terminals()) {
      auto work = inst;
      EventLog log(work);
      const auto events = probe_vertex(work, log, t, opt.optimum);
      CHECK(brute_force_opt(work).optimum == doctest::Approx(opt.optimum).epsilon(1e-12));
      for (const auto& ev : events) {
        if (ev.kind != EventKind::FixTerminal) continue;
        for (const auto& set : opt.optimal_sets) CHECK(contains(set, ev.vertex));
      }
    }
  }
}

TEST_CASE("reduce_loop: optimum, idempotence and class monotonicity") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    const auto inst = seed % 4 == 0 ? with_fixed(random_instance(seed), 1) : random_instance(seed);
    const Cost opt = brute_force_opt(inst).optimum;
    const auto r = reduce_loop(inst);
    r.instance.check_invariants();
    const auto reduced = brute_force_opt(r.instance);
    CHECK(reduced.optimum == doctest::Approx(opt).epsilon(1e-12));
    CHECK(r.lower_bound <= opt + 1e-9);
    CHECK(r.upper_bound >= opt - 1e-9);
    CHECK(evaluate_cost(inst, r.incumbent) == doctest::Approx(r.upper_bound));
    CHECK(static_cast<int>(r.instance.problem_class()) >= static_cast<int>(inst.problem_class()));

    const auto back = retransform_solution(r.log, reduced.tree);
    CHECK(evaluate_cost(inst, back) == doctest::Approx(opt).epsilon(1e-12));

    const auto again = reduce_loop(r.instance);
    CHECK(again.log.size() == 0);
  }
}

TEST_CASE("reduce_loop: fixed terminals split apart give an infinite bound") {
  auto inst = make_instance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, {{1, 2}});
  inst.set_fixed(0);
  inst.set_fixed(3);
  EventLog log(inst);
  apply::delete_vertex(inst, log, 2);
  ReduceResult r;
  CHECK_NOTHROW(r = reduce_loop(inst));
  CHECK(r.lower_bound == kInfinity);
  CHECK(r.incumbent.vertices.empty());
}
