#include <algorithm>

#include "doctest.h"
#include "steinred/oracle.hpp"
#include "steinred/walk.hpp"
#include "support.hpp"

using namespace steinred;
using namespace steinred::testing;

namespace {

PcWalk walk_along(const PcInstance& inst, const std::vector<VertexId>& vs) {
  PcWalk w{vs, {}};
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) w.edges.push_back(*inst.find_edge(vs[i], vs[i + 1]));
  return w;
}

/// a = 0, b = 1, t = 2.
PcInstance triangle() { return make_instance(3, {{0, 1, 4}, {0, 2, 3}, {2, 1, 3}}, {{0, 5}, {1, 5}, {2, 4}}); }

bool in_every_set(const std::vector<VertexId>& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace

TEST_CASE("prize_constrained_length: single edge") {
  const auto inst = path3();
  const auto len = prize_constrained_length(inst, walk_along(inst, {0, 1}));
  CHECK(len.cost == 3);
  CHECK(len.length == 3);
  CHECK(len.left_length == 3);
}

TEST_CASE("prize_constrained_length: a-t-b") {
  const auto inst = path3();
  const auto len = prize_constrained_length(inst, walk_along(inst, {0, 1, 2}));
  CHECK(len.cost == 2);
  CHECK(len.length == 3);
}

TEST_CASE("prize_constrained_length: star7 left-rooted prefix") {
  using namespace star7_ids;
  const auto inst = star7();
  const auto len = prize_constrained_length(inst, walk_along(inst, {t1, s1, t4, t5}));
  CHECK(len.left_length == 3);
  CHECK(len.cost == -1);
}

TEST_CASE("validate_walk: rejects repeated terminals and broken links") {
  const auto inst = star7();
  using namespace star7_ids;
  CHECK_THROWS_AS(validate_walk(inst, walk_along(inst, {t1, t2, t1})), ValidationError);
  PcWalk broken{{t1, t4}, {*inst.find_edge(t1, t2)}};
  CHECK_THROWS_AS(validate_walk(inst, broken), ValidationError);
  CHECK_NOTHROW(validate_walk(inst, walk_along(inst, {t2, s1, t4, s1, t1})));
}

TEST_CASE("dpc_upper_bound: plain shortest path") {
  const auto inst = make_instance(3, {{0, 2, 1}, {2, 1, 1}}, {});
  const auto b = dpc_upper_bound(inst, 0, 1, 5, 100);
  CHECK(b.value == 2);
  CHECK(b.witness.vertices == std::vector<VertexId>{0, 2, 1});
}

TEST_CASE("dpc_upper_bound: triangle through a terminal") {
  const auto inst = triangle();
  const auto b = dpc_upper_bound(inst, 0, 1, 4, 100);
  CHECK(b.value == 3);
  CHECK(prize_constrained_length(inst, b.witness).length == 3);
}

TEST_CASE("dpc_upper_bound: tiny cap blocks everything") {
  const auto inst = triangle();
  CHECK_FALSE(dpc_upper_bound(inst, 0, 1, 0.5, 100).found());
  CHECK(dpc_upper_bound(inst, 0, 1, 0.5, 100).value == kInfinity);
}

TEST_CASE("edge_deletion_pass: triangle drops the long edge") {
  auto inst = triangle();
  const auto del = edge_deletion_pass(inst, 100, false);
  REQUIRE(del.size() == 1);
  CHECK(del[0].edge == *inst.find_edge(0, 1));
  CHECK_FALSE(del[0].equality);
  const Cost before = brute_force_opt(inst).optimum;
  inst.remove_edge(del[0].edge);
  CHECK(brute_force_opt(inst).optimum == before);
}

TEST_CASE("edge_deletion_pass: one equality deletion per pass") {
  // Two triangles, each with an edge tied with the detour.
  const auto inst = make_instance(6, {{0, 1, 2}, {0, 2, 1}, {2, 1, 1}, {3, 4, 2}, {3, 5, 1}, {5, 4, 1}, {1, 3, 1}},
                                  {{0, 3}, {4, 3}});
  CHECK(edge_deletion_pass(inst, 100, false).empty());
  const auto del = edge_deletion_pass(inst, 100, true);
  REQUIRE(del.size() == 1);
  CHECK(del[0].equality);
}

TEST_CASE("edge_deletion_pass: star keeps every edge") {
  const auto inst = make_instance(5, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {0, 4, 4}}, {{1, 5}, {2, 5}, {3, 5}});
  CHECK(edge_deletion_pass(inst, 100, false).empty());
  CHECK(edge_deletion_pass(inst, 100, true).empty());
}

TEST_CASE("left_reach_set: examples") {
  SUBCASE("one neighbour") {
    const auto inst = make_instance(2, {{0, 1, 1}}, {{0, 2}});
    const auto r = left_reach_set(inst, 0, 100);
    CHECK(r.members() == std::vector<VertexId>{1});
    CHECK(r.bound(1) == 1);
  }
  SUBCASE("chain through a heavier terminal") {
    const auto inst = make_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}, {1, 5}});
    const auto r = left_reach_set(inst, 0, 100);
    CHECK(r.contains(2));
    CHECK(r.witness(2).vertices == std::vector<VertexId>{0, 1, 2});
  }
  SUBCASE("prize below every edge") {
    const auto inst = make_instance(3, {{0, 1, 3}, {0, 2, 4}}, {{0, 2}});
    CHECK(left_reach_set(inst, 0, 100).members().empty());
  }
  SUBCASE("source needs a prize") {
    const auto inst = path3();
    CHECK_THROWS_AS(left_reach_set(inst, 0, 100), PreconditionError);
  }
}

TEST_CASE("implies_containment: direct edge and self") {
  const auto inst = make_instance(2, {{0, 1, 1}}, {{0, 2}, {1, 1}});
  const auto r = left_reach_set(inst, 0, 100);
  CHECK(implies_containment(r, 1));
  CHECK_FALSE(implies_containment(r, 0));
}

TEST_CASE("walk bounds carry exact witnesses on random instances") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    CAPTURE(seed);
    const auto inst = seed % 4 == 0 ? with_fixed(random_instance(seed), 1) : random_instance(seed);
    const long budget = default_edge_budget(inst);
    for (EdgeId e : inst.alive_edges()) {
      const Edge& edge = inst.edge(e);
      const auto b = dpc_upper_bound(inst, edge.u, edge.v, edge.cost, budget, e, seed % 2 == 0);
      if (!b.found()) continue;
      CHECK(b.witness.first() == edge.u);
      CHECK(b.witness.last() == edge.v);
      CHECK(std::find(b.witness.edges.begin(), b.witness.edges.end(), e) == b.witness.edges.end());
      CHECK(prize_constrained_length(inst, b.witness).length == b.value);
      CHECK(b.value <= edge.cost);
    }
    for (VertexId t : inst.terminals()) {
      const auto r = left_reach_set(inst, t, budget);
      for (VertexId v : r.members()) {
        const auto w = r.witness(v);
        CHECK(w.first() == t);
        CHECK(w.last() == v);
        CHECK(prize_constrained_length(inst, w).left_length == r.bound(v));
        CHECK(r.bound(v) < r.threshold());
      }
    }
  }
}

TEST_CASE("strict edge deletions never change the optimum") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    auto inst = random_instance(seed);
    const Cost before = brute_force_opt(inst).optimum;
    for (const auto& d : edge_deletion_pass(inst, default_edge_budget(inst), false)) inst.remove_edge(d.edge);
    CHECK(brute_force_opt(inst).optimum == before);
  }
}

TEST_CASE("implies_containment agrees with every optimum") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    const auto inst = random_instance(seed);
    const auto opt = brute_force_opt(inst, true);
    for (VertexId t : inst.terminals()) {
      const auto r = left_reach_set(inst, t, default_edge_budget(inst));
      for (VertexId v : r.members()) {
        if (!implies_containment(r, v)) continue;
        for (const auto& set : opt.optimal_sets)
          if (in_every_set(set, v)) CHECK(in_every_set(set, t));
      }
    }
  }
}
