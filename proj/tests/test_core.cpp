#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "steinred/distance.hpp"
#include "steinred/instance.hpp"
#include "steinred/oracle.hpp"
#include "support.hpp"

using namespace steinred;
using namespace steinred::testing;

namespace {

SteinerTree tree_of(const PcInstance& inst, std::vector<VertexId> vs,
                    const std::vector<std::pair<VertexId, VertexId>>& es) {
  SteinerTree t;
  t.vertices = std::move(vs);
  for (auto [a, b] : es) t.edges.push_back(*inst.find_edge(a, b));
  t.normalize();
  return t;
}

}  // namespace

TEST_CASE("evaluate_cost: single terminal on path3 costs nothing") {
  const auto inst = path3();
  CHECK(evaluate_cost(inst, SteinerTree{{1}, {}}) == 0);
  CHECK(evaluate_cost(inst, SteinerTree{{0}, {}}) == 4);
}

TEST_CASE("evaluate_cost: star7 tree of value 10") {
  using namespace star7_ids;
  const auto inst = star7();
  const auto t = tree_of(inst, {t1, t2, t3, t4, t5, s1}, {{t1, t2}, {t1, t3}, {t1, s1}, {s1, t4}, {t4, t5}});
  CHECK(evaluate_cost(inst, t) == 10);
}

TEST_CASE("evaluate_cost: rejects invalid trees") {
  const auto inst = star7();
  CHECK_THROWS_AS(evaluate_cost(inst, SteinerTree{{0, 1}, {}}), ValidationError);
  CHECK_THROWS_AS(evaluate_cost(inst, SteinerTree{}), ValidationError);
  auto rooted = star7();
  rooted.set_fixed(star7_ids::t5);
  CHECK_THROWS_AS(evaluate_cost(rooted, SteinerTree{{0}, {}}), ValidationError);
  // A cycle is not a tree.
  const auto cyc = tree_of(inst, {0, 1, 3}, {{0, 1}, {1, 3}, {0, 3}});
  CHECK_THROWS_AS(evaluate_cost(inst, cyc), ValidationError);
}

TEST_CASE("evaluate_cost: boundary identities") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CAPTURE(seed);
    auto inst = random_instance(seed);
    inst.add_offset(1.5);
    const auto all = inst.alive_vertices();
    const auto mst = induced_mst(inst, all);
    REQUIRE(mst);
    Cost edges = 0;
    for (EdgeId e : mst->edges) edges += inst.edge(e).cost;
    CHECK(evaluate_cost(inst, *mst) == doctest::Approx(edges + 1.5));
    const Cost prizes = std::accumulate(all.begin(), all.end(), 0.0,
                                        [&](Cost s, VertexId v) { return s + inst.prize(v); });
    CHECK(evaluate_cost(inst, SteinerTree{{0}, {}}) == doctest::Approx(prizes - inst.prize(0) + 1.5));
  }
}

TEST_CASE("evaluate_cost: any feasible tree is no better than the optimum") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    CAPTURE(seed);
    const auto inst = random_instance(seed, 10, 10);
    const Cost opt = brute_force_opt(inst).optimum;
    const auto all = inst.alive_vertices();
    for (std::size_t k = 1; k <= all.size(); ++k) {
      std::vector<VertexId> prefix(all.begin(), all.begin() + static_cast<long>(k));
      if (auto t = induced_mst(inst, prefix)) CHECK(evaluate_cost(inst, *t) >= opt - 1e-9);
    }
  }
}

TEST_CASE("problem class follows prizes and fixings") {
  auto inst = star7();
  CHECK(inst.problem_class() == ProblemClass::PC);
  inst.set_fixed(0);
  CHECK(inst.problem_class() == ProblemClass::RPC);
  for (VertexId t : inst.terminals()) inst.set_fixed(t);
  CHECK(inst.problem_class() == ProblemClass::SPG);
}

TEST_CASE("restricted_distance: star7 nearest terminals of s2") {
  using namespace star7_ids;
  const auto inst = star7();
  const auto near = nearest_terminals(inst, s2, 3);
  REQUIRE(near.size() == 3);
  std::vector<VertexId> ids;
  for (const auto& td : near) {
    CHECK(td.distance == 3);
    ids.push_back(td.terminal);
  }
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<VertexId>{t1, t3, t5});
}

TEST_CASE("restricted_distance: direct edge and blocked interior terminal") {
  const auto inst = path3();
  CHECK(restricted_pair_distance(inst, 0, 1) == 3);
  auto blocked = make_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 1}, {1, 1}, {2, 1}});
  CHECK(restricted_pair_distance(blocked, 0, 2) == kInfinity);
  const auto rd = restricted_distance(blocked, 0, 1, 1);
  CHECK(rd.between == 1);
  CHECK_THROWS_AS(restricted_distance(blocked, 0, 1, 0), PreconditionError);
}

TEST_CASE("restricted_distance: symmetric and never below the plain distance") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CAPTURE(seed);
    const auto inst = random_instance(seed);
    const auto vs = inst.alive_vertices();
    for (VertexId a : vs) {
      const auto plain = shortest_distances(inst, a);
      for (VertexId b : vs) {
        const Cost ab = restricted_pair_distance(inst, a, b);
        CHECK(ab == restricted_pair_distance(inst, b, a));
        CHECK(ab >= plain[b]);
      }
    }
  }
}

TEST_CASE("induced_mst: disconnected subset yields nothing") {
  const auto inst = path3();
  const std::vector<VertexId> ends{0, 2};
  CHECK_FALSE(induced_mst(inst, ends).has_value());
}

TEST_CASE("instance invariants survive mutation") {
  auto inst = star7();
  inst.remove_vertex(star7_ids::s2);
  inst.check_invariants();
  CHECK(inst.alive_vertex_count() == 6);
  CHECK(inst.alive_edge_count() == 6);
  const EdgeId e = inst.add_edge(0, 6, 4);
  CHECK(e == 9);
  inst.check_invariants();
  CHECK_THROWS(inst.add_edge(0, 0, 1));
}
