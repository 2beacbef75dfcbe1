#include <string>

#include "doctest.h"
#include "steinred/events.hpp"
#include "steinred/oracle.hpp"
#include "support.hpp"

using namespace steinred;
using namespace steinred::testing;

TEST_CASE("retransform_solution: empty log is the identity") {
  const auto inst = star7();
  const auto opt = brute_force_opt(inst);
  CHECK(retransform_solution(EventLog(inst), opt.tree) == opt.tree);
}

TEST_CASE("retransform_solution: replacement edge expands to its parents") {
  // a - v - b with a pricier direct edge a - b.
  auto inst = make_instance(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 9}}, {{0, 6}, {2, 6}});
  const auto base = inst;
  EventLog log(inst);
  const auto& ev = apply::pseudo_eliminate(inst, log, 1);
  REQUIRE(ev.replacements.size() == 1);
  CHECK(ev.removed == std::vector<EdgeId>{2});
  const EdgeId created = ev.replacements[0].created;
  CHECK(inst.edge(created).cost == 5);
  SteinerTree reduced{{0, 2}, {created}};
  const auto back = retransform_solution(log, reduced);
  CHECK(back.vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(back.edges == std::vector<EdgeId>{0, 1});
  CHECK(evaluate_cost(base, back) == evaluate_cost(inst, reduced));
}

TEST_CASE("pseudo_eliminate: cheaper parallel edge wins") {
  auto inst = make_instance(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 4}}, {{0, 6}, {2, 6}});
  EventLog log(inst);
  const auto& ev = apply::pseudo_eliminate(inst, log, 1);
  CHECK(ev.replacements.empty());
  CHECK(inst.alive_edge_count() == 1);
  CHECK(inst.edge(2).alive);
  CHECK_THROWS_AS(apply::pseudo_eliminate(inst, log, 0), PreconditionError);
}

TEST_CASE("delete_vertex moves the prize into the offset") {
  auto inst = heavy4();
  EventLog log(inst);
  apply::delete_vertex(inst, log, 3);
  CHECK(inst.offset() == 2.5);
  CHECK_FALSE(inst.alive(3));
  auto rooted = heavy4();
  rooted.set_fixed(0);
  EventLog log2(rooted);
  CHECK_THROWS_AS(apply::delete_vertex(rooted, log2, 0), PreconditionError);
}

TEST_CASE("contract_leaf merges a fixed leaf into its neighbour") {
  auto inst = heavy4();
  inst.set_fixed(0);
  inst.set_fixed(3);
  const auto base = inst;
  EventLog log(inst);
  apply::contract_leaf(inst, log, 0);
  CHECK_FALSE(inst.alive(0));
  CHECK(inst.fixed(1));
  CHECK(inst.offset() == 0.6);
  const auto reduced = brute_force_opt(inst);
  CHECK(reduced.optimum == doctest::Approx(brute_force_opt(base).optimum));
  const auto back = retransform_solution(log, reduced.tree);
  CHECK(back.contains(0));
  CHECK(evaluate_cost(base, back) == doctest::Approx(reduced.optimum));
}

TEST_CASE("event log serialization") {
  auto inst = make_instance(4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 9}, {2, 3, 1}}, {{0, 6}, {2, 6}, {3, 0.5}});
  EventLog log(inst);
  apply::delete_edge(inst, log, 3);
  apply::delete_vertex(inst, log, 3, Safety::SomeOptimum);
  apply::pseudo_eliminate(inst, log, 1);
  apply::fix_terminal(inst, log, 0);
  apply::add_offset(inst, log, 1.5);
  CHECK(log.serialize() ==
        "DeleteEdge all 3 0\n"
        "DeleteVertex some 3 0.5\n"
        "PseudoEliminate all 1 1 4 0 1 1 2 0\n"
        "FixTerminal all 0 0\n"
        "OffsetAdd all 1.5\n");
  CHECK(log.count(EventKind::DeleteVertex) == 1);
  CHECK(inst.offset() == 2.0);
}
