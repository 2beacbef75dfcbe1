#include <algorithm>

#include "doctest.h"
#include "steinred/oracle.hpp"
#include "steinred/regions.hpp"
#include "support.hpp"

using namespace steinred;
using namespace steinred::testing;

namespace {

bool deletes_vertex(const std::vector<ReductionEvent>& events, VertexId v) {
  return std::any_of(events.begin(), events.end(), [&](const ReductionEvent& e) {
    return e.kind == EventKind::DeleteVertex && e.vertex == v;
  });
}

}  // namespace

TEST_CASE("regions: star7 Voronoi radii") {
  const auto regions = voronoi_regions(star7());
  CHECK(regions.sorted_radii() == std::vector<Cost>{1, 1, 2, 3, 3});
  CHECK(regions.objective() == 4);
}

TEST_CASE("regions: star7 improved decomposition") {
  using namespace star7_ids;
  const auto inst = star7();
  const auto regions = build_regions(inst, default_improvement_rounds(inst));
  CHECK(regions.sorted_radii() == std::vector<Cost>{1, 1, 3, 3, 3});
  CHECK(regions.owner[s1] == t1);
  CHECK(regions.owner[s2] == t1);
  CHECK(regions.owner[t1] == t1);
}

TEST_CASE("regions: single terminal owns everything") {
  const auto inst = path3();
  const auto regions = build_regions(inst, 10);
  CHECK(regions.terminals == std::vector<VertexId>{1});
  CHECK(std::all_of(regions.owner.begin(), regions.owner.end(), [](VertexId o) { return o == 1; }));
  CHECK(regions.radius[1] == 4);
}

TEST_CASE("vertex_bound: star7 s2") {
  using namespace star7_ids;
  const auto inst = star7();
  CHECK(vertex_bound(inst, voronoi_regions(inst), s2) == 10);
  const auto improved = build_regions(inst, default_improvement_rounds(inst));
  CHECK(vertex_bound(inst, improved, s2) == 11);
  CHECK(degree3_bound(inst, improved, s2) == 11);
}

TEST_CASE("vertex_bound: preconditions and unreachable terminals") {
  using namespace star7_ids;
  const auto inst = star7();
  const auto regions = voronoi_regions(inst);
  CHECK_THROWS_AS(vertex_bound(inst, regions, t1), PreconditionError);
  // Only one terminal reachable without passing another terminal.
  const auto fenced = make_instance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, {{1, 3}, {2, 3}, {3, 3}});
  CHECK(vertex_bound(fenced, voronoi_regions(fenced), 0) == kInfinity);
}

TEST_CASE("degree3_bound: three terminals sum the distances") {
  const auto star = make_instance(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 4}}, {{1, 9}, {2, 9}, {3, 9}});
  CHECK(degree3_bound(star, voronoi_regions(star), 0) == 7);
  const auto two = make_instance(3, {{0, 1, 1}, {0, 2, 2}}, {{1, 9}, {2, 9}});
  CHECK_THROWS_AS(degree3_bound(two, voronoi_regions(two), 0), PreconditionError);
}

TEST_CASE("apply_bound_eliminations: star7 with improved regions deletes s2") {
  using namespace star7_ids;
  auto inst = star7();
  EventLog log(inst);
  const auto opt = brute_force_opt(inst);
  REQUIRE_FALSE(opt.tree.contains(s2));
  const auto regions = build_regions(inst, default_improvement_rounds(inst));
  const auto events = apply_bound_eliminations(inst, log, regions, 10, &opt.tree);
  CHECK(deletes_vertex(events, s2));
  CHECK_FALSE(inst.alive(s2));
  CHECK(brute_force_opt(inst).optimum == 10);
}

TEST_CASE("apply_bound_eliminations: star7 with Voronoi regions keeps s2") {
  using namespace star7_ids;
  auto inst = star7();
  EventLog log(inst);
  const auto events = apply_bound_eliminations(inst, log, voronoi_regions(inst), 10, nullptr);
  CHECK_FALSE(deletes_vertex(events, s2));
  CHECK(brute_force_opt(inst).optimum == 10);
}

TEST_CASE("pseudo-elimination of a degree-3 vertex") {
  // Vertex 4 is the cheaper hub, so 0 has degree 3 in no optimum.
  auto inst = make_instance(5, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {4, 1, 1.5}, {4, 2, 1.5}, {4, 3, 1.5}},
                            {{1, 9}, {2, 9}, {3, 9}});
  const Cost before = brute_force_opt(inst).optimum;
  EventLog log(inst);
  const auto& ev = apply::pseudo_eliminate(inst, log, 0);
  CHECK(ev.replacements.size() == 3);
  CHECK(inst.alive_vertex_count() == 4);
  CHECK(inst.alive_edge_count() == 6);
  CHECK(brute_force_opt(inst).optimum == before);
}

TEST_CASE("improved regions never lower the objective") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    const auto inst = random_instance(seed);
    const auto v = voronoi_regions(inst);
    const auto b = build_regions(inst, default_improvement_rounds(inst));
    CHECK(b.objective() >= v.objective());
    for (VertexId x : inst.alive_vertices()) CHECK(b.owner[x] != kNoVertex);
  }
}

TEST_CASE("vertices above the region bounds are in no optimum") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    const auto inst = random_instance(seed);
    if (inst.terminal_count() < 3) continue;
    const auto opt = brute_force_opt(inst, true);
    const auto regions = build_regions(inst, default_improvement_rounds(inst));
    for (VertexId v : inst.alive_vertices()) {
      if (inst.is_terminal(v)) continue;
      if (!(vertex_bound(inst, regions, v) > opt.optimum + 1e-9)) continue;
      for (const auto& set : opt.optimal_sets) CHECK_FALSE(std::binary_search(set.begin(), set.end(), v));
    }
  }
}

TEST_CASE("bound eliminations preserve the optimum") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    auto inst = random_instance(seed);
    const auto opt = brute_force_opt(inst);
    if (inst.terminal_count() < 2) continue;
    EventLog log(inst);
    const auto regions = build_regions(inst, default_improvement_rounds(inst));
    apply_bound_eliminations(inst, log, regions, opt.optimum, seed % 2 ? &opt.tree : nullptr);
    inst.check_invariants();
    CHECK(brute_force_opt(inst).optimum == doctest::Approx(opt.optimum).epsilon(1e-12));
  }
}
