#pragma once

#include <vector>

#include "steinred/events.hpp"
#include "steinred/sap.hpp"
#include "steinred/walk.hpp"

namespace steinred {

struct DualAscentResult {
  Cost lower_bound = 0;  ///< on the arborescence objective
  std::vector<Cost> reduced_costs;
  VertexId root = kNoVertex;
  /// Reduced-cost distance from the root to each vertex.
  std::vector<Cost> root_distance;
  /// Reduced-cost distance from each vertex to the closest non-root terminal.
  std::vector<Cost> terminal_distance;
  int iterations = 0;
};

/// Wong's dual ascent. Repeatedly takes the active terminal with the
/// smallest incoming cut (ties by id), grows its zero-reduced-cost component
/// and saturates the cheapest entering arcs. Throws InfeasibleError if a
/// terminal cannot be reached from the root.
DualAscentResult dual_ascent(const SapInstance& sap);

struct DaReductions {
  std::vector<ReductionEvent> events;
  std::vector<VertexId> fixed;  ///< terminals fixed, in the order found
};

/// Reduced-cost eliminations and terminal fixing on the undirected instance
/// `sap` was built from. `upper_bound` is in undirected objective units
/// (offset included). `reach_sets` are indexed freely; each one certifies
/// that its members imply its source.
DaReductions da_reductions(PcInstance& instance, EventLog& log, const SapInstance& sap,
                           const DualAscentResult& result, Cost upper_bound,
                           const std::vector<ReachSet>& reach_sets);

}  // namespace steinred
