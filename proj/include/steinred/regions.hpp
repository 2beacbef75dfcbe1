#pragma once

#include <vector>

#include "steinred/events.hpp"
#include "steinred/instance.hpp"

namespace steinred {

/// Connected partition of the alive vertices with one terminal per part.
struct TerminalRegions {
  /// Owning terminal per vertex id; kNoVertex for dead vertices.
  std::vector<VertexId> owner;
  /// Radius per vertex id, meaningful for the owning terminals only.
  std::vector<Cost> radius;
  /// Region owners in ascending id order.
  std::vector<VertexId> terminals;

  /// Radii of all regions in ascending order.
  std::vector<Cost> sorted_radii() const;
  /// Sum of the `k` smallest radii (0 for k <= 0).
  Cost smallest_radii_sum(long k) const;
  /// Sum of the s-2 smallest radii, the quantity the local search raises.
  Cost objective() const { return smallest_radii_sum(static_cast<long>(terminals.size()) - 2); }
};

/// Nearest-terminal partition; ties go to the smaller terminal id.
TerminalRegions voronoi_regions(const PcInstance& instance);

/// Voronoi partition improved by moving boundary vertices between regions
/// while both stay connected and the objective strictly grows. At most
/// `improvement_rounds` moves are made.
TerminalRegions build_regions(const PcInstance& instance, int improvement_rounds);
int default_improvement_rounds(const PcInstance& instance);

/// Radius of `t`'s region: min(prize, distance to the closest vertex outside).
Cost region_radius(const PcInstance& instance, const std::vector<VertexId>& owner, VertexId t);

/// Lower bound on any solution containing the non-terminal `v` (no offset).
Cost vertex_bound(const PcInstance& instance, const TerminalRegions& regions, VertexId v);
/// Lower bound on any solution in which `v` has degree at least 3.
Cost degree3_bound(const PcInstance& instance, const TerminalRegions& regions, VertexId v);

/// Deletes non-terminals whose vertex bound exceeds `upper_bound` and
/// pseudo-eliminates (degree <= 4) those whose degree-3 bound does. With an
/// incumbent of cost `upper_bound`, ties qualify for vertices it excludes.
/// Bounds are compared with the offset added. Returns the appended events.
std::vector<ReductionEvent> apply_bound_eliminations(PcInstance& instance, EventLog& log,
                                                     const TerminalRegions& regions, Cost upper_bound,
                                                     const SteinerTree* incumbent);

}  // namespace steinred
