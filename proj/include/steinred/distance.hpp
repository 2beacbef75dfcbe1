#pragma once

#include <vector>

#include "steinred/instance.hpp"

namespace steinred {

struct TerminalDistance {
  VertexId terminal;
  Cost distance;

  friend bool operator==(const TerminalDistance&, const TerminalDistance&) = default;
};

/// Plain single-source shortest path distances over alive vertices.
std::vector<Cost> shortest_distances(const PcInstance& instance, VertexId source);

/// Distance between `a` and `b` in the graph induced by all vertices except
/// the terminals other than `a` and `b`. Infinity if unreachable.
Cost restricted_pair_distance(const PcInstance& instance, VertexId a, VertexId b);

/// The k nearest terminals of `v` (excluding `v` itself) with respect to the
/// restricted distance: paths may not pass through any terminal in their
/// interior. Sorted ascending by distance, ties by vertex id.
std::vector<TerminalDistance> nearest_terminals(const PcInstance& instance, VertexId v,
                                                std::size_t k);

struct RestrictedDistances {
  Cost between = kInfinity;
  std::vector<TerminalDistance> nearest;
};

RestrictedDistances restricted_distance(const PcInstance& instance, VertexId vi, VertexId vj,
                                        std::size_t k);

}  // namespace steinred
