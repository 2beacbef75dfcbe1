#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "steinred/instance.hpp"

namespace steinred {

/// A walk: `vertices[i]` and `vertices[i+1]` are joined by `edges[i]`.
struct PcWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId first() const { return vertices.front(); }
  VertexId last() const { return vertices.back(); }

  friend bool operator==(const PcWalk&, const PcWalk&) = default;
};

/// Throws ValidationError unless consecutive vertices are joined by the
/// listed edges and no terminal or endpoint occurs twice.
void validate_walk(const PcInstance& instance, const PcWalk& walk);

struct WalkLengths {
  Cost cost;         ///< edge costs minus interior prizes
  Cost length;       ///< worst subwalk cost between breakpoints
  Cost left_length;  ///< worst prefix cost ending at a breakpoint
};

/// Breakpoints are terminals and the two endpoints. Fixed terminals count
/// with infinite prize. Validates the walk first.
WalkLengths prize_constrained_length(const PcInstance& instance, const PcWalk& walk);

/// Result of a heuristic walk search. `value` is infinite when nothing was
/// found; otherwise it is the recomputed length of `witness`.
struct WalkBound {
  Cost value = kInfinity;
  PcWalk witness;

  bool found() const { return value < kInfinity; }
};

inline constexpr int kReinsertLimit = 4;

/// Default relaxation budget for one search: 10 |E|.
long default_edge_budget(const PcInstance& instance);

/// Upper bound on the prize-constrained distance between `vi` and `vj` that
/// is strictly below `cap` (or at most `cap` when `allow_equal`). Both
/// directions are searched and the smaller bound returned. `skip_edge` is
/// ignored by the search.
WalkBound dpc_upper_bound(const PcInstance& instance, VertexId vi, VertexId vj, Cost cap,
                          long edge_budget, EdgeId skip_edge = kNoEdge, bool allow_equal = false);

struct EdgeDeletion {
  EdgeId edge;
  bool equality;  ///< qualified only at equality: keeps some optimum, not all
};

/// Edges whose endpoints are joined by a walk of smaller prize-constrained
/// length, found with the edge itself removed. With `equality_mode` at most
/// one equality-qualified edge is reported. Sorted by edge id.
std::vector<EdgeDeletion> edge_deletion_pass(const PcInstance& instance, long edge_budget,
                                             bool equality_mode);

/// Vertices certified to satisfy d^-_pc(source, v) < p(source), each with a
/// stored witness walk.
class ReachSet {
 public:
  struct Record {
    VertexId vertex;
    EdgeId via;
    int parent;
  };

  ReachSet() = default;
  ReachSet(VertexId source, Cost threshold, std::vector<Record> records,
           std::vector<std::pair<VertexId, int>> members, std::vector<Cost> values = {});

  VertexId source() const { return source_; }
  Cost threshold() const { return threshold_; }
  const std::vector<VertexId>& members() const { return member_ids_; }
  bool contains(VertexId v) const;
  PcWalk witness(VertexId member) const;
  /// Certified left-rooted bound for `member`; below threshold().
  Cost bound(VertexId member) const;

 private:
  VertexId source_ = kNoVertex;
  Cost threshold_ = 0;
  std::vector<Record> records_;
  std::vector<std::pair<VertexId, int>> members_;  // sorted by vertex
  std::vector<VertexId> member_ids_;
  std::vector<Cost> values_;  // parallel to members_
};

/// Signed-label search from a terminal with threshold p(t0).
ReachSet left_reach_set(const PcInstance& instance, VertexId t0, long edge_budget);

/// Receives every finite bound handed out by dpc_upper_bound
/// (`left_rooted` false) and every reach-set member (`left_rooted` true).
using WalkObserver =
    std::function<void(const PcInstance&, const PcWalk&, Cost value, bool left_rooted)>;

/// Installs a process-wide observer; an empty function removes it.
void set_walk_observer(WalkObserver observer);

/// True iff every optimal solution containing `vj` also contains the source.
bool implies_containment(const ReachSet& reach, VertexId vj);

}  // namespace steinred
