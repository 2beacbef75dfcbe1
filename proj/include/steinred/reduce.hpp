#pragma once

#include <vector>

#include "steinred/dual_ascent.hpp"
#include "steinred/events.hpp"
#include "steinred/instance.hpp"
#include "steinred/sap.hpp"

namespace steinred {

struct ReduceConfig {
  int max_rounds = 8;
  /// Relaxation budget per walk search; non-positive means 10 |E|.
  long walk_budget = -1;
  bool walk_tests = true;
  bool bound_tests = true;
  bool dual_ascent = true;
  bool probing = true;
  /// Also apply reductions that keep only some optimum.
  bool equality = false;
  int heuristic_starts = 5;
  int heuristic_rounds = 3;
  int max_roots = 4;
  int probe_limit = 10;
  /// Region improvement moves; negative means 2 |V|.
  int region_rounds = -1;
};

/// Bounds carried through a reduction run. Objective values are in the
/// units of the instance the log started from (offset included).
struct ReduceState {
  /// Instance the log started from; when set, incumbents are priced on it.
  const PcInstance* original = nullptr;
  Cost upper_bound = kInfinity;
  /// Best known tree on the log's base instance (empty if none yet).
  SteinerTree incumbent;
  /// Best known tree on the current reduced instance, if still valid.
  SteinerTree local_incumbent;
  Cost local_incumbent_cost = kInfinity;
  /// Best dual-ascent bound seen for the current instance.
  Cost lower_bound = -kInfinity;
  int rounds = 0;
};

/// Offers a tree of the reduced instance as a new incumbent.
void offer_incumbent(const PcInstance& instance, const EventLog& log, ReduceState& state,
                     const SteinerTree& tree);

/// Dual-ascent runs with their bounds in objective units.
struct BoundRun {
  SapInstance sap;
  DualAscentResult result;
  Cost bound;
};

/// One run of the first transformation when nothing is fixed, otherwise one
/// rooted run per fixed terminal (highest prize first, ties by id), at most
/// `max_roots`. Empty for instances without terminals. Throws
/// InfeasibleError when fixed terminals cannot be connected.
std::vector<BoundRun> dual_bounds(const PcInstance& instance, int max_roots);

/// Best lower bound of dual_bounds; the offset for instances without
/// terminals, infinity for infeasible ones.
Cost dual_lower_bound(const PcInstance& instance, int max_roots);

/// Degree and component tests: isolated and leaf non-terminals, degree-2
/// non-terminals, terminal-free components, single-terminal instances and
/// leaf fixed terminals. Returns the number of events added.
std::size_t basic_reductions(PcInstance& instance, EventLog& log);

/// Runs rounds of all reductions on `instance` in place.
void reduce_in_place(PcInstance& instance, EventLog& log, ReduceState& state, const ReduceConfig& config);

struct ReduceResult {
  PcInstance instance;
  EventLog log;
  Cost upper_bound = kInfinity;
  /// Incumbent on the input instance.
  SteinerTree incumbent;
  Cost lower_bound = -kInfinity;
  int rounds = 0;
};

ReduceResult reduce_loop(const PcInstance& instance, const ReduceConfig& config = {});

/// Tentatively fixes and deletes the unfixed terminal `t`; a side whose
/// bound exceeds `upper_bound` is ruled out for good. Applies and returns
/// the resulting events (none if neither side is ruled out).
std::vector<ReductionEvent> probe_vertex(PcInstance& instance, EventLog& log, VertexId t, Cost upper_bound,
                                         int max_roots = 4);

}  // namespace steinred
