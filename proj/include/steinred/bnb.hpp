#pragma once

#include <array>
#include <string>

#include "steinred/events.hpp"
#include "steinred/instance.hpp"
#include "steinred/reduce.hpp"

namespace steinred {

struct SolveConfig {
  double time_limit = 1e300;  ///< seconds
  double gap = 1e-6;          ///< relative
  long node_limit = -1;       ///< negative: unlimited
  ReduceConfig root_reduce{};
  ReduceConfig node_reduce = light_reduce();

  static ReduceConfig light_reduce() {
    ReduceConfig c;
    c.max_rounds = 3;
    c.probing = false;
    c.heuristic_starts = 1;
    c.heuristic_rounds = 1;
    return c;
  }
};

struct SolveStats {
  long nodes = 0;
  int max_depth = 0;
  double seconds = 0;
  std::size_t edges_before = 0;  ///< alive edges of the input
  std::size_t edges_after = 0;   ///< alive edges after root reduction
  std::array<std::size_t, 6> reductions{};  ///< root events by EventKind
  Cost root_lower_bound = -kInfinity;

  std::size_t total_reductions() const;
  /// Key-value lines: nodes, time, LB, UB, reductions by kind.
  std::string to_text(Cost lower, Cost upper) const;
};

struct SolveResult {
  SteinerTree tree;  ///< on the input instance
  Cost lower = -kInfinity;
  Cost upper = kInfinity;
  bool optimal = false;
  SolveStats stats;
};

/// Best-first branch and bound on vertices with reductions and dual-ascent
/// bounds at every node. The returned tree is re-priced on `instance`.
SolveResult solve(const PcInstance& instance, const SolveConfig& config = {});

}  // namespace steinred
