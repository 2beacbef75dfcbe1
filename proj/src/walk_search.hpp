#pragma once

// Modified Dijkstra over walk labels shared by the walk-based reductions and
// the constructive heuristic.

#include <span>
#include <vector>

#include "steinred/instance.hpp"
#include "steinred/walk.hpp"

namespace steinred::detail {

enum class PrizeMode {
  Clamped,  ///< terminal labels become max(label - p, 0)
  Signed,   ///< terminal labels become label - p
};

struct SearchRecord {
  VertexId vertex;
  EdgeId via;
  int parent;
  Cost pre;    ///< label on arrival, before any prize is subtracted
  Cost label;  ///< label used for ordering and further relaxation
  Cost peak;   ///< max `pre` over breakpoint ancestors (excluding this one)
};

struct WalkSearchParams {
  VertexId source = kNoVertex;
  Cost cap = kInfinity;
  bool allow_equal = false;
  PrizeMode mode = PrizeMode::Clamped;
  EdgeId skip_edge = kNoEdge;
  long budget = 0;
  int reinsert_limit = kReinsertLimit;
  /// Discount applied when passing a fixed terminal; infinite keeps the
  /// exact semantics, zero makes the heuristic order them by distance.
  Cost fixed_prize = kInfinity;
  /// Single target vertex, or a mask (size vertex_count) of targets.
  VertexId target = kNoVertex;
  std::span<const char> target_mask;
};

class WalkSearch {
 public:
  WalkSearch(const PcInstance& instance, WalkSearchParams params);

  void run();

  /// Record index of the settled target, -1 if none.
  int hit() const { return hit_; }
  /// Best record per vertex, -1 if never labelled.
  const std::vector<int>& best() const { return best_; }
  const std::vector<SearchRecord>& records() const { return records_; }
  /// max(peak, pre) of a record: the length bound certified by its walk.
  Cost certified(int record) const;
  PcWalk walk_to(int record) const;

 private:
  bool is_target(VertexId v) const;
  bool is_breakpoint(VertexId v) const;

  const PcInstance& instance_;
  WalkSearchParams params_;
  std::vector<SearchRecord> records_;
  std::vector<int> best_;
  int hit_ = -1;
};

}  // namespace steinred::detail
