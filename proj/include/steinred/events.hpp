#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "steinred/instance.hpp"

namespace steinred {

enum class EventKind { DeleteEdge, DeleteVertex, FixTerminal, ContractEdge, PseudoEliminate, OffsetAdd };

/// Which optima a reduction is guaranteed to keep.
enum class Safety { AllOptima, SomeOptimum };

const char* to_string(EventKind kind);
const char* to_string(Safety safety);

/// A new edge standing for the path `first`, `via`, `second`.
struct Replacement {
  EdgeId created = kNoEdge;
  EdgeId first = kNoEdge;
  EdgeId second = kNoEdge;

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

/// One reduction step.
///
///  - DeleteEdge: `edge`.
///  - DeleteVertex: `vertex`; `cost` is the prize moved into the offset.
///  - FixTerminal: `vertex`.
///  - ContractEdge: `vertex` merged into `target` along `edge`; `cost` is
///    the edge cost moved into the offset.
///  - PseudoEliminate: `vertex` replaced by `replacements`; `removed` lists
///    edges dropped because a cheaper parallel edge exists.
///  - OffsetAdd: `cost`.
struct ReductionEvent {
  EventKind kind = EventKind::OffsetAdd;
  Safety safety = Safety::AllOptima;
  VertexId vertex = kNoVertex;
  VertexId target = kNoVertex;
  EdgeId edge = kNoEdge;
  Cost cost = 0;
  std::vector<Replacement> replacements;
  std::vector<EdgeId> removed;

  friend bool operator==(const ReductionEvent&, const ReductionEvent&) = default;
};

/// Ordered reductions applied to one instance. The log remembers the edge
/// table of the instance it started from, which is all that is needed to
/// map a reduced solution back.
class EventLog {
 public:
  EventLog() = default;
  explicit EventLog(const PcInstance& base);

  const std::vector<ReductionEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  /// Number of vertex slots and edge table of the instance the log started from.
  std::size_t base_vertex_count() const { return base_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void push(ReductionEvent event);
  /// Records an edge created by a reduction so it can be expanded later.
  void note_edge(EdgeId id, const Edge& edge);
  void append(const EventLog& other);

  std::size_t count(EventKind kind) const;

  /// One event per line: `<kind> <safety> <fields...>`.
  std::string serialize() const;

 private:
  std::size_t base_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<ReductionEvent> events_;
};

/// Mutating reductions that also record themselves in `log`.
namespace apply {

void delete_edge(PcInstance& instance, EventLog& log, EdgeId e, Safety safety = Safety::AllOptima);
/// Removes `v` and moves its prize into the offset.
void delete_vertex(PcInstance& instance, EventLog& log, VertexId v, Safety safety = Safety::AllOptima);
void fix_terminal(PcInstance& instance, EventLog& log, VertexId v, Safety safety = Safety::AllOptima);
/// Merges the degree-1 fixed terminal `f` into its only neighbour, which
/// becomes fixed; the edge cost moves into the offset.
void contract_leaf(PcInstance& instance, EventLog& log, VertexId f);
/// Replaces `v` by edges between each pair of its neighbours. A replacement
/// no cheaper than an existing parallel edge is dropped, otherwise the
/// existing edge is. `v` must have zero prize and not be fixed.
const ReductionEvent& pseudo_eliminate(PcInstance& instance, EventLog& log, VertexId v,
                                 Safety safety = Safety::AllOptima);
void add_offset(PcInstance& instance, EventLog& log, Cost c);

}  // namespace apply

/// Maps a tree of the reduced instance back through `log`, yielding a tree
/// on the instance the log started from. Replacement edges are expanded into
/// their parents; if that closes a cycle the cheapest spanning tree of the
/// expanded edges is kept, so the cost never rises.
SteinerTree retransform_solution(const EventLog& log, const SteinerTree& tree);

}  // namespace steinred
