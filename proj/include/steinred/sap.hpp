#pragma once

#include <vector>

#include "steinred/instance.hpp"

namespace steinred {

/// Where an arc of a transformed instance comes from.
enum class ArcOrigin {
  Forward,   ///< edge `ref` traversed from its `u` end
  Backward,  ///< edge `ref` traversed from its `v` end
  Root,      ///< artificial root to terminal `ref`
  Sink,      ///< terminal `ref` to the collector vertex
  Prize,     ///< paying the prize of terminal `ref`
  Zero,      ///< terminal `ref` to its copy
};

struct Arc {
  VertexId tail;
  VertexId head;
  Cost cost;
  ArcOrigin origin;
  int ref;  ///< edge id for Forward/Backward, original terminal otherwise
};

enum class Transformation { PrizeCollecting, Rooted };

/// Directed Steiner arborescence instance. Vertices below
/// `original_vertex_count` keep the ids of the undirected instance.
struct SapInstance {
  Transformation kind = Transformation::PrizeCollecting;
  std::size_t vertex_count = 0;
  std::size_t original_vertex_count = 0;
  std::vector<Arc> arcs;
  std::vector<VertexId> terminals;  ///< sorted, includes the root
  VertexId root = kNoVertex;
  VertexId collector = kNoVertex;     ///< the vertex collecting prize arcs (first transformation)
  VertexId prize_source = kNoVertex;  ///< tail of the prize arcs (second transformation)
  Cost big_m = 0;
  Cost offset = 0;  ///< offset of the undirected instance
  /// Per vertex: original terminal for a terminal copy, kNoVertex otherwise.
  std::vector<VertexId> copy_of;
  /// Per original vertex: id of its prize arc, -1 if none.
  std::vector<int> prize_arc;
  std::vector<std::vector<int>> out_arcs;
  std::vector<std::vector<int>> in_arcs;

  bool is_terminal(VertexId v) const;
  /// Converts an arborescence cost into the undirected objective.
  Cost to_pc_objective(Cost sap_cost) const { return sap_cost - big_m + offset; }
  Cost to_sap_objective(Cost pc_cost) const { return pc_cost + big_m - offset; }
};

/// Artificial root with arcs of weight M (sum of prizes) to every terminal,
/// terminal copies, and a collector vertex paying prizes. Needs an instance
/// without fixed terminals and at least one terminal.
SapInstance transform_pc(const PcInstance& instance);

/// Rooted at the fixed terminal `tq`; prize arcs leave the fixed terminal
/// `tp`. Unfixed terminals get copies; no big M is involved.
SapInstance transform_rpc(const PcInstance& instance, VertexId tp, VertexId tq);

/// Throws ValidationError unless `arcs` form an arborescence from the root
/// that reaches every terminal.
void validate_arborescence(const SapInstance& sap, const std::vector<int>& arcs);

Cost arborescence_cost(const SapInstance& sap, const std::vector<int>& arcs);

/// Tree spanned by the edge arcs together with the root-side terminal. A
/// terminal is in the tree exactly when its prize arc is unused, provided the
/// arborescence pays no prize for a vertex it reaches (otherwise the tree is
/// cheaper than the arborescence). Two root arcs are rejected since their
/// edge arcs cannot form one tree.
SteinerTree backmap_solution(const SapInstance& sap, const std::vector<int>& arcs);

/// The cheapest arborescence representing `tree`; its cost maps back to
/// evaluate_cost(tree).
std::vector<int> arborescence_of(const SapInstance& sap, const PcInstance& instance,
                                 const SteinerTree& tree);

}  // namespace steinred
