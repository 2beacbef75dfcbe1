#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steinred/types.hpp"

namespace steinred {

enum class ProblemClass { PC, RPC, SPG };

const char* to_string(ProblemClass c);

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  Cost cost = 0;
  bool alive = false;

  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Undirected prize-collecting instance.
///
/// Vertex and edge ids are stable: deleting an element only marks it dead, and
/// new edges always receive fresh ids. Incidence lists are kept sorted by edge
/// id so that traversal order does not depend on the mutation history.
///
/// A vertex is a *terminal* if it is alive and has a positive prize or is
/// fixed. Fixed terminals behave as if their prize were infinite.
class PcInstance {
 public:
  PcInstance() = default;
  explicit PcInstance(std::size_t vertex_count);

  std::size_t vertex_count() const { return prizes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t alive_vertex_count() const { return alive_vertices_; }
  std::size_t alive_edge_count() const { return alive_edges_; }

  bool alive(VertexId v) const { return alive_[v] != 0; }
  bool edge_alive(EdgeId e) const { return edges_[e].alive; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  Cost prize(VertexId v) const { return prizes_[v]; }
  bool fixed(VertexId v) const { return fixed_[v] != 0; }
  bool is_terminal(VertexId v) const {
    return alive(v) && (fixed(v) || prizes_[v] > 0);
  }
  bool is_unfixed_terminal(VertexId v) const {
    return alive(v) && !fixed(v) && prizes_[v] > 0;
  }
  Cost effective_prize(VertexId v) const { return fixed(v) ? kInfinity : prizes_[v]; }
  Cost offset() const { return offset_; }

  ProblemClass problem_class() const;

  std::vector<VertexId> alive_vertices() const;
  std::vector<EdgeId> alive_edges() const;
  std::vector<VertexId> terminals() const;
  std::vector<VertexId> fixed_terminals() const;
  std::vector<VertexId> unfixed_terminals() const;
  std::size_t terminal_count() const;
  /// Sum of prizes over alive, unfixed vertices.
  Cost unfixed_prize_sum() const;

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  EdgeId add_edge(VertexId a, VertexId b, Cost cost);
  void set_edge_cost(EdgeId e, Cost cost);
  void remove_edge(EdgeId e);
  /// Removes the vertex and its incident edges; the offset is not touched.
  void remove_vertex(VertexId v);
  void set_prize(VertexId v, Cost prize);
  void set_fixed(VertexId v);
  void add_offset(Cost c) { offset_ += c; }

  /// Connectivity over alive vertices.
  bool connected() const;
  /// Throws ValidationError on any broken structural invariant.
  void check_invariants() const;

  friend bool operator==(const PcInstance&, const PcInstance&) = default;

 private:
  std::vector<Cost> prizes_;
  std::vector<char> fixed_;
  std::vector<char> alive_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t alive_vertices_ = 0;
  std::size_t alive_edges_ = 0;
  Cost offset_ = 0;
};

/// A candidate solution: vertex and edge ids, both kept sorted.
struct SteinerTree {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool contains(VertexId v) const;
  bool uses(EdgeId e) const;
  void normalize();

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

/// Throws ValidationError naming the first violated invariant.
void validate_tree(const PcInstance& instance, const SteinerTree& tree);

/// Edge costs plus foregone prizes plus offset. Validates first.
Cost evaluate_cost(const PcInstance& instance, const SteinerTree& tree);

/// Same sum without validation; used on hot paths with trusted trees.
Cost tree_cost_unchecked(const PcInstance& instance, const SteinerTree& tree);

/// Minimum spanning tree of the subgraph induced by `vertices`, or nullopt
/// if that subgraph is disconnected.
std::optional<SteinerTree> induced_mst(const PcInstance& instance,
                                       std::span<const VertexId> vertices);

/// Spanning tree of minimum cost using only `edges` (all alive), covering the
/// endpoints plus `extra` vertices. nullopt if disconnected.
std::optional<SteinerTree> spanning_tree_of(const PcInstance& instance,
                                            std::span<const EdgeId> edges,
                                            std::span<const VertexId> extra);

}  // namespace steinred
