#include "steinred/instance.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "steinred/union_find.hpp"

namespace steinred {

std::string format_cost(Cost c) {
  if (c == kInfinity) return "inf";
  if (c == -kInfinity) return "-inf";
  if (c == 0) return "0";
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof(buf), c, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

const char* to_string(ProblemClass c) {
  switch (c) {
    case ProblemClass::PC: return "PC";
    case ProblemClass::RPC: return "RPC";
    case ProblemClass::SPG: return "SPG";
  }
  return "?";
}

PcInstance::PcInstance(std::size_t vertex_count)
    : prizes_(vertex_count, 0.0),
      fixed_(vertex_count, 0),
      alive_(vertex_count, 1),
      adjacency_(vertex_count),
      alive_vertices_(vertex_count) {}

ProblemClass PcInstance::problem_class() const {
  bool any_fixed = false;
  bool any_unfixed = false;
  for (std::size_t v = 0; v < prizes_.size(); ++v) {
    if (!alive_[v]) continue;
    if (fixed_[v]) any_fixed = true;
    else if (prizes_[v] > 0) any_unfixed = true;
  }
  if (!any_fixed) return ProblemClass::PC;
  return any_unfixed ? ProblemClass::RPC : ProblemClass::SPG;
}

std::vector<VertexId> PcInstance::alive_vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_vertices_);
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (alive_[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::vector<EdgeId> PcInstance::alive_edges() const {
  std::vector<EdgeId> out;
  out.reserve(alive_edges_);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].alive) out.push_back(static_cast<EdgeId>(e));
  return out;
}

std::vector<VertexId> PcInstance::terminals() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (is_terminal(static_cast<VertexId>(v))) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::vector<VertexId> PcInstance::fixed_terminals() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (alive_[v] && fixed_[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::vector<VertexId> PcInstance::unfixed_terminals() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (is_unfixed_terminal(static_cast<VertexId>(v))) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::size_t PcInstance::terminal_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (is_terminal(static_cast<VertexId>(v))) ++n;
  return n;
}

Cost PcInstance::unfixed_prize_sum() const {
  Cost sum = 0;
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (alive_[v] && !fixed_[v]) sum += prizes_[v];
  return sum;
}

std::optional<EdgeId> PcInstance::find_edge(VertexId a, VertexId b) const {
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  for (const auto& inc : shorter)
    if (inc.neighbor == target) return inc.edge;
  return std::nullopt;
}

EdgeId PcInstance::add_edge(VertexId a, VertexId b, Cost cost) {
  if (a == b) throw PreconditionError("self-loop on vertex " + std::to_string(a));
  if (!(cost > 0)) throw PreconditionError("non-positive edge cost");
  if (!alive(a) || !alive(b)) throw PreconditionError("edge endpoint is not alive");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{a, b, cost, true});
  adjacency_[a].push_back({b, id});
  adjacency_[b].push_back({a, id});
  ++alive_edges_;
  return id;
}

void PcInstance::set_edge_cost(EdgeId e, Cost cost) {
  if (!(cost > 0)) throw PreconditionError("non-positive edge cost");
  edges_[e].cost = cost;
}

void PcInstance::remove_edge(EdgeId e) {
  Edge& edge = edges_[e];
  if (!edge.alive) return;
  for (VertexId x : {edge.u, edge.v}) {
    auto& adj = adjacency_[x];
    adj.erase(std::find_if(adj.begin(), adj.end(), [e](const Incidence& i) { return i.edge == e; }));
  }
  edge.alive = false;
  --alive_edges_;
}

void PcInstance::remove_vertex(VertexId v) {
  if (!alive_[v]) return;
  while (!adjacency_[v].empty()) remove_edge(adjacency_[v].back().edge);
  alive_[v] = 0;
  fixed_[v] = 0;
  --alive_vertices_;
}

void PcInstance::set_prize(VertexId v, Cost prize) {
  if (prize < 0) throw PreconditionError("negative prize");
  prizes_[v] = prize;
}

void PcInstance::set_fixed(VertexId v) {
  if (!alive_[v]) throw PreconditionError("cannot fix a deleted vertex");
  fixed_[v] = 1;
}

bool PcInstance::connected() const {
  if (alive_vertices_ == 0) return true;
  std::vector<char> seen(alive_.size(), 0);
  std::vector<VertexId> stack;
  for (std::size_t v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) {
      stack.push_back(static_cast<VertexId>(v));
      seen[v] = 1;
      break;
    }
  }
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++reached;
    for (const auto& inc : adjacency_[v]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == alive_vertices_;
}

void PcInstance::check_invariants() const {
  for (std::size_t v = 0; v < prizes_.size(); ++v) {
    if (!(prizes_[v] >= 0)) throw ValidationError("negative prize on vertex " + std::to_string(v));
    if (fixed_[v] && !alive_[v]) throw ValidationError("fixed terminal is deleted");
  }
  std::size_t live = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!edge.alive) continue;
    ++live;
    if (!(edge.cost > 0)) throw ValidationError("non-positive edge cost on edge " + std::to_string(e));
    if (!alive_[edge.u] || !alive_[edge.v]) throw ValidationError("edge incident to a deleted vertex");
    for (VertexId x : {edge.u, edge.v}) {
      const auto& adj = adjacency_[x];
      if (std::none_of(adj.begin(), adj.end(), [&](const Incidence& i) {
            return i.edge == static_cast<EdgeId>(e) && i.neighbor == edge.other(x);
          }))
        throw ValidationError("adjacency is not symmetric for edge " + std::to_string(e));
    }
  }
  if (live != alive_edges_) throw ValidationError("alive edge count out of sync");
}

bool SteinerTree::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SteinerTree::uses(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

void SteinerTree::normalize() {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void validate_tree(const PcInstance& instance, const SteinerTree& tree) {
  if (tree.vertices.empty()) {
    if (instance.alive_vertex_count() == 0) return;
    throw ValidationError("tree is empty");
  }
  if (!std::is_sorted(tree.vertices.begin(), tree.vertices.end()) ||
      std::adjacent_find(tree.vertices.begin(), tree.vertices.end()) != tree.vertices.end())
    throw ValidationError("vertex list is not a set");
  if (!std::is_sorted(tree.edges.begin(), tree.edges.end()) ||
      std::adjacent_find(tree.edges.begin(), tree.edges.end()) != tree.edges.end())
    throw ValidationError("edge list is not a set");
  for (VertexId v : tree.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= instance.vertex_count() || !instance.alive(v))
      throw ValidationError("tree vertex " + std::to_string(v) + " does not exist");
  }
  if (tree.edges.size() + 1 != tree.vertices.size())
    throw ValidationError("edge count is not vertex count - 1");
  UnionFind uf(instance.vertex_count());
  for (EdgeId e : tree.edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= instance.edge_count() || !instance.edge_alive(e))
      throw ValidationError("tree edge " + std::to_string(e) + " does not exist");
    const Edge& edge = instance.edge(e);
    if (!tree.contains(edge.u) || !tree.contains(edge.v))
      throw ValidationError("edge " + std::to_string(e) + " leaves the vertex set");
    if (!uf.unite(static_cast<std::size_t>(edge.u), static_cast<std::size_t>(edge.v)))
      throw ValidationError("tree contains a cycle");
  }
  // n-1 edges and no cycle implies connected.
  for (VertexId f : instance.fixed_terminals())
    if (!tree.contains(f))
      throw ValidationError("fixed terminal " + std::to_string(f) + " is missing");
}

Cost tree_cost_unchecked(const PcInstance& instance, const SteinerTree& tree) {
  Cost sum = instance.offset();
  for (EdgeId e : tree.edges) sum += instance.edge(e).cost;
  std::vector<char> in(instance.vertex_count(), 0);
  for (VertexId v : tree.vertices) in[v] = 1;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v)
    if (instance.alive(static_cast<VertexId>(v)) && !in[v]) sum += instance.prize(static_cast<VertexId>(v));
  return sum;
}

Cost evaluate_cost(const PcInstance& instance, const SteinerTree& tree) {
  validate_tree(instance, tree);
  return tree_cost_unchecked(instance, tree);
}

std::optional<SteinerTree> spanning_tree_of(const PcInstance& instance,
                                            std::span<const EdgeId> edges,
                                            std::span<const VertexId> extra) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](EdgeId a, EdgeId b) {
    return instance.edge(a).cost < instance.edge(b).cost;
  });
  SteinerTree tree;
  tree.vertices.assign(extra.begin(), extra.end());
  for (EdgeId e : sorted) {
    tree.vertices.push_back(instance.edge(e).u);
    tree.vertices.push_back(instance.edge(e).v);
  }
  UnionFind uf(instance.vertex_count());
  for (EdgeId e : sorted) {
    const Edge& edge = instance.edge(e);
    if (uf.unite(static_cast<std::size_t>(edge.u), static_cast<std::size_t>(edge.v))) tree.edges.push_back(e);
  }
  tree.normalize();
  if (!tree.vertices.empty() && tree.edges.size() + 1 != tree.vertices.size()) return std::nullopt;
  return tree;
}

std::optional<SteinerTree> induced_mst(const PcInstance& instance,
                                       std::span<const VertexId> vertices) {
  std::vector<char> in(instance.vertex_count(), 0);
  for (VertexId v : vertices) in[v] = 1;
  std::vector<EdgeId> edges;
  for (VertexId v : vertices)
    for (const auto& inc : instance.incident(v))
      if (in[inc.neighbor] && v < inc.neighbor) edges.push_back(inc.edge);
  return spanning_tree_of(instance, edges, vertices);
}

}  // namespace steinred
