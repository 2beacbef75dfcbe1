#include "steinred/heuristics.hpp"

#include <algorithm>
#include <queue>

#include "steinred/walk.hpp"
#include "walk_search.hpp"

namespace steinred {

namespace {

constexpr Cost kFixedPriority = 1e15;

struct Connection {
  bool found = false;
  Cost gain = kInfinity;  ///< cost change from attaching, before pruning
  PcWalk walk;
};

/// Cheapest certified walk from `t` to any vertex marked in `in_tree`.
Connection connect(const PcInstance& instance, VertexId t, const std::vector<char>& in_tree, long budget) {
  detail::WalkSearchParams params;
  params.source = t;
  params.cap = instance.effective_prize(t);
  params.mode = detail::PrizeMode::Signed;
  params.budget = budget;
  params.target_mask = std::span<const char>(in_tree.data(), in_tree.size());
  params.fixed_prize = 0;
  detail::WalkSearch search(instance, params);
  search.run();
  Connection out;
  if (search.hit() < 0) return out;
  out.found = true;
  out.walk = search.walk_to(search.hit());
  const Cost label = search.records()[search.hit()].label;
  // Fixed terminals go first, nearest first.
  out.gain = instance.fixed(t) ? label - kFixedPriority : label - instance.prize(t);
  return out;
}

struct Growing {
  std::vector<char> in_tree;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  void add_vertex(VertexId v) {
    if (!in_tree[v]) {
      in_tree[v] = 1;
      vertices.push_back(v);
    }
  }
  void add_walk(const PcWalk& walk) {
    for (VertexId v : walk.vertices) add_vertex(v);
    edges.insert(edges.end(), walk.edges.begin(), walk.edges.end());
  }
};

/// Plain shortest path from the tree to `f`.
PcWalk shortest_attachment(const PcInstance& instance, const std::vector<char>& in_tree, VertexId f) {
  using Entry = std::pair<Cost, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<Cost> dist(instance.vertex_count(), kInfinity);
  std::vector<EdgeId> via(instance.vertex_count(), kNoEdge);
  dist[f] = 0;
  queue.emplace(0.0, f);
  VertexId reached = kNoVertex;
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    if (in_tree[v]) {
      reached = v;
      break;
    }
    for (const auto& inc : instance.incident(v)) {
      const Cost nd = d + instance.edge(inc.edge).cost;
      if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        via[inc.neighbor] = inc.edge;
        queue.emplace(nd, inc.neighbor);
      }
    }
  }
  if (reached == kNoVertex) throw InfeasibleError("fixed terminals are disconnected");
  PcWalk walk;
  for (VertexId v = reached;; v = instance.edge(via[v]).other(v)) {
    walk.vertices.push_back(v);
    if (v == f) break;
    walk.edges.push_back(via[v]);
  }
  return walk;
}

SteinerTree span(const PcInstance& instance, const std::vector<EdgeId>& edges,
                 const std::vector<VertexId>& vertices) {
  auto tree = spanning_tree_of(instance, edges, vertices);
  if (!tree) throw ValidationError("heuristic produced a disconnected vertex set");
  return *tree;
}

bool better(const PcInstance& instance, const SteinerTree& a, Cost cost_a, const SteinerTree& b,
            Cost cost_b) {
  (void)instance;
  if (cost_less(cost_a, cost_b)) return true;
  if (cost_less(cost_b, cost_a)) return false;
  return a.vertices < b.vertices;
}

}  // namespace

SteinerTree construct_tree(const PcInstance& instance, VertexId start, long reach_budget) {
  if (start < 0 || static_cast<std::size_t>(start) >= instance.vertex_count() || !instance.is_terminal(start))
    throw PreconditionError("construction must start at a terminal");
  if (reach_budget <= 0) reach_budget = default_edge_budget(instance);

  Growing s;
  s.in_tree.assign(instance.vertex_count(), 0);
  s.add_vertex(start);

  using Key = std::pair<Cost, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  std::vector<std::size_t> evaluated_at(instance.vertex_count(), 0);
  std::vector<PcWalk> walks(instance.vertex_count());
  std::vector<VertexId> dormant;

  auto evaluate = [&](VertexId t) {
    evaluated_at[t] = s.vertices.size();
    Connection c = connect(instance, t, s.in_tree, reach_budget);
    if (c.found) {
      walks[t] = std::move(c.walk);
      ready.emplace(c.gain, t);
    } else {
      dormant.push_back(t);
    }
  };

  for (VertexId t : instance.terminals())
    if (t != start) evaluate(t);

  while (true) {
    while (!ready.empty()) {
      const VertexId t = ready.top().second;
      ready.pop();
      if (s.in_tree[t]) continue;
      if (evaluated_at[t] != s.vertices.size()) {
        evaluate(t);
        continue;
      }
      s.add_walk(walks[t]);
    }
    std::vector<VertexId> pending;
    pending.swap(dormant);
    bool any = false;
    for (VertexId t : pending) {
      if (s.in_tree[t]) continue;
      if (evaluated_at[t] == s.vertices.size()) {
        dormant.push_back(t);
        continue;
      }
      evaluate(t);
      any = true;
    }
    if (!any || ready.empty()) break;
  }

  for (VertexId f : instance.fixed_terminals())
    if (!s.in_tree[f]) s.add_walk(shortest_attachment(instance, s.in_tree, f));
  return span(instance, s.edges, s.vertices);
}

SteinerTree strong_prune(const PcInstance& instance, const SteinerTree& tree) {
  if (tree.vertices.size() <= 1) return tree;
  const std::size_t n = instance.vertex_count();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : tree.edges) {
    const Edge& edge = instance.edge(e);
    adj[edge.u].emplace_back(edge.v, e);
    adj[edge.v].emplace_back(edge.u, e);
  }
  std::vector<VertexId> roots;
  for (VertexId v : tree.vertices)
    if (instance.is_terminal(v)) roots.push_back(v);
  if (roots.empty()) roots.push_back(tree.vertices.front());
  const auto fixed = instance.fixed_terminals();
  if (!fixed.empty()) roots.assign(1, fixed.front());

  SteinerTree best = tree;
  Cost best_cost = tree_cost_unchecked(instance, tree);
  std::vector<Cost> value(n, 0);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<VertexId> order;
  std::vector<char> keep(n, 0);
  for (VertexId root : roots) {
    order.clear();
    order.push_back(root);
    parent[root] = kNoVertex;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const VertexId v = order[i];
      for (const auto& [w, e] : adj[v]) {
        if (w == parent[v]) continue;
        parent[w] = v;
        parent_edge[w] = e;
        order.push_back(w);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) value[*it] = instance.effective_prize(*it);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId v = *it;
      if (v == root) continue;
      const Cost net = value[v] - instance.edge(parent_edge[v]).cost;
      if (net > 0) value[parent[v]] += net;
    }
    SteinerTree pruned;
    for (VertexId v : order) {
      keep[v] = v == root || (keep[parent[v]] && value[v] - instance.edge(parent_edge[v]).cost >= 0);
      if (!keep[v]) continue;
      pruned.vertices.push_back(v);
      if (v != root) pruned.edges.push_back(parent_edge[v]);
    }
    for (VertexId v : order) keep[v] = 0;
    pruned.normalize();
    const Cost cost = tree_cost_unchecked(instance, pruned);
    if (better(instance, pruned, cost, best, best_cost)) {
      best = std::move(pruned);
      best_cost = cost;
    }
  }
  return best;
}

SteinerTree prune_and_improve(const PcInstance& instance, const SteinerTree& tree, int rounds) {
  SteinerTree best = strong_prune(instance, tree);
  Cost best_cost = tree_cost_unchecked(instance, best);
  const long budget = default_edge_budget(instance);
  auto consider = [&](SteinerTree candidate) {
    candidate = strong_prune(instance, candidate);
    const Cost cost = tree_cost_unchecked(instance, candidate);
    if (!cost_less(cost, best_cost)) return false;
    best = std::move(candidate);
    best_cost = cost;
    return true;
  };

  for (int round = 0; round < rounds; ++round) {
    bool improved = false;
    if (auto mst = induced_mst(instance, best.vertices)) improved |= consider(*mst);

    std::vector<VertexId> outside;
    for (VertexId t : instance.terminals())
      if (!best.contains(t)) outside.push_back(t);
    std::stable_sort(outside.begin(), outside.end(),
                     [&](VertexId a, VertexId b) { return instance.prize(a) > instance.prize(b); });
    for (VertexId t : outside) {
      if (best.contains(t)) continue;
      std::vector<char> mask(instance.vertex_count(), 0);
      for (VertexId v : best.vertices) mask[v] = 1;
      const Connection c = connect(instance, t, mask, budget);
      if (!c.found || !(c.gain < -kEpsilon)) continue;
      std::vector<EdgeId> edges = best.edges;
      edges.insert(edges.end(), c.walk.edges.begin(), c.walk.edges.end());
      std::vector<VertexId> vertices = best.vertices;
      vertices.insert(vertices.end(), c.walk.vertices.begin(), c.walk.vertices.end());
      auto grown = spanning_tree_of(instance, edges, vertices);
      if (grown) improved |= consider(*grown);
    }

    // Vertex insertion: any outside vertex touching the tree at least twice.
    {
      std::vector<char> inside(instance.vertex_count(), 0);
      for (VertexId v : best.vertices) inside[v] = 1;
      for (VertexId v : instance.alive_vertices()) {
        if (inside[v] || best.contains(v)) continue;
        int touches = 0;
        for (const auto& inc : instance.incident(v)) touches += inside[inc.neighbor];
        if (touches < 2) continue;
        std::vector<VertexId> grown = best.vertices;
        grown.push_back(v);
        std::sort(grown.begin(), grown.end());
        if (auto mst = induced_mst(instance, grown); mst && consider(*mst)) {
          improved = true;
          std::fill(inside.begin(), inside.end(), 0);
          for (VertexId x : best.vertices) inside[x] = 1;
        }
      }
    }

    // Vertex removal: non-terminals of tree degree three or more.
    for (VertexId v : std::vector<VertexId>(best.vertices)) {
      if (!best.contains(v) || instance.is_terminal(v)) continue;
      int degree = 0;
      for (EdgeId e : best.edges) degree += instance.edge(e).u == v || instance.edge(e).v == v;
      if (degree < 3) continue;
      std::vector<VertexId> rest;
      for (VertexId x : best.vertices)
        if (x != v) rest.push_back(x);
      if (auto mst = induced_mst(instance, rest)) improved |= consider(*mst);
    }

    // Pendant paths ending in an unfixed terminal leaf.
    for (VertexId t : std::vector<VertexId>(best.vertices)) {
      if (!best.contains(t) || !instance.is_unfixed_terminal(t) || best.vertices.size() <= 1) continue;
      std::vector<std::vector<EdgeId>> incident(instance.vertex_count());
      for (EdgeId e : best.edges) {
        incident[instance.edge(e).u].push_back(e);
        incident[instance.edge(e).v].push_back(e);
      }
      if (incident[t].size() != 1) continue;
      std::vector<char> drop_vertex(instance.vertex_count(), 0);
      std::vector<char> drop_edge(instance.edge_count(), 0);
      VertexId v = t;
      EdgeId e = incident[t][0];
      while (true) {
        drop_vertex[v] = 1;
        drop_edge[e] = 1;
        const VertexId w = instance.edge(e).other(v);
        if (incident[w].size() != 2 || instance.is_terminal(w)) break;
        e = incident[w][0] == e ? incident[w][1] : incident[w][0];
        v = w;
      }
      SteinerTree cut;
      for (VertexId x : best.vertices)
        if (!drop_vertex[x]) cut.vertices.push_back(x);
      for (EdgeId x : best.edges)
        if (!drop_edge[x]) cut.edges.push_back(x);
      if (!cut.vertices.empty()) improved |= consider(cut);
    }
    if (!improved) break;
  }
  return best;
}

std::vector<VertexId> heuristic_starts(const PcInstance& instance, std::size_t count) {
  std::vector<VertexId> terms = instance.terminals();
  std::stable_sort(terms.begin(), terms.end(), [&](VertexId a, VertexId b) {
    if (instance.fixed(a) != instance.fixed(b)) return instance.fixed(a);
    return instance.prize(a) > instance.prize(b);
  });
  if (terms.size() > count) terms.resize(count);
  return terms;
}

SteinerTree best_heuristic_tree(const PcInstance& instance, std::size_t starts, long reach_budget,
                                int rounds) {
  const auto alive = instance.alive_vertices();
  if (alive.empty()) return {};
  const auto start_list = heuristic_starts(instance, starts);
  if (start_list.empty()) return SteinerTree{{alive.front()}, {}};
  SteinerTree best;
  Cost best_cost = kInfinity;
  for (VertexId start : start_list) {
    SteinerTree tree = prune_and_improve(instance, construct_tree(instance, start, reach_budget), rounds);
    const Cost cost = tree_cost_unchecked(instance, tree);
    if (best.vertices.empty() || better(instance, tree, cost, best, best_cost)) {
      best = std::move(tree);
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace steinred
