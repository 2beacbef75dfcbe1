#include "steinred/distance.hpp"

#include <functional>
#include <queue>
#include <utility>

namespace steinred {

namespace {

using QueueEntry = std::pair<Cost, VertexId>;
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

/// Dijkstra where vertices for which `expand` is false are settled but never
/// relaxed from. `visit` is called on each settled vertex in (distance, id)
/// order and may stop the search by returning false.
template <typename Expand, typename Visit>
void settle_in_order(const PcInstance& instance, VertexId source, Expand expand, Visit visit) {
  std::vector<Cost> dist(instance.vertex_count(), kInfinity);
  std::vector<char> done(instance.vertex_count(), 0);
  MinQueue queue;
  dist[source] = 0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (done[v] || d > dist[v]) continue;
    done[v] = 1;
    if (!visit(v, d)) return;
    if (v != source && !expand(v)) continue;
    for (const auto& inc : instance.incident(v)) {
      const Cost nd = d + instance.edge(inc.edge).cost;
      if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        queue.emplace(nd, inc.neighbor);
      }
    }
  }
}

}  // namespace

std::vector<Cost> shortest_distances(const PcInstance& instance, VertexId source) {
  std::vector<Cost> out(instance.vertex_count(), kInfinity);
  settle_in_order(
      instance, source, [](VertexId) { return true; },
      [&](VertexId v, Cost d) {
        out[v] = d;
        return true;
      });
  return out;
}

Cost restricted_pair_distance(const PcInstance& instance, VertexId a, VertexId b) {
  if (a == b) return 0;
  Cost found = kInfinity;
  settle_in_order(
      instance, a, [&](VertexId v) { return !instance.is_terminal(v); },
      [&](VertexId v, Cost d) {
        if (v == b) {
          found = d;
          return false;
        }
        return true;
      });
  return found;
}

std::vector<TerminalDistance> nearest_terminals(const PcInstance& instance, VertexId v,
                                                std::size_t k) {
  std::vector<TerminalDistance> out;
  if (k == 0) return out;
  settle_in_order(
      instance, v, [&](VertexId x) { return !instance.is_terminal(x); },
      [&](VertexId x, Cost d) {
        if (x != v && instance.is_terminal(x)) out.push_back({x, d});
        return out.size() < k;
      });
  return out;
}

RestrictedDistances restricted_distance(const PcInstance& instance, VertexId vi, VertexId vj,
                                        std::size_t k) {
  if (k < 1) throw PreconditionError("restricted_distance needs k >= 1");
  RestrictedDistances out;
  out.between = restricted_pair_distance(instance, vi, vj);
  out.nearest = nearest_terminals(instance, vi, k);
  return out;
}

}  // namespace steinred
