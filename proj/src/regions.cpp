#include "steinred/regions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "steinred/distance.hpp"

namespace steinred {

std::vector<Cost> TerminalRegions::sorted_radii() const {
  std::vector<Cost> out;
  out.reserve(terminals.size());
  for (VertexId t : terminals) out.push_back(radius[t]);
  std::sort(out.begin(), out.end());
  return out;
}

Cost TerminalRegions::smallest_radii_sum(long k) const {
  if (k <= 0) return 0;
  const auto radii = sorted_radii();
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(k), radii.size());
  return std::accumulate(radii.begin(), radii.begin() + static_cast<long>(n), 0.0);
}

Cost region_radius(const PcInstance& instance, const std::vector<VertexId>& owner, VertexId t) {
  using Entry = std::pair<Cost, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<Cost> dist(instance.vertex_count(), kInfinity);
  Cost best = instance.effective_prize(t);
  dist[t] = 0;
  queue.emplace(0.0, t);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v] || d >= best) continue;
    for (const auto& inc : instance.incident(v)) {
      const Cost nd = d + instance.edge(inc.edge).cost;
      if (owner[inc.neighbor] != t) {
        best = std::min(best, nd);
      } else if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        queue.emplace(nd, inc.neighbor);
      }
    }
  }
  return best;
}

TerminalRegions voronoi_regions(const PcInstance& instance) {
  TerminalRegions regions;
  regions.terminals = instance.terminals();
  if (regions.terminals.empty()) throw PreconditionError("regions need at least one terminal");
  const std::size_t n = instance.vertex_count();
  regions.owner.assign(n, kNoVertex);
  regions.radius.assign(n, kInfinity);

  using Entry = std::tuple<Cost, VertexId, VertexId>;  // distance, owner, vertex
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<Cost> dist(n, kInfinity);
  for (VertexId t : regions.terminals) {
    dist[t] = 0;
    queue.emplace(0.0, t, t);
  }
  while (!queue.empty()) {
    const auto [d, o, v] = queue.top();
    queue.pop();
    if (regions.owner[v] != kNoVertex) continue;
    regions.owner[v] = o;
    for (const auto& inc : instance.incident(v)) {
      const Cost nd = d + instance.edge(inc.edge).cost;
      if (regions.owner[inc.neighbor] == kNoVertex && nd <= dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        queue.emplace(nd, o, inc.neighbor);
      }
    }
  }
  for (VertexId t : regions.terminals) regions.radius[t] = region_radius(instance, regions.owner, t);
  return regions;
}

int default_improvement_rounds(const PcInstance& instance) {
  return static_cast<int>(2 * instance.alive_vertex_count());
}

namespace {

/// Whether the region of `t` stays connected once `removed` leaves it.
bool connected_without(const PcInstance& instance, const std::vector<VertexId>& owner, VertexId t,
                       VertexId removed, std::vector<int>& stamp, int mark) {
  std::size_t size = 0;
  for (std::size_t v = 0; v < owner.size(); ++v)
    if (owner[v] == t && static_cast<VertexId>(v) != removed) ++size;
  std::vector<VertexId> stack{t};
  stamp[t] = mark;
  std::size_t seen = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : instance.incident(v)) {
      const VertexId w = inc.neighbor;
      if (w == removed || owner[w] != t || stamp[w] == mark) continue;
      stamp[w] = mark;
      ++seen;
      stack.push_back(w);
    }
  }
  return seen == size;
}

}  // namespace

TerminalRegions build_regions(const PcInstance& instance, int improvement_rounds) {
  TerminalRegions regions = voronoi_regions(instance);
  if (regions.terminals.size() < 3) return regions;  // the objective is identically 0
  Cost objective = regions.objective();
  std::vector<int> stamp(instance.vertex_count(), 0);
  int mark = 0;
  int moves = 0;
  bool improved = true;
  while (improved && moves < improvement_rounds) {
    improved = false;
    for (VertexId x : instance.alive_vertices()) {
      if (moves >= improvement_rounds) break;
      const VertexId from = regions.owner[x];
      if (from == x) continue;
      std::vector<VertexId> tried;
      for (const auto& inc : instance.incident(x)) {
        const VertexId to = regions.owner[inc.neighbor];
        if (to == from || std::find(tried.begin(), tried.end(), to) != tried.end()) continue;
        tried.push_back(to);
        if (!connected_without(instance, regions.owner, from, x, stamp, ++mark)) break;
        const Cost old_from = regions.radius[from];
        const Cost old_to = regions.radius[to];
        regions.owner[x] = to;
        regions.radius[from] = region_radius(instance, regions.owner, from);
        regions.radius[to] = region_radius(instance, regions.owner, to);
        const Cost candidate = regions.objective();
        if (candidate > objective + kEpsilon) {
          objective = candidate;
          ++moves;
          improved = true;
          break;
        }
        regions.owner[x] = from;
        regions.radius[from] = old_from;
        regions.radius[to] = old_to;
      }
    }
  }
  return regions;
}

namespace {

void require_bound_vertex(const PcInstance& instance, const TerminalRegions& regions, VertexId v,
                          std::size_t min_terminals) {
  if (instance.is_terminal(v)) throw PreconditionError("bound vertex must not be a terminal");
  if (regions.terminals.size() < min_terminals)
    throw PreconditionError("too few terminals for this bound");
}

Cost nearest_bound(const PcInstance& instance, const TerminalRegions& regions, VertexId v,
                   std::size_t k) {
  const auto nearest = nearest_terminals(instance, v, k);
  if (nearest.size() < k) return kInfinity;
  Cost sum = 0;
  for (const auto& n : nearest) sum += n.distance;
  return sum + regions.smallest_radii_sum(static_cast<long>(regions.terminals.size() - k));
}

}  // namespace

Cost vertex_bound(const PcInstance& instance, const TerminalRegions& regions, VertexId v) {
  require_bound_vertex(instance, regions, v, 2);
  return nearest_bound(instance, regions, v, 2);
}

Cost degree3_bound(const PcInstance& instance, const TerminalRegions& regions, VertexId v) {
  require_bound_vertex(instance, regions, v, 3);
  return nearest_bound(instance, regions, v, 3);
}

std::vector<ReductionEvent> apply_bound_eliminations(PcInstance& instance, EventLog& log,
                                                     const TerminalRegions& regions, Cost upper_bound,
                                                     const SteinerTree* incumbent) {
  const std::size_t first_event = log.size();
  const std::size_t s = regions.terminals.size();
  if (s < 2) return {};
  const Cost offset = instance.offset();
  auto exceeds = [&](Cost bound, VertexId v, Safety& safety) {
    if (bound + offset > upper_bound + kEpsilon) {
      safety = Safety::AllOptima;
      return true;
    }
    if (incumbent && cost_equal(bound + offset, upper_bound) && !incumbent->contains(v)) {
      safety = Safety::SomeOptimum;
      return true;
    }
    return false;
  };

  std::vector<VertexId> candidates;
  for (VertexId v : instance.alive_vertices())
    if (!instance.is_terminal(v)) candidates.push_back(v);

  // All bounds refer to the instance as it was on entry.
  std::vector<std::pair<VertexId, Safety>> deletions;
  std::vector<std::pair<VertexId, Safety>> pseudo;
  for (VertexId v : candidates) {
    Safety safety = Safety::AllOptima;
    if (exceeds(vertex_bound(instance, regions, v), v, safety)) {
      deletions.emplace_back(v, safety);
    } else if (s >= 3 && instance.degree(v) <= 4 && exceeds(degree3_bound(instance, regions, v), v, safety)) {
      pseudo.emplace_back(v, safety);
    }
  }
  for (const auto& [v, safety] : deletions) apply::delete_vertex(instance, log, v, safety);

  // Neighbours of an eliminated vertex are skipped: their degree bound says
  // nothing about the replacement edges.
  std::vector<char> touched(instance.vertex_count(), 0);
  for (const auto& [v, safety] : pseudo) {
    if (!instance.alive(v) || touched[v] || instance.degree(v) > 4) continue;
    for (const auto& inc : instance.incident(v)) touched[inc.neighbor] = 1;
    apply::pseudo_eliminate(instance, log, v, safety);
  }
  return {log.events().begin() + static_cast<long>(first_event), log.events().end()};
}

}  // namespace steinred
