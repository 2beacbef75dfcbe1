#include "steinred/dual_ascent.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace steinred {

namespace {

using Entry = std::pair<Cost, VertexId>;
using MinQueue = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

std::vector<Cost> rc_sweep(const SapInstance& sap, const std::vector<Cost>& rc,
                           const std::vector<VertexId>& sources, bool backward) {
  std::vector<Cost> dist(sap.vertex_count, kInfinity);
  MinQueue queue;
  for (VertexId s : sources) {
    dist[s] = 0;
    queue.emplace(0.0, s);
  }
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (int a : backward ? sap.in_arcs[v] : sap.out_arcs[v]) {
      const VertexId w = backward ? sap.arcs[a].tail : sap.arcs[a].head;
      const Cost nd = d + rc[a];
      if (nd < dist[w]) {
        dist[w] = nd;
        queue.emplace(nd, w);
      }
    }
  }
  return dist;
}

}  // namespace

DualAscentResult dual_ascent(const SapInstance& sap) {
  DualAscentResult result;
  result.root = sap.root;
  result.reduced_costs.reserve(sap.arcs.size());
  for (const Arc& a : sap.arcs) result.reduced_costs.push_back(a.cost);
  auto& rc = result.reduced_costs;

  using Key = std::tuple<std::size_t, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> active;
  for (VertexId t : sap.terminals)
    if (t != sap.root) active.emplace(sap.in_arcs[t].size(), t);

  std::vector<int> stamp(sap.vertex_count, 0);
  int mark = 0;
  std::vector<VertexId> component;
  std::vector<int> entering;
  while (!active.empty()) {
    const auto [size, t] = active.top();
    active.pop();

    ++mark;
    component.assign(1, t);
    stamp[t] = mark;
    bool rooted = false;
    for (std::size_t i = 0; i < component.size() && !rooted; ++i) {
      for (int a : sap.in_arcs[component[i]]) {
        if (rc[a] > kEpsilon) continue;
        const VertexId u = sap.arcs[a].tail;
        if (stamp[u] == mark) continue;
        if (u == sap.root) {
          rooted = true;
          break;
        }
        stamp[u] = mark;
        component.push_back(u);
      }
    }
    if (rooted) continue;

    entering.clear();
    Cost delta = kInfinity;
    for (VertexId v : component)
      for (int a : sap.in_arcs[v])
        if (stamp[sap.arcs[a].tail] != mark) {
          entering.push_back(a);
          delta = std::min(delta, rc[a]);
        }
    if (entering.empty())
      throw InfeasibleError("terminal " + std::to_string(t) + " is not reachable from the root");
    if (entering.size() > size) {
      active.emplace(entering.size(), t);
      continue;
    }
    for (int a : entering) rc[a] = rc[a] - delta <= kEpsilon ? 0.0 : rc[a] - delta;
    result.lower_bound += delta;
    ++result.iterations;
    active.emplace(entering.size(), t);
  }

  result.root_distance = rc_sweep(sap, rc, {sap.root}, false);
  std::vector<VertexId> sinks;
  for (VertexId t : sap.terminals)
    if (t != sap.root) sinks.push_back(t);
  result.terminal_distance = rc_sweep(sap, rc, sinks, true);
  return result;
}

DaReductions da_reductions(PcInstance& instance, EventLog& log, const SapInstance& sap,
                           const DualAscentResult& result, Cost upper_bound,
                           const std::vector<ReachSet>& reach_sets) {
  DaReductions out;
  const std::size_t first_event = log.size();
  const Cost bound = sap.to_sap_objective(upper_bound);
  const Cost lb = result.lower_bound;
  if (lb > bound + kEpsilon) return out;
  auto exceeds = [&](Cost value) { return value > bound + kEpsilon; };

  const auto& rd = result.root_distance;
  const auto& td = result.terminal_distance;
  for (VertexId v : instance.alive_vertices()) {
    if (instance.fixed(v) || static_cast<std::size_t>(v) >= sap.original_vertex_count) continue;
    if (exceeds(lb + rd[v] + td[v])) apply::delete_vertex(instance, log, v);
  }

  std::vector<std::vector<int>> arcs_of_edge;
  for (std::size_t a = 0; a < sap.arcs.size(); ++a) {
    const Arc& arc = sap.arcs[a];
    if (arc.origin != ArcOrigin::Forward && arc.origin != ArcOrigin::Backward) continue;
    if (static_cast<std::size_t>(arc.ref) >= arcs_of_edge.size()) arcs_of_edge.resize(arc.ref + 1);
    arcs_of_edge[arc.ref].push_back(static_cast<int>(a));
  }
  for (EdgeId e : instance.alive_edges()) {
    if (static_cast<std::size_t>(e) >= arcs_of_edge.size() || arcs_of_edge[e].empty()) continue;
    bool all = true;
    for (int a : arcs_of_edge[e]) {
      const Arc& arc = sap.arcs[a];
      if (!exceeds(lb + rd[arc.tail] + result.reduced_costs[a] + td[arc.head])) all = false;
    }
    if (all) apply::delete_edge(instance, log, e);
  }

  // Terminal fixing: if t is left out, so is every terminal implying it, and
  // all their prize arcs have to be paid.
  auto fix = [&](VertexId t) {
    apply::fix_terminal(instance, log, t);
    out.fixed.push_back(t);
  };
  for (const ReachSet& reach : reach_sets) {
    const VertexId t = reach.source();
    if (!instance.is_unfixed_terminal(t) || sap.prize_arc[t] < 0) continue;
    Cost sum = result.reduced_costs[sap.prize_arc[t]];
    bool implied_by_fixed = false;
    for (VertexId m : reach.members()) {
      // Members deleted above are left out of every optimum, so their
      // prize arcs still count.
      if (instance.alive(m) && instance.fixed(m))
        implied_by_fixed = true;
      else if (static_cast<std::size_t>(m) < sap.prize_arc.size() && sap.prize_arc[m] >= 0)
        sum += result.reduced_costs[sap.prize_arc[m]];
    }
    if (implied_by_fixed || exceeds(lb + sum)) fix(t);
  }
  // A fixed terminal fixes every terminal it implies.
  for (bool changed = true; changed;) {
    changed = false;
    for (const ReachSet& reach : reach_sets) {
      const VertexId t = reach.source();
      if (!instance.is_unfixed_terminal(t)) continue;
      for (VertexId m : reach.members())
        if (instance.alive(m) && instance.fixed(m)) {
          fix(t);
          changed = true;
          break;
        }
    }
  }
  out.events.assign(log.events().begin() + static_cast<long>(first_event), log.events().end());
  return out;
}

}  // namespace steinred
