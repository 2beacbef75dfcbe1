#include "steinred/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace steinred {

namespace {

struct LocalArc {
  int id;  ///< index into the caller's arc list
  int tail;
  int head;
  Cost cost;
};

/// Chu-Liu/Edmonds; returns indices into `arcs`.
std::optional<std::vector<int>> edmonds(int n, int root, const std::vector<LocalArc>& arcs) {
  std::vector<int> best(n, -1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.head == root || a.tail == a.head) continue;
    if (best[a.head] < 0 || a.cost < arcs[best[a.head]].cost) best[a.head] = static_cast<int>(i);
  }
  for (int v = 0; v < n; ++v)
    if (v != root && best[v] < 0) return std::nullopt;

  std::vector<int> comp(n, -1);
  std::vector<int> visited(n, -1);
  int comps = 0;
  bool cycle = false;
  for (int v = 0; v < n; ++v) {
    int x = v;
    while (x != root && visited[x] < 0 && comp[x] < 0) {
      visited[x] = v;
      x = arcs[best[x]].tail;
    }
    if (x != root && comp[x] < 0 && visited[x] == v) {
      cycle = true;
      for (int y = arcs[best[x]].tail; y != x; y = arcs[best[y]].tail) comp[y] = comps;
      comp[x] = comps++;
    }
  }
  if (!cycle) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (v != root) out.push_back(best[v]);
    return out;
  }
  std::vector<char> on_cycle(n, 0);
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) on_cycle[v] = 1;
    else comp[v] = comps++;
  }

  std::vector<LocalArc> contracted;
  std::vector<int> origin;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    const int u = comp[a.tail];
    const int w = comp[a.head];
    if (u == w || a.head == root) continue;
    const Cost c = on_cycle[a.head] ? a.cost - arcs[best[a.head]].cost : a.cost;
    contracted.push_back({static_cast<int>(contracted.size()), u, w, c});
    origin.push_back(static_cast<int>(i));
  }
  auto sub = edmonds(comps, comp[root], contracted);
  if (!sub) return std::nullopt;

  std::vector<int> out;
  std::vector<char> entered(n, 0);
  for (int c : *sub) {
    const int i = origin[c];
    out.push_back(i);
    entered[arcs[i].head] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (on_cycle[v] && !entered[v]) out.push_back(best[v]);
  return out;
}

}  // namespace

std::optional<std::vector<int>> min_arborescence(const SapInstance& sap, const std::vector<char>& use) {
  std::vector<int> local(sap.vertex_count, -1);
  int n = 0;
  for (std::size_t v = 0; v < sap.vertex_count; ++v)
    if (use[v]) local[v] = n++;
  std::vector<LocalArc> arcs;
  for (std::size_t a = 0; a < sap.arcs.size(); ++a) {
    const Arc& arc = sap.arcs[a];
    if (local[arc.tail] < 0 || local[arc.head] < 0) continue;
    arcs.push_back({static_cast<int>(a), local[arc.tail], local[arc.head], arc.cost});
  }
  auto chosen = edmonds(n, local[sap.root], arcs);
  if (!chosen) return std::nullopt;
  std::vector<int> out;
  for (int i : *chosen) out.push_back(arcs[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

OracleResult brute_force_opt(const PcInstance& instance, bool enumerate_all) {
  const auto alive = instance.alive_vertices();
  const std::size_t n = alive.size();
  if (n > kOracleVertexLimit)
    throw PreconditionError("oracle refuses " + std::to_string(n) + " vertices (limit " +
                            std::to_string(kOracleVertexLimit) + ")");
  OracleResult result;
  if (n == 0) {
    result.optimum = instance.offset();
    result.optimal_sets.emplace_back();
    return result;
  }

  std::vector<int> local(instance.vertex_count(), -1);
  for (std::size_t i = 0; i < n; ++i) local[alive[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> adjacent(n, 0);
  std::vector<Cost> weight(n * n, kInfinity);
  Cost cheapest = kInfinity;
  for (EdgeId e : instance.alive_edges()) {
    const int a = local[instance.edge(e).u];
    const int b = local[instance.edge(e).v];
    adjacent[a] |= 1u << b;
    adjacent[b] |= 1u << a;
    weight[a * n + b] = weight[b * n + a] = instance.edge(e).cost;
    cheapest = std::min(cheapest, instance.edge(e).cost);
  }
  std::uint32_t required = 0;
  Cost total_prize = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (instance.fixed(alive[i])) required |= 1u << i;
    else total_prize += instance.prize(alive[i]);
  }

  auto kept_prize = [&](std::uint32_t mask) {
    Cost sum = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      const VertexId v = alive[std::countr_zero(m)];
      if (!instance.fixed(v)) sum += instance.prize(v);
    }
    return sum;
  };
  auto is_connected = [&](std::uint32_t mask) {
    std::uint32_t seen = mask & (~mask + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adjacent[std::countr_zero(f)];
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  };
  std::vector<Cost> key(n);
  std::vector<char> done(n);
  auto mst = [&](std::uint32_t mask) {
    std::vector<int> members;
    for (std::uint32_t m = mask; m; m &= m - 1) members.push_back(std::countr_zero(m));
    for (int v : members) {
      key[v] = kInfinity;
      done[v] = 0;
    }
    key[members[0]] = 0;
    Cost sum = 0;
    for (std::size_t step = 0; step < members.size(); ++step) {
      int pick = -1;
      for (int v : members)
        if (!done[v] && (pick < 0 || key[v] < key[pick])) pick = v;
      if (pick < 0) break;
      done[pick] = 1;
      sum += key[pick];
      for (int v : members)
        if (!done[v] && weight[pick * n + v] < key[v]) key[v] = weight[pick * n + v];
    }
    return sum;
  };

  const Cost offset = instance.offset();
  std::vector<std::uint32_t> best_masks;
  Cost best = kInfinity;
  auto worse = [&](Cost value) {
    return enumerate_all ? value > best + kEpsilon : value >= best - kEpsilon;
  };
  const auto start_size = std::max<std::size_t>(1, std::popcount(required));
  for (std::size_t k = start_size; k <= n; ++k) {
    // Any set of k vertices needs k-1 edges.
    if (worse(offset + static_cast<Cost>(k - 1) * cheapest)) break;
    std::uint32_t mask = (k == 32) ? ~0u : ((1u << k) - 1);
    const std::uint32_t limit = 1u << n;
    while (mask < limit) {
      if ((mask & required) == required) {
        const Cost foregone = total_prize - kept_prize(mask);
        const Cost floor = offset + foregone + static_cast<Cost>(k - 1) * cheapest;
        if (!worse(floor) && is_connected(mask)) {
          const Cost value = offset + foregone + mst(mask);
          if (value < best - kEpsilon) {
            best = value;
            best_masks.assign(1, mask);
          } else if (enumerate_all && cost_equal(value, best)) {
            best_masks.push_back(mask);
          }
        }
      }
      const std::uint32_t low = mask & (~mask + 1);
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
      if (ripple == 0) break;
    }
  }
  if (best_masks.empty()) throw InfeasibleError("no connected set contains all fixed terminals");

  result.optimum = best;
  for (std::uint32_t mask : best_masks) {
    std::vector<VertexId> set;
    for (std::uint32_t m = mask; m; m &= m - 1) set.push_back(alive[std::countr_zero(m)]);
    result.optimal_sets.push_back(std::move(set));
  }
  std::sort(result.optimal_sets.begin(), result.optimal_sets.end());
  result.tree = *induced_mst(instance, result.optimal_sets.front());
  return result;
}

SapOracleResult brute_force_sap(const SapInstance& sap) {
  std::vector<VertexId> steiner;
  std::vector<char> use(sap.vertex_count, 0);
  for (std::size_t v = 0; v < sap.vertex_count; ++v) {
    if (sap.is_terminal(static_cast<VertexId>(v))) use[v] = 1;
    else if (!sap.in_arcs[v].empty() || !sap.out_arcs[v].empty()) steiner.push_back(static_cast<VertexId>(v));
  }
  if (steiner.size() > kSapOracleSteinerLimit)
    throw PreconditionError("arborescence oracle refuses " + std::to_string(steiner.size()) + " non-terminals");
  SapOracleResult result;
  for (std::uint32_t mask = 0; mask < (1u << steiner.size()); ++mask) {
    for (std::size_t i = 0; i < steiner.size(); ++i) use[steiner[i]] = (mask >> i) & 1u;
    auto arcs = min_arborescence(sap, use);
    if (!arcs) continue;
    const Cost cost = arborescence_cost(sap, *arcs);
    if (cost < result.optimum - kEpsilon) {
      result.optimum = cost;
      result.arcs = std::move(*arcs);
    }
  }
  if (result.arcs.empty() && sap.terminals.size() > 1) throw InfeasibleError("no arborescence exists");
  if (result.optimum == kInfinity) result.optimum = 0;
  return result;
}

}  // namespace steinred
