#include "steinred/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>
#include <tuple>

#include "steinred/heuristics.hpp"

namespace steinred {

std::size_t SolveStats::total_reductions() const {
  std::size_t sum = 0;
  for (std::size_t r : reductions) sum += r;
  return sum;
}

std::string SolveStats::to_text(Cost lower, Cost upper) const {
  std::ostringstream out;
  out << "nodes " << nodes << '\n';
  out << "time " << format_cost(seconds) << '\n';
  out << "LB " << format_cost(lower) << '\n';
  out << "UB " << format_cost(upper) << '\n';
  out << "edges_before " << edges_before << '\n';
  out << "edges_after " << edges_after << '\n';
  for (int k = 0; k < 6; ++k)
    out << "reductions." << to_string(static_cast<EventKind>(k)) << ' ' << reductions[k] << '\n';
  return out.str();
}

namespace {

struct Node {
  PcInstance instance;
  EventLog log;
  Cost lower;
  int depth;
  long id;
};

struct NodeOrder {
  bool operator()(const std::unique_ptr<Node>& a, const std::unique_ptr<Node>& b) const {
    // Smallest bound first; among equal bounds the deepest node, then the oldest.
    return std::make_tuple(a->lower, -a->depth, a->id) > std::make_tuple(b->lower, -b->depth, b->id);
  }
};

/// Unfixed terminal maximising p (1 + degree); without one, the
/// non-terminal of highest degree. Ties by id.
bool integral_data(const PcInstance& instance) {
  auto whole = [](Cost x) { return std::abs(x - std::round(x)) < 1e-9; };
  if (!whole(instance.offset())) return false;
  for (VertexId v : instance.alive_vertices())
    if (!instance.fixed(v) && !whole(instance.prize(v))) return false;
  for (EdgeId e : instance.alive_edges())
    if (!whole(instance.edge(e).cost)) return false;
  return true;
}

VertexId branch_vertex(const PcInstance& instance) {
  VertexId best = kNoVertex;
  Cost score = -1;
  for (VertexId v : instance.unfixed_terminals()) {
    const Cost s = instance.prize(v) * (1.0 + static_cast<Cost>(instance.degree(v)));
    if (s > score) {
      score = s;
      best = v;
    }
  }
  if (best != kNoVertex) return best;
  for (VertexId v : instance.alive_vertices()) {
    if (instance.fixed(v)) continue;
    const Cost s = static_cast<Cost>(instance.degree(v));
    if (s > score) {
      score = s;
      best = v;
    }
  }
  return best;
}

}  // namespace

SolveResult solve(const PcInstance& instance, const SolveConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };
  SolveResult out;
  out.stats.edges_before = instance.alive_edge_count();

  ReduceState global;
  global.original = &instance;
  auto tolerance = [&] { return std::max(1e-9, config.gap * std::abs(global.upper_bound)); };
  // With integral data only trees at least one unit cheaper are worth finding.
  const Cost step = integral_data(instance) ? 1.0 - 1e-6 : 0.0;
  auto cutoff = [&] {
    return std::isfinite(global.upper_bound) ? global.upper_bound - std::max(step, tolerance()) : kInfinity;
  };

  std::vector<std::unique_ptr<Node>> open;  // heap ordered by NodeOrder
  auto push = [&](std::unique_ptr<Node> node) {
    open.push_back(std::move(node));
    std::push_heap(open.begin(), open.end(), NodeOrder{});
  };
  auto pop = [&] {
    std::pop_heap(open.begin(), open.end(), NodeOrder{});
    std::unique_ptr<Node> node = std::move(open.back());
    open.pop_back();
    return node;
  };
  long next_id = 0;
  push(std::make_unique<Node>(Node{instance, EventLog(instance), -kInfinity, 0, next_id++}));

  bool limit_hit = false;
  Cost closed_lower = kInfinity;  // smallest bound among nodes dropped at a limit
  while (!open.empty()) {
    std::unique_ptr<Node> node = pop();
    if (node->lower >= cutoff()) continue;
    if (elapsed() > config.time_limit || (config.node_limit >= 0 && out.stats.nodes >= config.node_limit)) {
      limit_hit = true;
      closed_lower = std::min(closed_lower, node->lower);
      for (const auto& rest : open) closed_lower = std::min(closed_lower, rest->lower);
      open.clear();
      break;
    }
    ++out.stats.nodes;
    out.stats.max_depth = std::max(out.stats.max_depth, node->depth);

    ReduceState local;
    local.original = &instance;
    const Cost entry_cutoff = cutoff();
    local.upper_bound = entry_cutoff;
    local.incumbent = global.incumbent;
    const bool root = node->depth == 0;
    reduce_in_place(node->instance, node->log, local, root ? config.root_reduce : config.node_reduce);
    if (local.upper_bound < entry_cutoff || global.incumbent.vertices.empty()) {
      global.upper_bound = local.upper_bound;
      global.incumbent = local.incumbent;
    }
    if (root && step > 0 && std::isfinite(global.upper_bound) && local.lower_bound < cutoff()) {
      // Reduce again against the unit cutoff now that an incumbent exists.
      const Cost again = cutoff();
      local.upper_bound = again;
      reduce_in_place(node->instance, node->log, local, config.root_reduce);
      if (local.upper_bound < again) {
        global.upper_bound = local.upper_bound;
        global.incumbent = local.incumbent;
      }
    }
    if (root) {
      out.stats.edges_after = node->instance.alive_edge_count();
      for (const auto& ev : node->log.events()) ++out.stats.reductions[static_cast<int>(ev.kind)];
    }

    Cost lower = std::max(node->lower, local.lower_bound);
    if (lower == -kInfinity) lower = dual_lower_bound(node->instance, config.node_reduce.max_roots);
    if (root) out.stats.root_lower_bound = lower;
    if (lower >= cutoff()) {
      if (root) closed_lower = std::min(closed_lower, lower);
      continue;
    }

    const VertexId v = branch_vertex(node->instance);
    if (v == kNoVertex) {
      // Every vertex is fixed: the spanning tree is the only candidate.
      if (auto tree = induced_mst(node->instance, node->instance.alive_vertices())) {
        ReduceState leaf = local;
        const Cost before = leaf.upper_bound;
        offer_incumbent(node->instance, node->log, leaf, *tree);
        if (leaf.upper_bound < before && leaf.upper_bound < global.upper_bound - kEpsilon) {
          global.upper_bound = leaf.upper_bound;
          global.incumbent = leaf.incumbent;
        }
      }
      continue;
    }

    auto fix_child = std::make_unique<Node>(Node{node->instance, node->log, lower, node->depth + 1, next_id++});
    apply::fix_terminal(fix_child->instance, fix_child->log, v);
    auto drop_child = std::make_unique<Node>(Node{node->instance, node->log, lower, node->depth + 1, next_id++});
    apply::delete_vertex(drop_child->instance, drop_child->log, v);
    push(std::move(fix_child));
    push(std::move(drop_child));
  }

  out.upper = global.upper_bound;
  out.tree = global.incumbent;
  if (!out.tree.vertices.empty() || instance.alive_vertex_count() == 0) {
    out.upper = evaluate_cost(instance, out.tree);
  }
  out.lower = limit_hit ? std::min(closed_lower, out.upper) : out.upper;
  out.optimal = !limit_hit;
  out.stats.seconds = elapsed();
  return out;
}

}  // namespace steinred
