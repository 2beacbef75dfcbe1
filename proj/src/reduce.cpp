#include "steinred/reduce.hpp"

#include <algorithm>
#include <cmath>

#include "steinred/heuristics.hpp"
#include "steinred/regions.hpp"
#include "steinred/walk.hpp"

namespace steinred {

void offer_incumbent(const PcInstance& instance, const EventLog& log, ReduceState& state,
                     const SteinerTree& tree) {
  const Cost local = tree_cost_unchecked(instance, tree);
  if (state.local_incumbent.vertices.empty() || local < state.local_incumbent_cost - kEpsilon) {
    state.local_incumbent = tree;
    state.local_incumbent_cost = local;
  }
  SteinerTree mapped = retransform_solution(log, tree);
  const Cost cost = state.original ? evaluate_cost(*state.original, mapped) : local;
  if (state.incumbent.vertices.empty() || cost < state.upper_bound - kEpsilon) {
    state.upper_bound = std::min(state.upper_bound, cost);
    state.incumbent = std::move(mapped);
  }
}

namespace {

std::vector<VertexId> roots_by_prize(const PcInstance& instance, int max_roots) {
  auto fixed = instance.fixed_terminals();
  std::stable_sort(fixed.begin(), fixed.end(),
                   [&](VertexId a, VertexId b) { return instance.prize(a) > instance.prize(b); });
  if (fixed.size() > static_cast<std::size_t>(std::max(max_roots, 1))) fixed.resize(std::max(max_roots, 1));
  return fixed;
}

BoundRun run_pc(const PcInstance& instance) {
  BoundRun run{transform_pc(instance), {}, 0};
  run.result = dual_ascent(run.sap);
  run.bound = run.sap.to_pc_objective(run.result.lower_bound);
  return run;
}

BoundRun run_rooted(const PcInstance& instance, VertexId root) {
  BoundRun run{transform_rpc(instance, root, root), {}, 0};
  run.result = dual_ascent(run.sap);
  run.bound = run.sap.to_pc_objective(run.result.lower_bound);
  return run;
}

/// Vertices of each component of the alive graph.
std::vector<std::vector<VertexId>> components(const PcInstance& instance) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(instance.vertex_count(), 0);
  for (VertexId v : instance.alive_vertices()) {
    if (seen[v]) continue;
    out.emplace_back();
    std::vector<VertexId> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (const auto& inc : instance.incident(x))
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
    }
  }
  return out;
}

bool still_valid(const PcInstance& instance, const SteinerTree& tree) {
  if (tree.vertices.empty()) return false;
  try {
    validate_tree(instance, tree);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

bool fixed_split(const PcInstance& instance) {
  const auto fixed = instance.fixed_terminals();
  if (fixed.size() < 2) return false;
  for (const auto& comp : components(instance))
    if (std::find(comp.begin(), comp.end(), fixed[0]) != comp.end())
      return std::any_of(fixed.begin(), fixed.end(),
                         [&](VertexId f) { return std::find(comp.begin(), comp.end(), f) == comp.end(); });
  return false;
}

}  // namespace

std::vector<BoundRun> dual_bounds(const PcInstance& instance, int max_roots) {
  std::vector<BoundRun> out;
  if (instance.terminal_count() == 0) return out;
  if (instance.fixed_terminals().empty()) {
    out.push_back(run_pc(instance));
    return out;
  }
  for (VertexId root : roots_by_prize(instance, max_roots)) out.push_back(run_rooted(instance, root));
  return out;
}

Cost dual_lower_bound(const PcInstance& instance, int max_roots) {
  if (instance.terminal_count() == 0) return instance.offset();
  try {
    Cost best = -kInfinity;
    for (const auto& run : dual_bounds(instance, max_roots)) best = std::max(best, run.bound);
    return best;
  } catch (const InfeasibleError&) {
    return kInfinity;
  }
}

std::size_t basic_reductions(PcInstance& instance, EventLog& log) {
  const std::size_t before = log.size();
  for (bool changed = true; changed;) {
    changed = false;
    const bool any_fixed = !instance.fixed_terminals().empty();

    // Components that cannot hold a solution.
    auto comps = components(instance);
    if (comps.size() > 1) {
      std::vector<char> useful(comps.size(), 0);
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c])
          if (any_fixed ? instance.fixed(v) : instance.is_terminal(v)) useful[c] = 1;
      const bool none_useful = std::find(useful.begin(), useful.end(), 1) == useful.end();
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (useful[c] || (none_useful && c == 0)) continue;
        for (VertexId v : comps[c]) apply::delete_vertex(instance, log, v);
        changed = true;
      }
      if (changed) continue;
    }

    const auto terms = instance.terminals();
    if (terms.size() == 1 && instance.alive_vertex_count() > 1) {
      // The lone terminal by itself is the unique optimum.
      for (VertexId v : instance.alive_vertices())
        if (v != terms[0]) apply::delete_vertex(instance, log, v);
      changed = true;
      continue;
    }
    if (terms.empty() && instance.alive_vertex_count() > 1) {
      const auto alive = instance.alive_vertices();
      for (std::size_t i = 1; i < alive.size(); ++i) apply::delete_vertex(instance, log, alive[i]);
      changed = true;
      continue;
    }

    for (VertexId v : instance.alive_vertices()) {
      if (!instance.alive(v) || instance.is_terminal(v)) continue;
      const std::size_t deg = instance.degree(v);
      if (deg <= 1 && instance.alive_vertex_count() > 1) {
        apply::delete_vertex(instance, log, v);
        changed = true;
      } else if (deg == 2) {
        apply::pseudo_eliminate(instance, log, v);
        changed = true;
      }
    }
    if (instance.fixed_terminals().size() >= 2) {
      for (VertexId f : instance.fixed_terminals()) {
        if (instance.alive(f) && instance.degree(f) == 1 && instance.fixed_terminals().size() >= 2) {
          apply::contract_leaf(instance, log, f);
          changed = true;
        }
      }
    }
  }
  return log.size() - before;
}

std::vector<ReductionEvent> probe_vertex(PcInstance& instance, EventLog& log, VertexId t, Cost upper_bound,
                                         int max_roots) {
  if (!instance.is_unfixed_terminal(t)) throw PreconditionError("probing needs an unfixed terminal");
  const std::size_t first = log.size();

  PcInstance with = instance;
  EventLog scratch_with(with);
  apply::fix_terminal(with, scratch_with, t);
  basic_reductions(with, scratch_with);
  const Cost bound_with = dual_lower_bound(with, max_roots);

  PcInstance without = instance;
  EventLog scratch_without(without);
  apply::delete_vertex(without, scratch_without, t);
  basic_reductions(without, scratch_without);
  const Cost bound_without = dual_lower_bound(without, max_roots);

  const bool rule_out_with = bound_with > upper_bound + kEpsilon;
  const bool rule_out_without = bound_without > upper_bound + kEpsilon;
  if (rule_out_with && !rule_out_without) apply::delete_vertex(instance, log, t);
  else if (rule_out_without && !rule_out_with) apply::fix_terminal(instance, log, t);
  return {log.events().begin() + static_cast<long>(first), log.events().end()};
}

void reduce_in_place(PcInstance& instance, EventLog& log, ReduceState& state, const ReduceConfig& config) {
  for (int round = 0; round < config.max_rounds; ++round) {
    const std::size_t start = log.size();
    ++state.rounds;
    const long budget = config.walk_budget > 0 ? config.walk_budget : default_edge_budget(instance);

    basic_reductions(instance, log);
    if (fixed_split(instance)) {
      state.lower_bound = kInfinity;
      return;
    }

    if (config.walk_tests) {
      for (const auto& d : edge_deletion_pass(instance, budget, config.equality))
        apply::delete_edge(instance, log, d.edge, d.equality ? Safety::SomeOptimum : Safety::AllOptima);
      basic_reductions(instance, log);
    }

    if (!still_valid(instance, state.local_incumbent)) {
      state.local_incumbent = {};
      state.local_incumbent_cost = kInfinity;
    }
    offer_incumbent(instance, log, state,
                    best_heuristic_tree(instance, static_cast<std::size_t>(config.heuristic_starts), budget,
                                        config.heuristic_rounds));

    if (config.bound_tests && instance.terminal_count() >= 2 && std::isfinite(state.upper_bound)) {
      const int moves = config.region_rounds >= 0 ? config.region_rounds : default_improvement_rounds(instance);
      const TerminalRegions regions = build_regions(instance, moves);
      const bool tie_ok = config.equality && !state.local_incumbent.vertices.empty() &&
                          cost_equal(state.local_incumbent_cost, state.upper_bound);
      const SteinerTree* witness = tie_ok ? &state.local_incumbent : nullptr;
      apply_bound_eliminations(instance, log, regions, state.upper_bound, witness);
      basic_reductions(instance, log);
    }

    if (config.dual_ascent && instance.terminal_count() > 0) {
      try {
        std::vector<ReachSet> reach;
        for (VertexId t : instance.unfixed_terminals()) reach.push_back(left_reach_set(instance, t, budget));
        std::vector<VertexId> done_roots;
        for (int k = 0; k < std::max(config.max_roots, 1); ++k) {
          if (instance.terminal_count() == 0) break;
          BoundRun run;
          if (instance.fixed_terminals().empty()) {
            if (k > 0) break;
            run = run_pc(instance);
          } else {
            VertexId root = kNoVertex;
            for (VertexId r : roots_by_prize(instance, static_cast<int>(instance.vertex_count())))
              if (std::find(done_roots.begin(), done_roots.end(), r) == done_roots.end()) {
                root = r;
                break;
              }
            if (root == kNoVertex) break;
            done_roots.push_back(root);
            run = run_rooted(instance, root);
          }
          state.lower_bound = std::max(state.lower_bound, run.bound);
          da_reductions(instance, log, run.sap, run.result, state.upper_bound, reach);
          basic_reductions(instance, log);
        }
      } catch (const InfeasibleError&) {
        state.lower_bound = kInfinity;
        return;
      }
    }

    if (config.probing && std::isfinite(state.upper_bound)) {
      auto candidates = instance.unfixed_terminals();
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](VertexId a, VertexId b) { return instance.prize(a) > instance.prize(b); });
      if (candidates.size() > static_cast<std::size_t>(config.probe_limit)) candidates.resize(config.probe_limit);
      for (VertexId t : candidates)
        if (instance.is_unfixed_terminal(t)) probe_vertex(instance, log, t, state.upper_bound, config.max_roots);
      basic_reductions(instance, log);
    }

    if (log.size() == start) break;
  }
}

ReduceResult reduce_loop(const PcInstance& instance, const ReduceConfig& config) {
  ReduceResult out;
  out.instance = instance;
  out.log = EventLog(instance);
  ReduceState state;
  state.original = &instance;
  reduce_in_place(out.instance, out.log, state, config);
  if (state.incumbent.vertices.empty() && out.instance.alive_vertex_count() > 0 && state.lower_bound < kInfinity)
    offer_incumbent(out.instance, out.log, state, best_heuristic_tree(out.instance));
  out.upper_bound = state.upper_bound;
  out.incumbent = state.incumbent;
  out.lower_bound = state.lower_bound;
  out.rounds = state.rounds;
  return out;
}

}  // namespace steinred
