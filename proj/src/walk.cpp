#include "steinred/walk.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "walk_search.hpp"

namespace steinred {

namespace detail {

WalkSearch::WalkSearch(const PcInstance& instance, WalkSearchParams params)
    : instance_(instance), params_(params), best_(instance.vertex_count(), -1) {}

bool WalkSearch::is_target(VertexId v) const {
  if (v == params_.target) return true;
  return !params_.target_mask.empty() && params_.target_mask[v] != 0;
}

bool WalkSearch::is_breakpoint(VertexId v) const {
  return instance_.is_terminal(v) || is_target(v);
}

Cost WalkSearch::certified(int record) const {
  return std::max(records_[record].peak, records_[record].pre);
}

PcWalk WalkSearch::walk_to(int record) const {
  PcWalk walk;
  for (int r = record; r >= 0; r = records_[r].parent) {
    walk.vertices.push_back(records_[r].vertex);
    if (records_[r].via != kNoEdge) walk.edges.push_back(records_[r].via);
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());
  return walk;
}

void WalkSearch::run() {
  using Entry = std::tuple<Cost, VertexId, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<int> expansions(instance_.vertex_count(), 0);
  const VertexId source = params_.source;

  records_.push_back({source, kNoEdge, -1, 0.0, 0.0, -kInfinity});
  best_[source] = 0;
  queue.emplace(0.0, source, 0);
  long relaxations = 0;

  while (!queue.empty()) {
    const auto [label, v, r] = queue.top();
    queue.pop();
    if (best_[v] != r) continue;
    const bool terminal = instance_.is_terminal(v) || v == source;
    if (terminal ? expansions[v] > 0 : expansions[v] > params_.reinsert_limit) continue;
    if (v != source && is_target(v)) {
      hit_ = r;
      return;
    }
    ++expansions[v];
    const SearchRecord here = records_[r];
    const Cost peak = is_breakpoint(v) && v != source ? std::max(here.peak, here.pre) : here.peak;
    for (const auto& inc : instance_.incident(v)) {
      if (inc.edge == params_.skip_edge) continue;
      const VertexId w = inc.neighbor;
      if (w == source) continue;
      if (++relaxations > params_.budget) return;
      const Cost pre = here.label + instance_.edge(inc.edge).cost;
      if (params_.allow_equal ? pre > params_.cap + kEpsilon : pre >= params_.cap) continue;
      const bool w_terminal = instance_.is_terminal(w);
      if (w_terminal && expansions[w] > 0) continue;
      Cost next = pre;
      if (w_terminal && !is_target(w)) {
        const Cost p = instance_.fixed(w) ? params_.fixed_prize : instance_.prize(w);
        next = params_.mode == detail::PrizeMode::Clamped ? std::max(pre - p, 0.0) : pre - p;
      }
      if (best_[w] >= 0 && !(next < records_[best_[w]].label - kEpsilon)) continue;
      if (!w_terminal && expansions[w] > params_.reinsert_limit) continue;
      records_.push_back({w, inc.edge, r, pre, next, peak});
      best_[w] = static_cast<int>(records_.size()) - 1;
      queue.emplace(next, w, best_[w]);
    }
  }
}

}  // namespace detail

void validate_walk(const PcInstance& instance, const PcWalk& walk) {
  if (walk.vertices.empty()) throw ValidationError("walk has no vertices");
  if (walk.edges.size() + 1 != walk.vertices.size())
    throw ValidationError("walk edge count is not vertex count - 1");
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const EdgeId e = walk.edges[i];
    if (e < 0 || static_cast<std::size_t>(e) >= instance.edge_count() || !instance.edge_alive(e))
      throw ValidationError("walk uses a missing edge");
    const Edge& edge = instance.edge(e);
    const VertexId a = walk.vertices[i];
    const VertexId b = walk.vertices[i + 1];
    if (!((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)))
      throw ValidationError("walk edge " + std::to_string(e) + " is not incident to its vertices");
  }
  std::vector<VertexId> guarded;
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    const VertexId v = walk.vertices[i];
    if (instance.is_terminal(v) || v == walk.first() || v == walk.last()) guarded.push_back(v);
  }
  // A closed walk repeats its endpoint by definition; everything else counts.
  std::sort(guarded.begin(), guarded.end());
  if (std::adjacent_find(guarded.begin(), guarded.end()) != guarded.end())
    throw ValidationError("walk repeats a terminal or an endpoint");
}

WalkLengths prize_constrained_length(const PcInstance& instance, const PcWalk& walk) {
  validate_walk(instance, walk);
  const std::size_t r = walk.vertices.size();
  // prefix[i] = c_pc-style running sum up to vertex i, counting every
  // vertex strictly before i (and after 0) as interior.
  std::vector<Cost> edge_prefix(r, 0.0);
  std::vector<Cost> prize_prefix(r, 0.0);
  for (std::size_t i = 1; i < r; ++i) {
    edge_prefix[i] = edge_prefix[i - 1] + instance.edge(walk.edges[i - 1]).cost;
    prize_prefix[i] = prize_prefix[i - 1] + instance.effective_prize(walk.vertices[i]);
  }
  auto subwalk_cost = [&](std::size_t k, std::size_t l) -> Cost {
    if (k == l) return 0.0;
    // Interior vertices are k+1 .. l-1.
    const Cost interior = l >= k + 2 ? prize_prefix[l - 1] - prize_prefix[k] : 0.0;
    const Cost edges = edge_prefix[l] - edge_prefix[k];
    if (interior == kInfinity) return -kInfinity;
    return edges - interior;
  };
  // Infinite prizes make prefix differences ill-defined; recompute directly.
  const bool has_fixed_interior = std::any_of(walk.vertices.begin(), walk.vertices.end(),
                                              [&](VertexId v) { return instance.fixed(v); });
  auto exact_cost = [&](std::size_t k, std::size_t l) -> Cost {
    if (!has_fixed_interior) return subwalk_cost(k, l);
    Cost sum = 0;
    for (std::size_t i = k; i < l; ++i) sum += instance.edge(walk.edges[i]).cost;
    for (std::size_t i = k + 1; i < l; ++i) sum -= instance.effective_prize(walk.vertices[i]);
    return sum;
  };

  std::vector<std::size_t> breaks;
  for (std::size_t i = 0; i < r; ++i)
    if (i == 0 || i + 1 == r || instance.is_terminal(walk.vertices[i])) breaks.push_back(i);

  WalkLengths out{exact_cost(0, r - 1), -kInfinity, -kInfinity};
  for (std::size_t a = 0; a < breaks.size(); ++a)
    for (std::size_t b = a; b < breaks.size(); ++b)
      out.length = std::max(out.length, exact_cost(breaks[a], breaks[b]));
  for (std::size_t b = 0; b < breaks.size(); ++b)
    out.left_length = std::max(out.left_length, exact_cost(0, breaks[b]));
  return out;
}

long default_edge_budget(const PcInstance& instance) {
  return std::max<long>(10 * static_cast<long>(instance.alive_edge_count()), 16);
}

namespace {

WalkObserver& observer() {
  static WalkObserver instance;
  return instance;
}

WalkBound one_sided(const PcInstance& instance, VertexId from, VertexId to, Cost cap, long budget,
                    EdgeId skip_edge, bool allow_equal) {
  detail::WalkSearchParams params;
  params.source = from;
  params.target = to;
  params.cap = cap;
  params.allow_equal = allow_equal;
  params.mode = detail::PrizeMode::Clamped;
  params.skip_edge = skip_edge;
  params.budget = budget;
  detail::WalkSearch search(instance, params);
  search.run();
  WalkBound out;
  if (search.hit() < 0) return out;
  PcWalk walk = search.walk_to(search.hit());
  const Cost length = prize_constrained_length(instance, walk).length;
  const bool ok = allow_equal ? length <= cap + kEpsilon : length < cap;
  if (!ok) return out;
  out.value = length;
  out.witness = std::move(walk);
  return out;
}

}  // namespace

void set_walk_observer(WalkObserver fn) { observer() = std::move(fn); }

WalkBound dpc_upper_bound(const PcInstance& instance, VertexId vi, VertexId vj, Cost cap,
                          long edge_budget, EdgeId skip_edge, bool allow_equal) {
  WalkBound out;
  if (vi == vj) {
    out = WalkBound{0.0, PcWalk{{vi}, {}}};
  } else {
    WalkBound a = one_sided(instance, vi, vj, cap, edge_budget, skip_edge, allow_equal);
    WalkBound b = one_sided(instance, vj, vi, cap, edge_budget, skip_edge, allow_equal);
    if (b.value < a.value) {
      // Report the walk in vi -> vj orientation.
      std::reverse(b.witness.vertices.begin(), b.witness.vertices.end());
      std::reverse(b.witness.edges.begin(), b.witness.edges.end());
      out = std::move(b);
    } else {
      out = std::move(a);
    }
  }
  if (out.found() && observer()) observer()(instance, out.witness, out.value, false);
  return out;
}

std::vector<EdgeDeletion> edge_deletion_pass(const PcInstance& instance, long edge_budget,
                                             bool equality_mode) {
  std::vector<EdgeDeletion> out;
  bool equality_taken = false;
  for (EdgeId e : instance.alive_edges()) {
    const Edge& edge = instance.edge(e);
    const bool try_equal = equality_mode && !equality_taken;
    const WalkBound bound = dpc_upper_bound(instance, edge.u, edge.v, edge.cost, edge_budget, e, try_equal);
    if (!bound.found()) continue;
    if (bound.value < edge.cost - kEpsilon) {
      out.push_back({e, false});
    } else if (try_equal) {
      // Exact ties may still hide a strict walk the equality search missed;
      // either way only one equality deletion is allowed per pass.
      const WalkBound strict = dpc_upper_bound(instance, edge.u, edge.v, edge.cost, edge_budget, e, false);
      if (strict.found() && strict.value < edge.cost - kEpsilon) {
        out.push_back({e, false});
      } else {
        out.push_back({e, true});
        equality_taken = true;
      }
    }
  }
  return out;
}

ReachSet::ReachSet(VertexId source, Cost threshold, std::vector<Record> records,
                   std::vector<std::pair<VertexId, int>> members, std::vector<Cost> values)
    : source_(source), threshold_(threshold), records_(std::move(records)) {
  if (values.empty()) values.assign(members.size(), -kInfinity);
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return members[a] < members[b]; });
  for (std::size_t i : order) {
    members_.push_back(members[i]);
    member_ids_.push_back(members[i].first);
    values_.push_back(values[i]);
  }
}

Cost ReachSet::bound(VertexId member) const {
  auto it = std::lower_bound(member_ids_.begin(), member_ids_.end(), member);
  if (it == member_ids_.end() || *it != member)
    throw PreconditionError("vertex " + std::to_string(member) + " is not a reach-set member");
  return values_[static_cast<std::size_t>(it - member_ids_.begin())];
}

bool ReachSet::contains(VertexId v) const {
  return std::binary_search(member_ids_.begin(), member_ids_.end(), v);
}

PcWalk ReachSet::witness(VertexId member) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), std::pair<VertexId, int>{member, -1});
  if (it == members_.end() || it->first != member)
    throw PreconditionError("vertex " + std::to_string(member) + " is not a reach-set member");
  PcWalk walk;
  for (int r = it->second; r >= 0; r = records_[r].parent) {
    walk.vertices.push_back(records_[r].vertex);
    if (records_[r].via != kNoEdge) walk.edges.push_back(records_[r].via);
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());
  return walk;
}

ReachSet left_reach_set(const PcInstance& instance, VertexId t0, long edge_budget) {
  if (!(instance.prize(t0) > 0) && !instance.fixed(t0))
    throw PreconditionError("reach-set source must have a positive prize");
  detail::WalkSearchParams params;
  params.source = t0;
  params.cap = instance.effective_prize(t0);
  params.mode = detail::PrizeMode::Signed;
  params.budget = edge_budget;
  detail::WalkSearch search(instance, params);
  search.run();

  std::vector<ReachSet::Record> records;
  records.reserve(search.records().size());
  for (const auto& r : search.records()) records.push_back({r.vertex, r.via, r.parent});
  // Re-insertion can route a walk through its own last vertex; such records
  // are not valid witnesses, so every record is checked and the one with the
  // smallest certified bound kept per vertex.
  std::vector<int> chosen(instance.vertex_count(), -1);
  for (std::size_t r = 1; r < search.records().size(); ++r) {
    const auto& rec = search.records()[r];
    const Cost value = search.certified(static_cast<int>(r));
    if (!(value < params.cap)) continue;
    const int current = chosen[rec.vertex];
    if (current >= 0 && !(value < search.certified(current))) continue;
    bool repeats = false;
    for (int a = rec.parent; a >= 0 && !repeats; a = search.records()[a].parent)
      repeats = search.records()[a].vertex == rec.vertex;
    if (!repeats) chosen[rec.vertex] = static_cast<int>(r);
  }
  std::vector<std::pair<VertexId, int>> members;
  std::vector<Cost> values;
  for (std::size_t v = 0; v < chosen.size(); ++v)
    if (chosen[v] >= 0 && static_cast<VertexId>(v) != t0) {
      const Cost left = prize_constrained_length(instance, search.walk_to(chosen[v])).left_length;
      if (!(left < params.cap)) continue;
      members.emplace_back(static_cast<VertexId>(v), chosen[v]);
      values.push_back(left);
    }
  ReachSet out(t0, params.cap, std::move(records), std::move(members), std::move(values));
  if (observer())
    for (VertexId v : out.members()) observer()(instance, out.witness(v), out.bound(v), true);
  return out;
}

bool implies_containment(const ReachSet& reach, VertexId vj) {
  if (vj == reach.source()) return false;
  return reach.contains(vj);
}

}  // namespace steinred
