#include "steinred/sap.hpp"

#include <algorithm>
#include <string>

namespace steinred {

bool SapInstance::is_terminal(VertexId v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

namespace {

void add_arc(SapInstance& sap, VertexId tail, VertexId head, Cost cost, ArcOrigin origin, int ref) {
  const int id = static_cast<int>(sap.arcs.size());
  sap.arcs.push_back({tail, head, cost, origin, ref});
  sap.out_arcs[tail].push_back(id);
  sap.in_arcs[head].push_back(id);
}

SapInstance base_sap(const PcInstance& instance, std::size_t extra) {
  SapInstance sap;
  sap.original_vertex_count = instance.vertex_count();
  sap.vertex_count = instance.vertex_count() + extra;
  sap.offset = instance.offset();
  sap.copy_of.assign(sap.vertex_count, kNoVertex);
  sap.prize_arc.assign(instance.vertex_count(), -1);
  sap.out_arcs.resize(sap.vertex_count);
  sap.in_arcs.resize(sap.vertex_count);
  for (EdgeId e : instance.alive_edges()) {
    const Edge& edge = instance.edge(e);
    add_arc(sap, edge.u, edge.v, edge.cost, ArcOrigin::Forward, e);
    add_arc(sap, edge.v, edge.u, edge.cost, ArcOrigin::Backward, e);
  }
  return sap;
}

}  // namespace

SapInstance transform_pc(const PcInstance& instance) {
  if (!instance.fixed_terminals().empty())
    throw PreconditionError("transform_pc needs an instance without fixed terminals");
  const auto terms = instance.terminals();
  if (terms.empty()) throw PreconditionError("transform_pc needs at least one terminal");
  SapInstance sap = base_sap(instance, 2 + terms.size());
  sap.kind = Transformation::PrizeCollecting;
  const auto n = static_cast<VertexId>(instance.vertex_count());
  sap.root = n;
  sap.collector = n + 1;
  for (VertexId t : terms) sap.big_m += instance.prize(t);
  sap.terminals.push_back(sap.root);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const VertexId t = terms[i];
    const VertexId copy = n + 2 + static_cast<VertexId>(i);
    sap.copy_of[copy] = t;
    sap.terminals.push_back(copy);
    add_arc(sap, sap.root, t, sap.big_m, ArcOrigin::Root, t);
    add_arc(sap, t, sap.collector, 0, ArcOrigin::Sink, t);
    add_arc(sap, t, copy, 0, ArcOrigin::Zero, t);
    sap.prize_arc[t] = static_cast<int>(sap.arcs.size());
    add_arc(sap, sap.collector, copy, instance.prize(t), ArcOrigin::Prize, t);
  }
  std::sort(sap.terminals.begin(), sap.terminals.end());
  return sap;
}

SapInstance transform_rpc(const PcInstance& instance, VertexId tp, VertexId tq) {
  if (!instance.alive(tp) || !instance.fixed(tp) || !instance.alive(tq) || !instance.fixed(tq))
    throw PreconditionError("transform_rpc needs fixed terminals as root and prize source");
  const auto unfixed = instance.unfixed_terminals();
  SapInstance sap = base_sap(instance, unfixed.size());
  sap.kind = Transformation::Rooted;
  sap.root = tq;
  sap.prize_source = tp;
  const auto n = static_cast<VertexId>(instance.vertex_count());
  for (std::size_t i = 0; i < unfixed.size(); ++i) {
    const VertexId t = unfixed[i];
    const VertexId copy = n + static_cast<VertexId>(i);
    sap.copy_of[copy] = t;
    sap.terminals.push_back(copy);
    add_arc(sap, t, copy, 0, ArcOrigin::Zero, t);
    sap.prize_arc[t] = static_cast<int>(sap.arcs.size());
    add_arc(sap, tp, copy, instance.prize(t), ArcOrigin::Prize, t);
  }
  for (VertexId f : instance.fixed_terminals()) sap.terminals.push_back(f);
  std::sort(sap.terminals.begin(), sap.terminals.end());
  return sap;
}

void validate_arborescence(const SapInstance& sap, const std::vector<int>& arcs) {
  std::vector<int> incoming(sap.vertex_count, -1);
  std::vector<std::vector<int>> out(sap.vertex_count);
  for (int a : arcs) {
    if (a < 0 || static_cast<std::size_t>(a) >= sap.arcs.size())
      throw ValidationError("arborescence uses unknown arc " + std::to_string(a));
    const Arc& arc = sap.arcs[a];
    if (arc.head == sap.root) throw ValidationError("arborescence enters the root");
    if (incoming[arc.head] >= 0) throw ValidationError("arborescence enters a vertex twice");
    incoming[arc.head] = a;
    out[arc.tail].push_back(a);
  }
  std::vector<char> reached(sap.vertex_count, 0);
  std::vector<VertexId> stack{sap.root};
  reached[sap.root] = 1;
  std::size_t used = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int a : out[v]) {
      ++used;
      reached[sap.arcs[a].head] = 1;
      stack.push_back(sap.arcs[a].head);
    }
  }
  if (used != arcs.size()) throw ValidationError("arborescence has arcs not reachable from the root");
  for (VertexId t : sap.terminals)
    if (!reached[t]) throw ValidationError("arborescence misses terminal " + std::to_string(t));
}

Cost arborescence_cost(const SapInstance& sap, const std::vector<int>& arcs) {
  Cost sum = 0;
  for (int a : arcs) sum += sap.arcs[a].cost;
  return sum;
}

SteinerTree backmap_solution(const SapInstance& sap, const std::vector<int>& arcs) {
  validate_arborescence(sap, arcs);
  SteinerTree tree;
  int root_arcs = 0;
  for (int a : arcs) {
    const Arc& arc = sap.arcs[a];
    if (arc.origin == ArcOrigin::Forward || arc.origin == ArcOrigin::Backward) {
      tree.edges.push_back(arc.ref);
      tree.vertices.push_back(arc.tail);
      tree.vertices.push_back(arc.head);
    } else if (arc.origin == ArcOrigin::Root) {
      ++root_arcs;
      tree.vertices.push_back(arc.head);
    }
  }
  if (sap.kind == Transformation::Rooted) tree.vertices.push_back(sap.root);
  if (root_arcs > 1) throw ValidationError("arborescence uses more than one root arc");
  tree.normalize();
  return tree;
}

std::vector<int> arborescence_of(const SapInstance& sap, const PcInstance& instance,
                                 const SteinerTree& tree) {
  VertexId start = kNoVertex;
  if (sap.kind == Transformation::Rooted) {
    start = sap.root;
    if (!tree.contains(start)) throw PreconditionError("tree misses the root");
  } else {
    for (VertexId v : tree.vertices)
      if (instance.is_terminal(v)) {
        start = v;
        break;
      }
    if (start == kNoVertex) throw PreconditionError("tree contains no terminal");
  }

  std::vector<int> out;
  for (std::size_t a = 0; a < sap.arcs.size(); ++a)
    if (sap.arcs[a].origin == ArcOrigin::Root && sap.arcs[a].head == start) out.push_back(static_cast<int>(a));

  // Orient the tree edges away from `start`.
  std::vector<char> seen(sap.vertex_count, 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int a : sap.out_arcs[v]) {
      const Arc& arc = sap.arcs[a];
      if (arc.origin != ArcOrigin::Forward && arc.origin != ArcOrigin::Backward) continue;
      if (!tree.uses(arc.ref) || seen[arc.head]) continue;
      seen[arc.head] = 1;
      out.push_back(a);
      stack.push_back(arc.head);
    }
  }

  bool needs_collector = false;
  for (std::size_t v = 0; v < sap.original_vertex_count; ++v) {
    const int prize = sap.prize_arc[v];
    if (prize < 0) continue;
    if (tree.contains(static_cast<VertexId>(v))) {
      for (int a : sap.out_arcs[v])
        if (sap.arcs[a].origin == ArcOrigin::Zero) out.push_back(a);
    } else {
      out.push_back(prize);
      needs_collector = true;
    }
  }
  if (needs_collector && sap.kind == Transformation::PrizeCollecting)
    for (int a : sap.out_arcs[start])
      if (sap.arcs[a].origin == ArcOrigin::Sink) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace steinred
