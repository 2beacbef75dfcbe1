#include "steinred/events.hpp"

#include <algorithm>
#include <sstream>

#include "steinred/union_find.hpp"

namespace steinred {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::DeleteEdge: return "DeleteEdge";
    case EventKind::DeleteVertex: return "DeleteVertex";
    case EventKind::FixTerminal: return "FixTerminal";
    case EventKind::ContractEdge: return "ContractEdge";
    case EventKind::PseudoEliminate: return "PseudoEliminate";
    case EventKind::OffsetAdd: return "OffsetAdd";
  }
  return "?";
}

const char* to_string(Safety safety) {
  return safety == Safety::AllOptima ? "all" : "some";
}

EventLog::EventLog(const PcInstance& base) : base_vertices_(base.vertex_count()) {
  edges_.reserve(base.edge_count());
  for (std::size_t e = 0; e < base.edge_count(); ++e) edges_.push_back(base.edge(static_cast<EdgeId>(e)));
}

void EventLog::push(ReductionEvent event) { events_.push_back(std::move(event)); }

void EventLog::note_edge(EdgeId id, const Edge& edge) {
  if (static_cast<std::size_t>(id) >= edges_.size()) edges_.resize(id + 1);
  edges_[id] = edge;
}

void EventLog::append(const EventLog& other) {
  if (edges_.size() < other.edges_.size()) edges_ = other.edges_;
  base_vertices_ = std::max(base_vertices_, other.base_vertices_);
  events_.insert(events_.end(), other.events_.begin(), other.events_.end());
}

std::size_t EventLog::count(EventKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(events_.begin(), events_.end(), [&](const ReductionEvent& e) { return e.kind == kind; }));
}

std::string EventLog::serialize() const {
  std::ostringstream out;
  for (const auto& ev : events_) {
    out << to_string(ev.kind) << ' ' << to_string(ev.safety);
    switch (ev.kind) {
      case EventKind::DeleteEdge:
        out << ' ' << ev.edge;
        break;
      case EventKind::DeleteVertex:
      case EventKind::FixTerminal:
        out << ' ' << ev.vertex;
        break;
      case EventKind::ContractEdge:
        out << ' ' << ev.vertex << ' ' << ev.target << ' ' << ev.edge;
        break;
      case EventKind::PseudoEliminate:
        out << ' ' << ev.vertex << ' ' << ev.replacements.size();
        for (const auto& r : ev.replacements) out << ' ' << r.created << ' ' << r.first << ' ' << r.second;
        out << ' ' << ev.removed.size();
        for (EdgeId e : ev.removed) out << ' ' << e;
        break;
      case EventKind::OffsetAdd:
        break;
    }
    out << ' ' << format_cost(ev.cost) << '\n';
  }
  return out.str();
}

namespace apply {

void delete_edge(PcInstance& instance, EventLog& log, EdgeId e, Safety safety) {
  instance.remove_edge(e);
  ReductionEvent ev;
  ev.kind = EventKind::DeleteEdge;
  ev.safety = safety;
  ev.edge = e;
  log.push(std::move(ev));
}

void delete_vertex(PcInstance& instance, EventLog& log, VertexId v, Safety safety) {
  if (instance.fixed(v)) throw PreconditionError("cannot delete a fixed terminal");
  const Cost prize = instance.prize(v);
  instance.remove_vertex(v);
  instance.add_offset(prize);
  ReductionEvent ev;
  ev.kind = EventKind::DeleteVertex;
  ev.safety = safety;
  ev.vertex = v;
  ev.cost = prize;
  log.push(std::move(ev));
}

void fix_terminal(PcInstance& instance, EventLog& log, VertexId v, Safety safety) {
  instance.set_fixed(v);
  ReductionEvent ev;
  ev.kind = EventKind::FixTerminal;
  ev.safety = safety;
  ev.vertex = v;
  log.push(std::move(ev));
}

void contract_leaf(PcInstance& instance, EventLog& log, VertexId f) {
  if (!instance.fixed(f) || instance.degree(f) != 1)
    throw PreconditionError("contraction needs a fixed terminal of degree 1");
  const Incidence inc = instance.incident(f)[0];
  const Cost c = instance.edge(inc.edge).cost;
  instance.remove_vertex(f);
  instance.set_fixed(inc.neighbor);
  instance.add_offset(c);
  ReductionEvent ev;
  ev.kind = EventKind::ContractEdge;
  ev.vertex = f;
  ev.target = inc.neighbor;
  ev.edge = inc.edge;
  ev.cost = c;
  log.push(std::move(ev));
}

const ReductionEvent& pseudo_eliminate(PcInstance& instance, EventLog& log, VertexId v, Safety safety) {
  if (instance.fixed(v) || instance.prize(v) > 0)
    throw PreconditionError("pseudo-elimination needs a vertex without prize");
  const std::vector<Incidence> around(instance.incident(v).begin(), instance.incident(v).end());
  ReductionEvent ev;
  ev.kind = EventKind::PseudoEliminate;
  ev.safety = safety;
  ev.vertex = v;
  struct Pending {
    VertexId a, b;
    Cost cost;
    EdgeId first, second;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < around.size(); ++i)
    for (std::size_t j = i + 1; j < around.size(); ++j)
      pending.push_back({around[i].neighbor, around[j].neighbor,
                         instance.edge(around[i].edge).cost + instance.edge(around[j].edge).cost,
                         around[i].edge, around[j].edge});
  instance.remove_vertex(v);
  for (const auto& p : pending) {
    if (p.a == p.b) continue;
    if (auto existing = instance.find_edge(p.a, p.b)) {
      if (instance.edge(*existing).cost <= p.cost) continue;
      instance.remove_edge(*existing);
      ev.removed.push_back(*existing);
    }
    const EdgeId created = instance.add_edge(p.a, p.b, p.cost);
    log.note_edge(created, instance.edge(created));
    ev.replacements.push_back({created, p.first, p.second});
  }
  log.push(std::move(ev));
  return log.events().back();
}

void add_offset(PcInstance& instance, EventLog& log, Cost c) {
  instance.add_offset(c);
  ReductionEvent ev;
  ev.kind = EventKind::OffsetAdd;
  ev.cost = c;
  log.push(std::move(ev));
}

}  // namespace apply

SteinerTree retransform_solution(const EventLog& log, const SteinerTree& tree) {
  const auto& table = log.edges();
  for (EdgeId e : tree.edges)
    if (e < 0 || static_cast<std::size_t>(e) >= table.size())
      throw ValidationError("tree uses edge " + std::to_string(e) + " unknown to the log");

  std::vector<char> in_vertex(log.base_vertex_count(), 0);
  std::vector<char> in_edge(table.size(), 0);
  for (VertexId v : tree.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= in_vertex.size())
      throw ValidationError("tree uses vertex " + std::to_string(v) + " unknown to the log");
    in_vertex[v] = 1;
  }
  for (EdgeId e : tree.edges) in_edge[e] = 1;

  bool expanded = false;
  const auto& events = log.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (it->kind == EventKind::ContractEdge) {
      if (in_vertex[it->target]) {
        in_vertex[it->vertex] = 1;
        in_edge[it->edge] = 1;
      }
    } else if (it->kind == EventKind::PseudoEliminate) {
      for (const auto& r : it->replacements) {
        if (!in_edge[r.created]) continue;
        in_edge[r.created] = 0;
        if (in_edge[r.first] || in_edge[r.second] || in_vertex[it->vertex]) expanded = true;
        in_edge[r.first] = 1;
        in_edge[r.second] = 1;
        in_vertex[it->vertex] = 1;
      }
    }
  }

  SteinerTree out;
  for (std::size_t v = 0; v < in_vertex.size(); ++v)
    if (in_vertex[v]) out.vertices.push_back(static_cast<VertexId>(v));
  std::vector<EdgeId> edges;
  for (std::size_t e = 0; e < in_edge.size(); ++e)
    if (in_edge[e]) edges.push_back(static_cast<EdgeId>(e));
  if (!expanded) {
    out.edges = std::move(edges);
    return out;
  }
  // Two expansions met at the revived vertex; keep the cheapest spanning tree.
  std::sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) {
    if (table[a].cost != table[b].cost) return table[a].cost < table[b].cost;
    return a < b;
  });
  UnionFind uf(in_vertex.size());
  for (EdgeId e : edges)
    if (uf.unite(table[e].u, table[e].v)) out.edges.push_back(e);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace steinred
