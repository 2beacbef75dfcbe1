#include "steinred/stp_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace steinred {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

long parse_integer(std::string_view word, std::size_t line) {
  long value = 0;
  auto res = std::from_chars(word.data(), word.data() + word.size(), value);
  if (res.ec != std::errc() || res.ptr != word.data() + word.size())
    throw ParseError("expected an integer, got '" + std::string(word) + "'", line);
  return value;
}

Cost parse_number(std::string_view word, std::size_t line) {
  Cost value = 0;
  auto res = std::from_chars(word.data(), word.data() + word.size(), value);
  if (res.ec != std::errc() || res.ptr != word.data() + word.size() || !is_finite(value))
    throw ParseError("expected a number, got '" + std::string(word) + "'", line);
  return value;
}

void expect_arity(const std::vector<std::string_view>& words, std::size_t n, std::size_t line) {
  if (words.size() != n)
    throw ParseError("'" + std::string(words.front()) + "' expects " + std::to_string(n - 1) +
                         " arguments",
                     line);
}

}  // namespace

StpDocument tokenize_stp(std::string_view text, std::string source) {
  StpDocument doc;
  doc.source = std::move(source);
  std::size_t line_no = 0;
  bool header_seen = false;
  bool eof_seen = false;
  StpDocument::Section* open = nullptr;
  std::size_t pos = 0;
  while (pos <= text.size() && !eof_seen) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line.size() < 8 || !iequals(line.substr(0, 8), "33D32945"))
        throw ParseError("missing STP header", line_no);
      header_seen = true;
      continue;
    }
    const auto words = split_words(line);
    if (open == nullptr) {
      if (iequals(words[0], "EOF")) {
        eof_seen = true;
      } else if (iequals(words[0], "SECTION") && words.size() >= 2) {
        doc.sections.push_back({std::string(words[1]), line_no, {}});
        open = &doc.sections.back();
      } else {
        throw ParseError("unexpected line outside of a section", line_no);
      }
    } else if (iequals(words[0], "END")) {
      open = nullptr;
    } else {
      open->lines.push_back({line_no, std::string(line)});
    }
  }
  if (!header_seen) throw ParseError("missing STP header", std::max<std::size_t>(line_no, 1));
  if (open != nullptr) throw ParseError("section " + open->name + " is not terminated", line_no);
  if (!eof_seen) throw ParseError("missing EOF marker", line_no);
  return doc;
}

PcInstance parse_stp(std::string_view text, std::vector<std::string>* warnings) {
  const StpDocument doc = tokenize_stp(text);
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };

  long nodes = -1;
  long declared_edges = -1;
  std::size_t graph_end_line = 0;
  struct RawEdge {
    long u, v;
    Cost cost;
    std::size_t line;
  };
  std::vector<RawEdge> raw_edges;
  struct RawTerminal {
    long v;
    Cost prize;
    bool fixed;
    std::size_t line;
  };
  std::vector<RawTerminal> raw_terminals;
  long declared_terminals = -1;
  std::size_t terminals_line = 0;
  Cost offset = 0;
  std::size_t last_line = 1;

  for (const auto& section : doc.sections) {
    if (!section.lines.empty()) last_line = std::max(last_line, section.lines.back().number);
    if (iequals(section.name, "Comment")) {
      for (const auto& line : section.lines) {
        const auto words = split_words(line.text);
        if (iequals(words[0], "Offset")) {
          expect_arity(words, 2, line.number);
          offset = parse_number(words[1], line.number);
        } else if (iequals(words[0], "Prize")) {
          expect_arity(words, 3, line.number);
          const Cost p = parse_number(words[2], line.number);
          if (p < 0) throw ParseError("negative prize", line.number);
          raw_terminals.push_back({parse_integer(words[1], line.number), p, true, line.number});
        }
      }
    } else if (iequals(section.name, "Graph")) {
      graph_end_line = section.first_line;
      for (const auto& line : section.lines) {
        graph_end_line = line.number;
        const auto words = split_words(line.text);
        if (iequals(words[0], "Nodes")) {
          expect_arity(words, 2, line.number);
          nodes = parse_integer(words[1], line.number);
          if (nodes < 0) throw ParseError("negative node count", line.number);
        } else if (iequals(words[0], "Edges")) {
          expect_arity(words, 2, line.number);
          declared_edges = parse_integer(words[1], line.number);
        } else if (iequals(words[0], "E")) {
          expect_arity(words, 4, line.number);
          const Cost c = parse_number(words[3], line.number);
          if (!(c > 0)) throw ParseError("non-positive edge cost", line.number);
          raw_edges.push_back({parse_integer(words[1], line.number),
                               parse_integer(words[2], line.number), c, line.number});
        } else if (iequals(words[0], "A") || iequals(words[0], "Arcs")) {
          throw ParseError("directed arcs are not supported", line.number);
        } else {
          throw ParseError("unknown Graph keyword '" + std::string(words[0]) + "'", line.number);
        }
      }
    } else if (iequals(section.name, "Terminals")) {
      for (const auto& line : section.lines) {
        const auto words = split_words(line.text);
        if (iequals(words[0], "Terminals")) {
          expect_arity(words, 2, line.number);
          declared_terminals = parse_integer(words[1], line.number);
          terminals_line = line.number;
        } else if (iequals(words[0], "TP")) {
          expect_arity(words, 3, line.number);
          const Cost p = parse_number(words[2], line.number);
          if (p < 0) throw ParseError("negative prize", line.number);
          raw_terminals.push_back({parse_integer(words[1], line.number), p, false, line.number});
        } else if (iequals(words[0], "T") || iequals(words[0], "Root") || iequals(words[0], "RootP")) {
          expect_arity(words, 2, line.number);
          raw_terminals.push_back({parse_integer(words[1], line.number), 0, true, line.number});
        } else {
          throw ParseError("unknown Terminals keyword '" + std::string(words[0]) + "'", line.number);
        }
      }
    }
    // Other sections (coordinates, presolve, ...) are ignored.
  }

  if (nodes < 0) throw ParseError("missing Nodes declaration", graph_end_line ? graph_end_line : 1);
  if (declared_edges >= 0 && static_cast<std::size_t>(declared_edges) != raw_edges.size())
    throw ParseError("edge count mismatch: declared " + std::to_string(declared_edges) + ", found " +
                         std::to_string(raw_edges.size()),
                     graph_end_line);

  PcInstance instance(static_cast<std::size_t>(nodes));
  auto check_id = [&](long id, std::size_t line) {
    if (id < 1 || id > nodes) throw ParseError("vertex id " + std::to_string(id) + " out of range", line);
    return static_cast<VertexId>(id - 1);
  };
  for (const auto& e : raw_edges) {
    const VertexId u = check_id(e.u, e.line);
    const VertexId v = check_id(e.v, e.line);
    if (u == v) {
      warn("self-loop dropped at line " + std::to_string(e.line));
      continue;
    }
    if (auto existing = instance.find_edge(u, v)) {
      // Parallel edges collapse onto the first id, keeping the cheapest cost.
      if (e.cost < instance.edge(*existing).cost) instance.set_edge_cost(*existing, e.cost);
      continue;
    }
    instance.add_edge(u, v, e.cost);
  }

  std::size_t terminal_lines = 0;
  for (const auto& t : raw_terminals) {
    const VertexId v = check_id(t.v, t.line);
    if (t.fixed) {
      instance.set_fixed(v);
      if (t.prize > 0) instance.set_prize(v, t.prize);
    } else {
      instance.set_prize(v, t.prize);
    }
  }
  for (const auto& section : doc.sections)
    if (iequals(section.name, "Terminals"))
      for (const auto& line : section.lines)
        if (!iequals(split_words(line.text)[0], "Terminals")) ++terminal_lines;
  if (declared_terminals >= 0 && static_cast<std::size_t>(declared_terminals) != terminal_lines)
    warn("Terminals count mismatch at line " + std::to_string(terminals_line) + ": declared " +
         std::to_string(declared_terminals) + ", found " + std::to_string(terminal_lines));

  instance.add_offset(offset);
  if (!instance.connected()) throw ParseError("graph is disconnected", last_line);
  return instance;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PcInstance read_stp_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  return parse_stp(read_text_file(path), warnings);
}

std::string write_stp(const PcInstance& instance, std::string_view name) {
  std::vector<long> number(instance.vertex_count(), 0);
  long next = 0;
  for (VertexId v : instance.alive_vertices()) number[v] = ++next;

  std::ostringstream out;
  out << "33D32945 STP File, STP Format Version 1.0\n\n";
  out << "SECTION Comment\n";
  if (!name.empty()) out << "Name \"" << name << "\"\n";
  out << "Offset " << format_cost(instance.offset()) << "\n";
  for (VertexId v : instance.alive_vertices())
    if (instance.fixed(v) && instance.prize(v) > 0)
      out << "Prize " << number[v] << " " << format_cost(instance.prize(v)) << "\n";
  out << "END\n\n";

  out << "SECTION Graph\n";
  out << "Nodes " << instance.alive_vertex_count() << "\n";
  out << "Edges " << instance.alive_edge_count() << "\n";
  for (EdgeId e : instance.alive_edges()) {
    const Edge& edge = instance.edge(e);
    out << "E " << number[edge.u] << " " << number[edge.v] << " " << format_cost(edge.cost) << "\n";
  }
  out << "END\n\n";

  std::vector<std::string> lines;
  for (VertexId v : instance.alive_vertices()) {
    if (instance.fixed(v))
      lines.push_back("T " + std::to_string(number[v]));
    else if (instance.prize(v) > 0)
      lines.push_back("TP " + std::to_string(number[v]) + " " + format_cost(instance.prize(v)));
  }
  out << "SECTION Terminals\n";
  out << "Terminals " << lines.size() << "\n";
  for (const auto& l : lines) out << l << "\n";
  out << "END\n\nEOF\n";
  return out.str();
}

std::string write_solution(const PcInstance& instance, const SteinerTree& tree) {
  std::ostringstream out;
  out << "Value " << format_cost(evaluate_cost(instance, tree)) << "\n";
  for (VertexId v : tree.vertices) out << "V " << v + 1 << "\n";
  for (EdgeId e : tree.edges) {
    const Edge& edge = instance.edge(e);
    out << "E " << std::min(edge.u, edge.v) + 1 << " " << std::max(edge.u, edge.v) + 1 << "\n";
  }
  return out.str();
}

SolutionFile parse_solution(std::string_view text, const PcInstance& instance) {
  SolutionFile sol;
  bool value_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const auto n = static_cast<long>(instance.vertex_count());
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    auto vertex = [&](std::string_view w) {
      const long id = parse_integer(w, line_no);
      if (id < 1 || id > n || !instance.alive(static_cast<VertexId>(id - 1)))
        throw ParseError("unknown vertex " + std::string(w), line_no);
      return static_cast<VertexId>(id - 1);
    };
    if (iequals(words[0], "Value")) {
      expect_arity(words, 2, line_no);
      sol.claimed_value = parse_number(words[1], line_no);
      value_seen = true;
    } else if (iequals(words[0], "V")) {
      expect_arity(words, 2, line_no);
      sol.tree.vertices.push_back(vertex(words[1]));
    } else if (iequals(words[0], "E")) {
      expect_arity(words, 3, line_no);
      const VertexId a = vertex(words[1]);
      const VertexId b = vertex(words[2]);
      const auto e = instance.find_edge(a, b);
      if (!e) throw ParseError("no edge between " + std::string(words[1]) + " and " + std::string(words[2]), line_no);
      sol.tree.edges.push_back(*e);
    } else {
      throw ParseError("unknown solution keyword '" + std::string(words[0]) + "'", line_no);
    }
  }
  if (!value_seen) throw ParseError("missing Value line", std::max<std::size_t>(line_no, 1));
  sol.tree.normalize();
  return sol;
}

}  // namespace steinred
