#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "steinred/instance.hpp"

namespace steinred {

/// Raw sectioned view of an `.stp` file, kept for diagnostics.
struct StpDocument {
  struct Line {
    std::size_t number;
    std::string text;
  };
  struct Section {
    std::string name;
    std::size_t first_line;
    std::vector<Line> lines;
  };
  std::string source;
  std::vector<Section> sections;
};

/// Splits the text into sections. Throws ParseError on a missing header,
/// unterminated section or missing EOF marker.
StpDocument tokenize_stp(std::string_view text, std::string source = "<memory>");

/// Parses a SteinLib / DIMACS prize-collecting file. `E i j c` edges, `TP i p`
/// prizes, `T i` / `Root i` / `RootP i` fixed terminals. Parallel edges are
/// collapsed to the cheapest, self-loops dropped, and disconnected graphs
/// rejected. Non-fatal oddities (e.g. a wrong `Terminals` count) are appended
/// to `warnings` when given.
PcInstance parse_stp(std::string_view text, std::vector<std::string>* warnings = nullptr);
PcInstance read_stp_file(const std::filesystem::path& path,
                         std::vector<std::string>* warnings = nullptr);

/// Canonical writer: Comment, Graph, Terminals; alive vertices renumbered
/// consecutively in id order, alive edges in id order.
std::string write_stp(const PcInstance& instance, std::string_view name = "");

/// Solution files: `Value <objective>`, then `V <id>` lines, then `E <i> <j>`
/// lines, all 1-based.
std::string write_solution(const PcInstance& instance, const SteinerTree& tree);

struct SolutionFile {
  Cost claimed_value = 0;
  SteinerTree tree;
};

/// Resolves `E i j` lines against the instance. Throws ParseError on syntax
/// errors or unknown vertices/edges.
SolutionFile parse_solution(std::string_view text, const PcInstance& instance);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace steinred
