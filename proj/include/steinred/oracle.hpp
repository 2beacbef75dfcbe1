#pragma once

#include <vector>

#include "steinred/instance.hpp"
#include "steinred/sap.hpp"

namespace steinred {

inline constexpr std::size_t kOracleVertexLimit = 20;
inline constexpr std::size_t kSapOracleSteinerLimit = 16;

struct OracleResult {
  Cost optimum = kInfinity;
  /// All optimal vertex sets (sorted) when requested, else just the first.
  std::vector<std::vector<VertexId>> optimal_sets;
  SteinerTree tree;  ///< minimum spanning tree of the first optimal set
};

/// Exhaustive search over connected vertex subsets containing every fixed
/// terminal, each priced by its induced minimum spanning tree. Refuses
/// instances with more than kOracleVertexLimit alive vertices.
OracleResult brute_force_opt(const PcInstance& instance, bool enumerate_all = false);

struct SapOracleResult {
  Cost optimum = kInfinity;
  std::vector<int> arcs;  ///< sorted arc ids of an optimal arborescence
};

/// Exact arborescence optimum: every choice of non-terminal vertices, each
/// solved by a minimum spanning arborescence. Refuses instances with more
/// than kSapOracleSteinerLimit non-terminals.
SapOracleResult brute_force_sap(const SapInstance& sap);

/// Minimum spanning arborescence of the vertices marked in `use` (arcs with
/// both ends marked), or an empty optional if some vertex is unreachable.
std::optional<std::vector<int>> min_arborescence(const SapInstance& sap, const std::vector<char>& use);

}  // namespace steinred
