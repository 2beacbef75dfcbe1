#pragma once

#include <vector>

#include "steinred/instance.hpp"

namespace steinred {

/// Grows a tree from `start` by repeatedly attaching the terminal whose
/// connection walk to the current tree gains the most, as long as that walk
/// is certified shorter than the terminal's prize (left-rooted length).
/// Fixed terminals that never qualify are attached by shortest paths.
/// `reach_budget` bounds the relaxations of each walk search.
SteinerTree construct_tree(const PcInstance& instance, VertexId start, long reach_budget);

/// Strong pruning to a fixpoint, then local search: re-attaching excluded
/// terminals, dropping pendant paths, and re-spanning the vertex set by a
/// minimum spanning tree. Never returns a costlier tree.
SteinerTree prune_and_improve(const PcInstance& instance, const SteinerTree& tree, int rounds);

/// Subtrees whose connecting edge costs more than they collect are cut.
/// Every terminal of the tree is tried as root; fixed terminals are never cut.
SteinerTree strong_prune(const PcInstance& instance, const SteinerTree& tree);

/// The start vertices used by best_heuristic_tree: the highest-prize
/// terminals (fixed terminals first), ties by id.
std::vector<VertexId> heuristic_starts(const PcInstance& instance, std::size_t count);

/// construct_tree + prune_and_improve from each start; cheapest result,
/// ties by lexicographically smaller vertex set. Works on any instance,
/// including ones without terminals.
SteinerTree best_heuristic_tree(const PcInstance& instance, std::size_t starts = 5,
                                long reach_budget = -1, int rounds = 3);

}  // namespace steinred
