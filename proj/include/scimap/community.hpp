#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "scimap/graph.hpp"
#include "scimap/multinet.hpp"

namespace scimap {

/// Node -> community assignment with dense indices 0..n_communities-1,
/// numbered in order of each community's smallest node.
struct Partition {
    std::vector<std::size_t> membership;
    std::size_t n_communities = 0;
    double q = 0.0;
};

/// Relabels arbitrary community ids densely by first appearance.
Partition make_partition(std::span<const std::size_t> labels);

/// Newman modularity Q = 1/(2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j)
/// on the weighted graph. Throws std::domain_error when m = 0.
double modularity(const WeightedGraph& graph, std::span<const std::size_t> membership);

struct Merge {
    std::size_t left;    ///< smaller community id
    std::size_t right;   ///< larger community id
    double cost;         ///< Walktrap delta-sigma
    std::size_t merged;  ///< id of the new community
};

/// Leaves are communities 0..n_leaves-1; merge i creates n_leaves + i.
struct Dendrogram {
    std::size_t n_leaves = 0;
    std::vector<Merge> merges;

    /// Leaf membership after applying the first `n_merges` merges. Labels
    /// are dendrogram community ids, not dense.
    std::vector<std::size_t> cut(std::size_t n_merges) const;
};

inline constexpr int kDefaultWalkLength = 4;

/// Walktrap agglomeration (Pons & Latapy). Nodes are compared through
/// their t-step random-walk distributions scaled by 1/sqrt(k), and the
/// adjacent community pair with the smallest delta-sigma is merged until
/// one community is left. Equal costs go to the lowest (left, right) pair.
///
/// The graph must be connected with m > 0.
Dendrogram walktrap_dendrogram(const WeightedGraph& graph, int walk_length = kDefaultWalkLength);

/// Dendrogram cut with the largest Q; ties (within 1e-12) go to the
/// coarser cut. Q of the result is recomputed with modularity().
Partition best_partition(const WeightedGraph& graph, const Dendrogram& dendrogram);

/// Community assignment over net nodes.
struct ModulePartition {
    std::map<Node, std::size_t> community;
    std::size_t n_communities = 0;
    double q = 0.0;

    std::vector<Node> members(std::size_t module) const;
};

/// Symmetrizes the net, runs Walktrap + best cut on every connected
/// component (isolated nodes become singletons) and recomputes Q on the
/// whole symmetrized graph.
ModulePartition detect_modules(const MultiNet& net, int walk_length = kDefaultWalkLength);

}  // namespace scimap
