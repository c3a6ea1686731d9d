#pragma once

#include <cstddef>
#include <map>

#include "scimap/community.hpp"
#include "scimap/multinet.hpp"

namespace scimap {

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-10;
    std::size_t max_iterations = 10'000;
};

struct CentralityScores {
    std::map<Node, double> score;
    double damping = 0.0;
    std::size_t iterations = 0;
    /// L1 change of the last iteration.
    double residual = 0.0;
    bool converged = false;

    double at(const Node& node) const { return score.at(node); }
};

/// Power iteration on the directed multigraph: undirected edges count in
/// both directions, parallel edges add up, out-weights become transition
/// proportions and dangling mass is spread uniformly. Stops once the L1
/// change drops to the tolerance; hitting max_iterations first leaves
/// `converged` false.
CentralityScores pagerank(const MultiNet& net, const PageRankOptions& options = {});

/// PageRank computed separately on each module's induced subnet, so scores
/// sum to 1 within every module.
CentralityScores pagerank_per_module(const MultiNet& net, const ModulePartition& partition,
                                     const PageRankOptions& options = {});

}  // namespace scimap
