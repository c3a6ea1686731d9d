#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "scimap/community.hpp"
#include "scimap/multinet.hpp"
#include "scimap/pagerank.hpp"

namespace scimap {

struct RankedNode {
    Node node;
    double score = 0.0;

    bool operator==(const RankedNode&) const = default;
};

struct ModuleRanking {
    std::size_t module = 0;
    std::vector<RankedNode> top;
};

/// Per module (in id order): members by descending score, ties by
/// (kind, label), truncated to top_n.
std::vector<ModuleRanking> rank_within_modules(const CentralityScores& scores,
                                               const ModulePartition& partition,
                                               std::size_t top_n);

/// What "less connected" means when thinning a module for display.
enum class ReductionCriterion { WeightedDegree, PageRank };

/// Keeps the ceil(keep_fraction * size) best-connected nodes of a module
/// plus the edges among them. Connectivity is the weighted total degree
/// inside the module (or the PageRank score); ties go to the smaller
/// (kind, label). Throws std::out_of_range for an unknown module.
MultiNet reduced_graph(const MultiNet& net, const ModulePartition& partition, std::size_t module,
                       double keep_fraction,
                       ReductionCriterion criterion = ReductionCriterion::WeightedDegree,
                       const CentralityScores* scores = nullptr);

struct ModuleReport {
    std::size_t module = 0;
    std::size_t size = 0;
    std::size_t n_authors = 0;
    std::size_t n_keywords = 0;
    std::vector<RankedNode> top;
    MultiNet reduced;
};

/// One report per module, largest modules first (ties by module id).
std::vector<ModuleReport> module_reports(const MultiNet& net, const ModulePartition& partition,
                                         const CentralityScores& scores, std::size_t top_n,
                                         double keep_fraction,
                                         ReductionCriterion criterion =
                                             ReductionCriterion::WeightedDegree);

/// module,size,n_authors,n_keywords,n_reduced_nodes,n_reduced_edges
void write_module_summary(std::ostream& out, std::span<const ModuleReport> reports);
/// module,rank,kind,label,pagerank
void write_rankings(std::ostream& out, std::span<const ModuleReport> reports);

}  // namespace scimap
