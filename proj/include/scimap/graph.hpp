#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scimap {

/// Undirected weighted simple graph on nodes 0..n-1.
///
/// A_ij = A_ji >= 0, no self-loops. k_i is the weighted degree and m the
/// total edge weight (each undirected edge counted once), so sum k_i = 2m.
class WeightedGraph {
public:
    struct Arc {
        std::size_t to;
        double weight;
    };

    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t n);

    /// Accumulates `weight` onto edge {u, v}. Throws on u == v, an
    /// out-of-range endpoint, or a non-positive weight.
    void add_edge(std::size_t u, std::size_t v, double weight);

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    /// Neighbors sorted by index.
    std::span<const Arc> neighbors(std::size_t u) const { return adjacency_[u]; }
    double degree(std::size_t u) const { return degree_[u]; }
    double total_weight() const { return total_weight_; }
    double weight(std::size_t u, std::size_t v) const;

    /// Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;
    bool connected() const;

    /// Subgraph induced by `nodes`; node i of the result is nodes[i].
    WeightedGraph induced(std::span<const std::size_t> nodes) const;

private:
    std::vector<std::vector<Arc>> adjacency_;
    std::vector<double> degree_;
    double total_weight_ = 0.0;
    std::size_t edge_count_ = 0;
};

}  // namespace scimap
