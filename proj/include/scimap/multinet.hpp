#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "scimap/graph.hpp"
#include "scimap/layers.hpp"

namespace scimap {

struct Edge {
    Node source;
    Node target;
    LayerTag layer = LayerTag::AuthorCitation;
    double raw_weight = 0.0;
    /// Per-layer normalized weight; equals raw_weight until normalize().
    double weight = 0.0;
    bool directed = true;

    bool operator==(const Edge&) const = default;
};

/// Set-theoretic union of the constituent layers. Nodes with the same
/// (kind, label) are one node; every edge keeps its layer tag.
struct MultiNet {
    std::set<Node> nodes;
    std::vector<Edge> edges;

    bool empty() const { return nodes.empty(); }
    bool operator==(const MultiNet&) const = default;
};

struct FilterSpec {
    /// Edges whose normalized weight is below the layer's bound are dropped.
    std::map<LayerTag, double> min_normalized_weight;
    /// Nodes with fewer incident edges (all layers, both directions) are dropped.
    std::size_t min_node_total_degree = 1;
    bool keep_largest_component = true;

    void validate() const;
};

/// Node-indexed undirected view of a net. graph node i is nodes[i].
struct SymmetricNet {
    std::vector<Node> nodes;
    WeightedGraph graph;

    std::size_t index_of(const Node& node) const;
};

MultiNet unify(std::span<const Layer> layers);
MultiNet normalize(MultiNet net);
MultiNet filter(const MultiNet& net, const FilterSpec& spec);
/// Sums normalized weights of u->v, v->u and u-v across all layers.
SymmetricNet symmetrize(const MultiNet& net);

/// Nodes of `keep` plus the edges with both endpoints in it.
MultiNet induced_subnet(const MultiNet& net, const std::set<Node>& keep);

}  // namespace scimap
