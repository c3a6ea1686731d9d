#include "scimap/multinet.hpp"

#include <algorithm>
#include <stdexcept>

namespace scimap {

void FilterSpec::validate() const {
    for (const auto& [tag, bound] : min_normalized_weight)
        if (!(bound >= 0.0 && bound <= 1.0))
            throw std::invalid_argument("weight threshold for " + std::string(to_string(tag)) +
                                        " must lie in [0, 1]");
}

std::size_t SymmetricNet::index_of(const Node& node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node)
        throw std::out_of_range("node '" + node.label + "' not in net");
    return static_cast<std::size_t>(it - nodes.begin());
}

MultiNet unify(std::span<const Layer> layers) {
    MultiNet net;
    for (const auto& layer : layers) {
        validate(layer);
        for (const auto& [key, w] : layer.edges) {
            net.nodes.insert(key.first);
            net.nodes.insert(key.second);
            net.edges.push_back({key.first, key.second, layer.tag, w, w, layer.directed()});
        }
    }
    return net;
}

MultiNet normalize(MultiNet net) {
    std::map<LayerTag, double> max_raw;
    for (const auto& e : net.edges) {
        if (!(e.raw_weight > 0.0))
            throw std::invalid_argument("raw weights must be positive");
        auto& m = max_raw[e.layer];
        m = std::max(m, e.raw_weight);
    }
    for (auto& e : net.edges)
        e.weight = e.raw_weight / max_raw[e.layer];
    return net;
}

MultiNet filter(const MultiNet& net, const FilterSpec& spec) {
    spec.validate();
    MultiNet out;
    for (const auto& e : net.edges) {
        auto bound = spec.min_normalized_weight.find(e.layer);
        if (bound == spec.min_normalized_weight.end() || e.weight >= bound->second)
            out.edges.push_back(e);
    }

    std::map<Node, std::size_t> degree;
    for (const auto& n : net.nodes)
        degree[n] = 0;
    for (const auto& e : out.edges) {
        ++degree[e.source];
        ++degree[e.target];
    }
    for (const auto& [node, d] : degree)
        if (d >= spec.min_node_total_degree)
            out.nodes.insert(node);
    std::erase_if(out.edges, [&](const Edge& e) {
        return !out.nodes.contains(e.source) || !out.nodes.contains(e.target);
    });

    if (spec.keep_largest_component && !out.nodes.empty()) {
        auto sym = symmetrize(out);
        auto comps = sym.graph.components();
        // Ties go to the component holding the smallest node.
        const std::vector<std::size_t>* best = &comps.front();
        for (const auto& c : comps)
            if (c.size() > best->size())
                best = &c;
        std::set<Node> keep;
        for (auto i : *best)
            keep.insert(sym.nodes[i]);
        out = induced_subnet(out, keep);
    }
    return out;
}

SymmetricNet symmetrize(const MultiNet& net) {
    SymmetricNet sym;
    sym.nodes.assign(net.nodes.begin(), net.nodes.end());
    sym.graph = WeightedGraph(sym.nodes.size());
    for (const auto& e : net.edges) {
        if (e.source == e.target || !(e.weight > 0.0))
            continue;
        sym.graph.add_edge(sym.index_of(e.source), sym.index_of(e.target), e.weight);
    }
    return sym;
}

MultiNet induced_subnet(const MultiNet& net, const std::set<Node>& keep) {
    MultiNet out;
    for (const auto& n : net.nodes)
        if (keep.contains(n))
            out.nodes.insert(n);
    for (const auto& e : net.edges)
        if (out.nodes.contains(e.source) && out.nodes.contains(e.target))
            out.edges.push_back(e);
    return out;
}

}  // namespace scimap
