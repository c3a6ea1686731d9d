#include "scimap/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace scimap {

namespace {

bool accumulate(std::vector<WeightedGraph::Arc>& arcs, std::size_t to, double weight) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), to,
                               [](const WeightedGraph::Arc& a, std::size_t v) { return a.to < v; });
    if (it != arcs.end() && it->to == to) {
        it->weight += weight;
        return false;
    }
    arcs.insert(it, {to, weight});
    return true;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n) : adjacency_(n), degree_(n, 0.0) {}

void WeightedGraph::add_edge(std::size_t u, std::size_t v, double weight) {
    if (u >= size() || v >= size())
        throw std::out_of_range("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    if (!(weight > 0.0))
        throw std::invalid_argument("edge weight must be positive");
    if (accumulate(adjacency_[u], v, weight))
        ++edge_count_;
    accumulate(adjacency_[v], u, weight);
    degree_[u] += weight;
    degree_[v] += weight;
    total_weight_ += weight;
}

double WeightedGraph::weight(std::size_t u, std::size_t v) const {
    const auto& arcs = adjacency_.at(u);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                               [](const Arc& a, std::size_t x) { return a.to < x; });
    return it != arcs.end() && it->to == v ? it->weight : 0.0;
}

std::vector<std::vector<std::size_t>> WeightedGraph::components() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < size(); ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (const auto& arc : adjacency_[u])
                if (!seen[arc.to]) {
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool WeightedGraph::connected() const { return size() <= 1 || components().size() == 1; }

WeightedGraph WeightedGraph::induced(std::span<const std::size_t> nodes) const {
    std::vector<std::size_t> local(size(), size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        local[nodes[i]] = i;
    WeightedGraph sub(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& arc : adjacency_[nodes[i]]) {
            auto j = local[arc.to];
            if (j != size() && i < j)
                sub.add_edge(i, j, arc.weight);
        }
    return sub;
}

}  // namespace scimap
