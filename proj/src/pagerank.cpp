#include "scimap/pagerank.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace scimap {

namespace {

struct InArc {
    std::size_t from;
    double weight;
};

}  // namespace

CentralityScores pagerank(const MultiNet& net, const PageRankOptions& options) {
    if (net.empty())
        throw std::invalid_argument("pagerank needs a non-empty net");
    if (!(options.damping > 0.0 && options.damping < 1.0))
        throw std::invalid_argument("damping must lie strictly between 0 and 1");
    if (!(options.tolerance >= 0.0))
        throw std::invalid_argument("tolerance must be non-negative");

    std::vector<Node> nodes(net.nodes.begin(), net.nodes.end());
    std::map<Node, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        index.emplace(nodes[i], i);
    const std::size_t n = nodes.size();

    std::vector<std::vector<InArc>> incoming(n);
    std::vector<double> out_weight(n, 0.0);
    auto link = [&](std::size_t from, std::size_t to, double w) {
        incoming[to].push_back({from, w});
        out_weight[from] += w;
    };
    for (const auto& e : net.edges) {
        if (!(e.weight > 0.0))
            continue;
        auto s = index.at(e.source);
        auto t = index.at(e.target);
        link(s, t, e.weight);
        if (!e.directed)
            link(t, s, e.weight);
    }

    const double d = options.damping;
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> x(n, inv_n), next(n);

    CentralityScores result;
    result.damping = d;
    while (result.iterations < options.max_iterations) {
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (out_weight[u] == 0.0)
                dangling += x[u];
        for (std::size_t v = 0; v < n; ++v) {
            double inflow = 0.0;
            for (const auto& arc : incoming[v])
                inflow += x[arc.from] * (arc.weight / out_weight[arc.from]);
            next[v] = (1.0 - d) * inv_n + d * (inflow + dangling * inv_n);
        }
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            change += std::abs(next[v] - x[v]);
        x.swap(next);
        ++result.iterations;
        result.residual = change;
        if (change <= options.tolerance) {
            result.converged = true;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        result.score.emplace(nodes[i], x[i]);
    return result;
}

CentralityScores pagerank_per_module(const MultiNet& net, const ModulePartition& partition,
                                     const PageRankOptions& options) {
    std::map<std::size_t, std::set<Node>> modules;
    for (const auto& [node, c] : partition.community)
        if (net.nodes.contains(node))
            modules[c].insert(node);

    CentralityScores result;
    result.damping = options.damping;
    result.converged = true;
    for (const auto& [c, members] : modules) {
        auto part = pagerank(induced_subnet(net, members), options);
        result.score.merge(part.score);
        result.iterations = std::max(result.iterations, part.iterations);
        result.residual = std::max(result.residual, part.residual);
        result.converged = result.converged && part.converged;
    }
    return result;
}

}  // namespace scimap
