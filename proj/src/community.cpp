#include "scimap/community.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

namespace scimap {

namespace {

constexpr double kTieTolerance = 1e-12;

// Distribution of a t-step walk from `start`, divided by sqrt(k) per entry.
std::vector<double> walk_profile(const WeightedGraph& g, std::size_t start, int length) {
    const std::size_t n = g.size();
    std::vector<double> p(n, 0.0), next(n, 0.0);
    p[start] = 1.0;
    for (int step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t u = 0; u < n; ++u) {
            if (p[u] == 0.0)
                continue;
            const double share = p[u] / g.degree(u);
            for (const auto& arc : g.neighbors(u))
                next[arc.to] += share * arc.weight;
        }
        p.swap(next);
    }
    for (std::size_t j = 0; j < n; ++j)
        p[j] /= std::sqrt(g.degree(j));
    return p;
}

}  // namespace

Partition make_partition(std::span<const std::size_t> labels) {
    Partition p;
    std::map<std::size_t, std::size_t> dense;
    p.membership.reserve(labels.size());
    for (auto l : labels) {
        auto [it, fresh] = dense.emplace(l, dense.size());
        p.membership.push_back(it->second);
    }
    p.n_communities = dense.size();
    return p;
}

double modularity(const WeightedGraph& graph, std::span<const std::size_t> membership) {
    if (membership.size() != graph.size())
        throw std::invalid_argument("partition does not cover the graph");
    const double m = graph.total_weight();
    if (!(m > 0.0))
        throw std::domain_error("modularity is undefined for a graph without edge weight");
    const double two_m = 2.0 * m;

    std::map<std::size_t, std::pair<double, double>> per_community;  // (internal, degree sum)
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto& [internal, total] = per_community[membership[i]];
        total += graph.degree(i);
        for (const auto& arc : graph.neighbors(i))
            if (membership[arc.to] == membership[i])
                internal += arc.weight;
    }
    double q = 0.0;
    for (const auto& [c, v] : per_community) {
        const auto& [internal, total] = v;
        q += internal / two_m - (total / two_m) * (total / two_m);
    }
    return q;
}

std::vector<std::size_t> Dendrogram::cut(std::size_t n_merges) const {
    if (n_merges > merges.size())
        throw std::out_of_range("dendrogram has fewer merges than requested");
    std::vector<std::size_t> owner(n_leaves + n_merges);
    for (std::size_t i = 0; i < owner.size(); ++i)
        owner[i] = i;
    for (std::size_t i = 0; i < n_merges; ++i) {
        owner[merges[i].left] = merges[i].merged;
        owner[merges[i].right] = merges[i].merged;
    }
    std::vector<std::size_t> membership(n_leaves);
    for (std::size_t leaf = 0; leaf < n_leaves; ++leaf) {
        auto c = leaf;
        while (owner[c] != c)
            c = owner[c];
        membership[leaf] = c;
    }
    return membership;
}

Dendrogram walktrap_dendrogram(const WeightedGraph& graph, int walk_length) {
    if (walk_length < 1)
        throw std::invalid_argument("walk length must be at least 1");
    const std::size_t n = graph.size();
    if (n == 0 || !(graph.total_weight() > 0.0))
        throw std::invalid_argument("walktrap needs a graph with positive total weight");
    if (!graph.connected())
        throw std::invalid_argument(
            "walktrap needs a connected graph; run it on each connected component");

    Dendrogram dendrogram;
    dendrogram.n_leaves = n;
    const std::size_t slots = 2 * n - 1;
    std::vector<std::vector<double>> profile(slots);
    std::vector<double> size(slots, 0.0);
    std::vector<std::map<std::size_t, double>> adjacent(slots);
    for (std::size_t i = 0; i < n; ++i) {
        profile[i] = walk_profile(graph, i, walk_length);
        size[i] = 1.0;
        for (const auto& arc : graph.neighbors(i))
            adjacent[i][arc.to] = arc.weight;
    }

    auto delta_sigma = [&](std::size_t a, std::size_t b) {
        const auto& pa = profile[a];
        const auto& pb = profile[b];
        double r2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = pa[j] - pb[j];
            r2 += d * d;
        }
        return size[a] * size[b] / (size[a] + size[b]) * r2 / static_cast<double>(n);
    };

    using Candidate = std::tuple<double, std::size_t, std::size_t>;
    std::set<Candidate> queue;
    std::map<std::pair<std::size_t, std::size_t>, double> cost_of;
    auto push = [&](std::size_t a, std::size_t b) {
        if (a > b)
            std::swap(a, b);
        const double c = delta_sigma(a, b);
        queue.emplace(c, a, b);
        cost_of[{a, b}] = c;
    };
    auto drop = [&](std::size_t a, std::size_t b) {
        if (a > b)
            std::swap(a, b);
        auto it = cost_of.find({a, b});
        if (it == cost_of.end())
            return;
        queue.erase({it->second, a, b});
        cost_of.erase(it);
    };

    for (std::size_t u = 0; u < n; ++u)
        for (const auto& arc : graph.neighbors(u))
            if (u < arc.to)
                push(u, arc.to);

    for (std::size_t step = 0; step + 1 < n; ++step) {
        if (queue.empty())
            throw std::logic_error("walktrap ran out of adjacent communities");
        auto [cost, a, b] = *queue.begin();
        const std::size_t c = n + step;
        dendrogram.merges.push_back({a, b, cost, c});

        size[c] = size[a] + size[b];
        profile[c].resize(n);
        for (std::size_t j = 0; j < n; ++j)
            profile[c][j] = (size[a] * profile[a][j] + size[b] * profile[b][j]) / size[c];

        drop(a, b);
        for (auto old : {a, b}) {
            for (const auto& [x, w] : adjacent[old]) {
                if (x == a || x == b)
                    continue;
                drop(old, x);
                adjacent[c][x] += w;
                adjacent[x].erase(old);
            }
            adjacent[old].clear();
            profile[old] = {};
        }
        for (const auto& [x, w] : adjacent[c]) {
            adjacent[x][c] = w;
            push(x, c);
        }
    }
    return dendrogram;
}

Partition best_partition(const WeightedGraph& graph, const Dendrogram& dendrogram) {
    const std::size_t n = dendrogram.n_leaves;
    if (n != graph.size())
        throw std::invalid_argument("dendrogram does not match the graph");
    const double m = graph.total_weight();
    if (!(m > 0.0))
        throw std::domain_error("modularity is undefined for a graph without edge weight");
    const double two_m = 2.0 * m;

    const std::size_t slots = n + dendrogram.merges.size();
    std::vector<double> total(slots, 0.0);
    std::vector<std::map<std::size_t, double>> adjacent(slots);
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total[i] = graph.degree(i);
        q -= (total[i] / two_m) * (total[i] / two_m);
        for (const auto& arc : graph.neighbors(i))
            adjacent[i][arc.to] = arc.weight;
    }

    std::size_t best_level = 0;
    double best_q = q;
    for (std::size_t level = 0; level < dendrogram.merges.size(); ++level) {
        const auto& merge = dendrogram.merges[level];
        const std::size_t a = merge.left, b = merge.right, c = merge.merged;
        if (c != n + level || a >= c || b >= c)
            throw std::invalid_argument("malformed dendrogram");
        double between = 0.0;
        if (auto it = adjacent[a].find(b); it != adjacent[a].end())
            between = it->second;
        q += 2.0 * between / two_m - 2.0 * total[a] * total[b] / (two_m * two_m);
        total[c] = total[a] + total[b];
        for (auto old : {a, b}) {
            for (const auto& [x, w] : adjacent[old]) {
                if (x == a || x == b)
                    continue;
                adjacent[c][x] += w;
                adjacent[x].erase(old);
            }
            adjacent[old].clear();
        }
        for (const auto& [x, w] : adjacent[c])
            adjacent[x][c] = w;

        if (q >= best_q - kTieTolerance) {
            best_level = level + 1;
            best_q = std::max(best_q, q);
        }
    }

    auto partition = make_partition(dendrogram.cut(best_level));
    partition.q = modularity(graph, partition.membership);
    return partition;
}

std::vector<Node> ModulePartition::members(std::size_t module) const {
    std::vector<Node> out;
    for (const auto& [node, c] : community)
        if (c == module)
            out.push_back(node);
    return out;
}

ModulePartition detect_modules(const MultiNet& net, int walk_length) {
    if (net.empty())
        throw std::invalid_argument("cannot detect modules in an empty net");
    auto sym = symmetrize(net);
    const auto& g = sym.graph;
    if (!(g.total_weight() > 0.0))
        throw std::invalid_argument("cannot detect modules in a net without edges");

    std::vector<std::size_t> labels(g.size());
    std::size_t offset = 0;
    for (const auto& comp : g.components()) {
        if (comp.size() == 1) {
            labels[comp.front()] = offset++;
            continue;
        }
        auto sub = g.induced(comp);
        auto part = best_partition(sub, walktrap_dendrogram(sub, walk_length));
        for (std::size_t i = 0; i < comp.size(); ++i)
            labels[comp[i]] = offset + part.membership[i];
        offset += part.n_communities;
    }

    auto dense = make_partition(labels);
    ModulePartition result;
    result.n_communities = dense.n_communities;
    result.q = modularity(g, dense.membership);
    for (std::size_t i = 0; i < sym.nodes.size(); ++i)
        result.community.emplace(sym.nodes[i], dense.membership[i]);
    return result;
}

}  // namespace scimap
