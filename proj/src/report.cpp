#include "scimap/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "scimap/io.hpp"

namespace scimap {

namespace {

bool by_score(const RankedNode& a, const RankedNode& b) {
    if (a.score != b.score)
        return a.score > b.score;
    return a.node < b.node;
}

}  // namespace

std::vector<ModuleRanking> rank_within_modules(const CentralityScores& scores,
                                               const ModulePartition& partition,
                                               std::size_t top_n) {
    std::vector<ModuleRanking> out(partition.n_communities);
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c].module = c;
    for (const auto& [node, c] : partition.community) {
        auto it = scores.score.find(node);
        if (it == scores.score.end())
            throw std::invalid_argument("no score for node '" + node.label + "'");
        out.at(c).top.push_back({node, it->second});
    }
    for (auto& r : out) {
        std::sort(r.top.begin(), r.top.end(), by_score);
        if (r.top.size() > top_n)
            r.top.resize(top_n);
    }
    return out;
}

MultiNet reduced_graph(const MultiNet& net, const ModulePartition& partition, std::size_t module,
                       double keep_fraction, ReductionCriterion criterion,
                       const CentralityScores* scores) {
    if (!(keep_fraction > 0.0 && keep_fraction <= 1.0))
        throw std::invalid_argument("keep fraction must lie in (0, 1]");
    if (module >= partition.n_communities)
        throw std::out_of_range("unknown module " + std::to_string(module));

    std::set<Node> members;
    for (const auto& [node, c] : partition.community)
        if (c == module && net.nodes.contains(node))
            members.insert(node);
    auto sub = induced_subnet(net, members);

    std::vector<RankedNode> ranked;
    if (criterion == ReductionCriterion::PageRank) {
        if (scores == nullptr)
            throw std::invalid_argument("PageRank reduction needs scores");
        for (const auto& node : sub.nodes)
            ranked.push_back({node, scores->at(node)});
    } else {
        std::map<Node, double> degree;
        for (const auto& node : sub.nodes)
            degree[node] = 0.0;
        for (const auto& e : sub.edges) {
            degree[e.source] += e.weight;
            degree[e.target] += e.weight;
        }
        for (const auto& [node, d] : degree)
            ranked.push_back({node, d});
    }
    std::sort(ranked.begin(), ranked.end(), by_score);

    const auto keep = static_cast<std::size_t>(
        std::ceil(keep_fraction * static_cast<double>(ranked.size()) - 1e-12));
    std::set<Node> kept;
    for (std::size_t i = 0; i < std::min(keep, ranked.size()); ++i)
        kept.insert(ranked[i].node);
    return induced_subnet(sub, kept);
}

std::vector<ModuleReport> module_reports(const MultiNet& net, const ModulePartition& partition,
                                         const CentralityScores& scores, std::size_t top_n,
                                         double keep_fraction, ReductionCriterion criterion) {
    auto rankings = rank_within_modules(scores, partition, top_n);
    std::vector<ModuleReport> reports;
    for (auto& r : rankings) {
        ModuleReport report;
        report.module = r.module;
        for (const auto& node : partition.members(r.module)) {
            ++report.size;
            ++(node.kind == NodeKind::Author ? report.n_authors : report.n_keywords);
        }
        report.top = std::move(r.top);
        report.reduced = reduced_graph(net, partition, r.module, keep_fraction, criterion, &scores);
        reports.push_back(std::move(report));
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const ModuleReport& a, const ModuleReport& b) { return a.size > b.size; });
    return reports;
}

void write_module_summary(std::ostream& out, std::span<const ModuleReport> reports) {
    out << "module,size,n_authors,n_keywords,n_reduced_nodes,n_reduced_edges\n";
    for (const auto& r : reports)
        out << r.module << ',' << r.size << ',' << r.n_authors << ',' << r.n_keywords << ','
            << r.reduced.nodes.size() << ',' << r.reduced.edges.size() << '\n';
}

void write_rankings(std::ostream& out, std::span<const ModuleReport> reports) {
    out << "module,rank,kind,label,pagerank\n";
    for (const auto& r : reports)
        for (std::size_t i = 0; i < r.top.size(); ++i)
            out << r.module << ',' << (i + 1) << ',' << to_string(r.top[i].node.kind) << ','
                << io::csv_field(r.top[i].node.label) << ','
                << io::format_double(r.top[i].score) << '\n';
}

}  // namespace scimap
