#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "scimap/graph_io.hpp"
#include "scimap/pagerank.hpp"
#include "scimap/report.hpp"

using namespace scimap;

namespace {

Edge directed(Node s, Node t, double w = 1.0, LayerTag tag = LayerTag::AuthorCitation) {
    return {std::move(s), std::move(t), tag, w, w, true};
}

MultiNet net_of(std::vector<Edge> edges, std::set<Node> extra = {}) {
    MultiNet net;
    net.nodes = std::move(extra);
    for (auto& e : edges) {
        net.nodes.insert(e.source);
        net.nodes.insert(e.target);
        net.edges.push_back(std::move(e));
    }
    return net;
}

ModulePartition one_module(const MultiNet& net) {
    ModulePartition p;
    for (const auto& n : net.nodes)
        p.community[n] = 0;
    p.n_communities = 1;
    return p;
}

double total(const CentralityScores& s) {
    double sum = 0.0;
    for (const auto& [n, v] : s.score)
        sum += v;
    return sum;
}

}  // namespace

TEST_CASE("pagerank examples") {
    MultiNet single;
    single.nodes = {author("solo")};
    auto s = pagerank(single);
    CHECK(s.at(author("solo")) == 1.0);
    CHECK(s.converged);

    auto cycle = pagerank(net_of({directed(author("a"), author("b")), directed(author("b"), author("c")),
                                  directed(author("c"), author("a"))}));
    for (const auto& [n, v] : cycle.score)
        CHECK(v == 1.0 / 3.0);

    // Two-node oracle: p_a = (1-d)/2 + d p_b / 2 with p_a + p_b = 1 gives p_a = 0.5 / 1.425.
    auto two = pagerank(net_of({directed(author("a"), author("b"))}));
    CHECK(std::abs(two.at(author("a")) - 0.5 / 1.425) <= 1e-10);
    CHECK(std::abs(two.at(author("b")) - (1.0 - 0.5 / 1.425)) <= 1e-10);
    auto dense = oracle::pagerank({{0, 1}, {0, 0}}, 0.85);
    CHECK(std::abs(two.at(author("a")) - dense[0]) <= 1e-10);

    CHECK_THROWS_AS(pagerank(MultiNet{}), std::invalid_argument);
    CHECK_THROWS_AS(pagerank(single, {1.0, 1e-10, 100}), std::invalid_argument);

    auto capped = pagerank(net_of({directed(author("a"), author("b"))}), {0.85, 0.0, 3});
    CHECK_FALSE(capped.converged);
    CHECK(capped.iterations == 3);
}

TEST_CASE("undirected edges count both ways") {
    Edge e{author("a"), keyword("k"), LayerTag::AuthorKeyword, 1, 1, false};
    auto s = pagerank(net_of({e}));
    CHECK(s.at(author("a")) == doctest::Approx(0.5));
}

TEST_CASE("property: pagerank against dense power iteration") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        std::vector<Node> nodes;
        for (std::size_t i = 0; i < n; ++i)
            nodes.push_back(author("n" + std::to_string(1000 + i)));
        oracle::Matrix m(n, std::vector<double>(n, 0.0));
        MultiNet net;
        net.nodes.insert(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rng() % 6 == 0) {
                    double v = w(rng);
                    bool undirected = rng() % 4 == 0;
                    net.edges.push_back({nodes[i], nodes[j], undirected ? LayerTag::AuthorKeyword
                                                                        : LayerTag::AuthorCitation,
                                         v, v, !undirected});
                    m[i][j] += v;
                    if (undirected)
                        m[j][i] += v;
                }
        auto s = pagerank(net);
        auto expected = oracle::pagerank(m, 0.85);
        CHECK(s.converged);
        CHECK(std::abs(total(s) - 1.0) <= 1e-9);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(s.at(nodes[i]) - expected[i]) <= 1e-8);
            CHECK(s.at(nodes[i]) > 0.0);
        }
    }
}

TEST_CASE("rank_within_modules") {
    CentralityScores s;
    s.score = {{author("a"), 0.5}, {author("b"), 0.3}, {author("c"), 0.2},
               {keyword("x"), 0.1}, {keyword("y"), 0.1}, {author("z"), 0.1}};
    ModulePartition p;
    p.community = {{author("a"), 0}, {author("b"), 0}, {author("c"), 0},
                   {keyword("x"), 1}, {keyword("y"), 1}, {author("z"), 1}};
    p.n_communities = 2;

    auto top2 = rank_within_modules(s, p, 2);
    REQUIRE(top2.size() == 2);
    REQUIRE(top2[0].top.size() == 2);
    CHECK(top2[0].top[0].node == author("a"));
    CHECK(top2[0].top[1].node == author("b"));

    auto all = rank_within_modules(s, p, 100);
    CHECK(all[0].top.size() == 3);
    REQUIRE(all[1].top.size() == 3);
    CHECK(all[1].top[0].node == author("z"));
    CHECK(all[1].top[1].node == keyword("x"));
    CHECK(all[1].top[2].node == keyword("y"));
}

TEST_CASE("property: ranking order survives uniform weight scaling") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        MultiNet net;
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j)
                if (i != j && rng() % 5 == 0) {
                    double v = 1.0 + static_cast<double>(rng() % 7);
                    net.edges.push_back(directed(author("a" + std::to_string(i)),
                                                 author("a" + std::to_string(j)), v));
                }
        for (int i = 0; i < 15; ++i)
            net.nodes.insert(author("a" + std::to_string(i)));
        ModulePartition p;
        for (const auto& n : net.nodes)
            p.community[n] = n.label.size() % 2;
        p.n_communities = 2;

        auto scaled = net;
        for (auto& e : scaled.edges)
            e.weight *= 4.0;  // power of two: transition shares stay bit-identical
        auto a = rank_within_modules(pagerank(net), p, 5);
        auto b = rank_within_modules(pagerank(scaled), p, 5);
        for (std::size_t m = 0; m < 2; ++m) {
            REQUIRE(a[m].top.size() == b[m].top.size());
            for (std::size_t i = 0; i < a[m].top.size(); ++i)
                CHECK(a[m].top[i].node == b[m].top[i].node);
        }
    }
}

TEST_CASE("reduced_graph") {
    Edge ab{author("a"), author("b"), LayerTag::AuthorCitation, 1, 1, true};
    Edge bc{author("b"), author("c"), LayerTag::AuthorCitation, 1, 1, true};
    auto chain = net_of({ab, bc});
    auto p = one_module(chain);

    CHECK(reduced_graph(chain, p, 0, 1.0) == chain);

    // Degrees: b = 2, a = c = 1; the tie goes to the smaller label.
    auto two = reduced_graph(chain, p, 0, 2.0 / 3.0);
    CHECK(two.nodes == std::set<Node>{author("a"), author("b")});
    CHECK(two.edges == std::vector<Edge>{ab});

    auto one = reduced_graph(chain, p, 0, 0.2);
    CHECK(one.nodes == std::set<Node>{author("b")});
    CHECK(one.edges.empty());

    CHECK_THROWS_AS(reduced_graph(chain, p, 3, 0.5), std::out_of_range);
    CHECK_THROWS_AS(reduced_graph(chain, p, 0, 0.0), std::invalid_argument);

    CentralityScores s;
    s.score = {{author("a"), 0.6}, {author("b"), 0.3}, {author("c"), 0.1}};
    auto by_rank = reduced_graph(chain, p, 0, 0.34, ReductionCriterion::PageRank, &s);
    CHECK(by_rank.nodes == std::set<Node>{author("a"), author("b")});
}

TEST_CASE("property: reduced node sets are nested in q") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        MultiNet net;
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j)
                if (i != j && rng() % 4 == 0)
                    net.edges.push_back(directed(author("a" + std::to_string(i)),
                                                 author("a" + std::to_string(j)),
                                                 static_cast<double>(1 + rng() % 3)));
        for (int i = 0; i < 12; ++i)
            net.nodes.insert(author("a" + std::to_string(i)));
        auto p = one_module(net);
        std::set<Node> previous;
        for (double q = 0.05; q <= 1.0; q += 0.05) {
            auto kept = reduced_graph(net, p, 0, q).nodes;
            CHECK(std::includes(kept.begin(), kept.end(), previous.begin(), previous.end()));
            previous = kept;
        }
    }
}

TEST_CASE("graph export round trip") {
    MultiNet net = net_of({{author("o'brien <j> & co"), author("smith\tj"), LayerTag::AuthorCitation, 3, 0.1 + 0.2, true},
                           {author("smith\tj"), keyword("ünïcode, \"quoted\""), LayerTag::AuthorKeyword, 1, 1.0 / 3.0, false},
                           {keyword("a"), keyword("ünïcode, \"quoted\""), LayerTag::KeywordCitation, 7, 1e-300, true}},
                          {keyword("isolated")});
    std::ostringstream out;
    write_graphml(out, net);
    std::istringstream in(out.str());
    auto back = read_graphml(in);
    CHECK(back.net == net);
    CHECK_FALSE(back.partition.has_value());

    ModulePartition p = one_module(net);
    std::ostringstream with_p;
    write_graphml(with_p, net, &p);
    std::istringstream in2(with_p.str());
    auto back2 = read_graphml(in2);
    REQUIRE(back2.partition.has_value());
    CHECK(back2.partition->community == p.community);

    std::ostringstream empty;
    write_graphml(empty, MultiNet{});
    std::istringstream in3(empty.str());
    CHECK(read_graphml(in3).net.empty());

    std::ostringstream csv;
    write_edge_csv(csv, net);
    const auto text = csv.str();
    auto lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == static_cast<long>(net.edges.size()) + 1);

    std::ostringstream dot;
    write_dot(dot, net, &p);
    CHECK(dot.str().find("dir=none") != std::string::npos);
    CHECK(dot.str().rfind("digraph", 0) == 0);

    std::istringstream junk("<graphml><graph>");
    CHECK_THROWS(read_graphml(junk));
}

TEST_CASE("export_graph surfaces the path on failure") {
    MultiNet net;
    CHECK_THROWS_WITH(export_graph(net, GraphFormat::GraphML, "/nonexistent/dir/x.graphml"),
                      doctest::Contains("/nonexistent/dir/x.graphml"));
    auto tmp = std::filesystem::temp_directory_path() / "scimap_export_test.dot";
    export_graph(net, GraphFormat::Dot, tmp);
    CHECK(std::filesystem::exists(tmp));
    std::filesystem::remove(tmp);
    CHECK(parse_graph_format("csv") == GraphFormat::EdgeCsv);
    CHECK_THROWS(parse_graph_format("png"));
}

TEST_CASE("partition csv round trip") {
    ModulePartition p;
    p.community = {{author("a, b"), 0}, {keyword("x"), 1}, {keyword("\"q\""), 1}};
    p.n_communities = 2;
    p.q = 0.123456789012345678;
    std::ostringstream out;
    write_partition_csv(out, p);
    std::istringstream in(out.str());
    auto back = read_partition_csv(in);
    CHECK(back.community == p.community);
    CHECK(back.n_communities == 2);
    CHECK(back.q == p.q);
}
