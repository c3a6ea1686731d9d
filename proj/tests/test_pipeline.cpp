#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "scimap/graph_io.hpp"
#include "scimap/pipeline.hpp"

using namespace scimap;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("scimap_pipeline_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

PlantedSpec two_blocks() {
    PlantedSpec spec;
    spec.n_blocks = 2;
    spec.docs_per_block = 100;
    spec.keyword_dropout = 0.3;
    return spec;
}

}  // namespace

TEST_CASE("planted hubs top their modules") {
    auto s = generate_corpus(two_blocks());
    auto r = run_pipeline(s.corpus, PipelineConfig{});
    REQUIRE(r.reports.size() == 2);
    CHECK(nmi(r.partition.community, s.truth) >= 0.9);
    for (const auto& hub : s.hubs) {
        const auto module = r.partition.community.at(hub);
        const auto& report = *std::find_if(r.reports.begin(), r.reports.end(),
                                           [&](const ModuleReport& m) { return m.module == module; });
        REQUIRE(!report.top.empty());
        CHECK(report.top.front().node == hub);
    }
    for (const auto& report : r.reports) {
        CHECK(report.size == report.n_authors + report.n_keywords);
        CHECK(report.reduced.nodes.size() == (report.size + 1) / 2);
    }
}

TEST_CASE("keyword-free corpus runs on the author layer alone") {
    auto spec = two_blocks();
    spec.keywords_per_doc = 0;
    auto s = generate_corpus(spec);
    auto r = run_pipeline(s.corpus, PipelineConfig{});
    for (const auto& e : r.net.edges)
        CHECK(e.layer == LayerTag::AuthorCitation);
    CHECK(r.partition.n_communities >= 1);
    CHECK(nmi(r.partition.community, s.truth) >= 0.9);
}

TEST_CASE("failures are tagged with their stage") {
    auto dir = scratch("errors");
    std::ofstream(dir / "empty.jsonl").close();
    try {
        run_pipeline(dir / "empty.jsonl", PipelineConfig{}, dir / "out");
        FAIL("expected failure");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "corpus");
    }
    try {
        run_pipeline(dir / "missing.jsonl", PipelineConfig{}, dir / "out");
        FAIL("expected failure");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "corpus");
    }
    // Records without any citation or author-keyword link build nothing.
    std::ofstream(dir / "flat.jsonl") << R"({"id":"a","authors":["x"]})" << "\n";
    try {
        run_pipeline(dir / "flat.jsonl", PipelineConfig{}, dir / "out");
        FAIL("expected failure");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "build");
    }
}

TEST_CASE("config parsing") {
    std::istringstream in(
        "# comment\n"
        "walk_length = 5\n"
        "damping=0.9  # trailing\n"
        "top_n = 3\n"
        "keep_fraction = 0.25\n"
        "counting = fractional\n"
        "pagerank_scope = module\n"
        "reduction = pagerank\n"
        "thresholds = 3, 10, 10\n"
        "filter.min_weight = 0.1\n"
        "filter.min_weight.author_keyword = 0.2\n"
        "filter.min_degree = 2\n"
        "filter.keep_largest_component = false\n");
    auto c = parse_config(in);
    CHECK(c.walk_length == 5);
    CHECK(c.pagerank.damping == 0.9);
    CHECK(c.top_n == 3);
    CHECK(c.keep_fraction == 0.25);
    CHECK(c.counting == Counting::Fractional);
    CHECK(c.pagerank_scope == PageRankScope::PerModule);
    CHECK(c.reduction == ReductionCriterion::PageRank);
    CHECK(c.thresholds == std::vector<int>{3, 10, 10});
    CHECK(c.filter.min_normalized_weight.at(LayerTag::AuthorCitation) == 0.1);
    CHECK(c.filter.min_normalized_weight.at(LayerTag::AuthorKeyword) == 0.2);
    CHECK(c.filter.min_node_total_degree == 2);
    CHECK_FALSE(c.filter.keep_largest_component);

    std::istringstream unknown("colour = blue\n");
    CHECK_THROWS_WITH(parse_config(unknown), "unknown key 'colour' at line 1");
    std::istringstream bad("walk_length = four\n");
    CHECK_THROWS(parse_config(bad));
    std::istringstream range("keep_fraction = 0\n");
    CHECK_THROWS(parse_config(range));

    std::istringstream planted("n_blocks = 3\np_intra = 0.4\nseed = 9\n");
    auto p = parse_planted_spec(planted);
    CHECK(p.n_blocks == 3);
    CHECK(p.p_intra == 0.4);
    CHECK(p.seed == 9);
}

TEST_CASE("per-module PageRank sums to one inside each module") {
    auto s = generate_corpus(two_blocks());
    PipelineConfig cfg;
    cfg.pagerank_scope = PageRankScope::PerModule;
    auto r = run_pipeline(s.corpus, cfg);
    std::map<std::size_t, double> sums;
    for (const auto& [node, c] : r.partition.community)
        sums[c] += r.scores.at(node);
    for (const auto& [c, sum] : sums)
        CHECK(std::abs(sum - 1.0) <= 1e-9);
}

TEST_CASE("file pipeline writes every output deterministically") {
    auto dir = scratch("files");
    write_records(dir / "records.jsonl", generate_corpus(two_blocks()).corpus);
    auto first = run_pipeline(dir / "records.jsonl", PipelineConfig{}, dir / "a", true);
    run_pipeline(dir / "records.jsonl", PipelineConfig{}, dir / "b", true);
    for (const char* f : {"net.graphml", "partition.csv", "modules.csv", "rankings.csv",
                          "corpus_stats.csv", "layer_author_citation.csv",
                          "layer_keyword_citation.csv", "layer_author_keyword.csv",
                          "net_raw.graphml", "module_0.graphml", "module_1.graphml"}) {
        INFO(f);
        REQUIRE(fs::exists(dir / "a" / f));
        CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
    }
    auto reread = read_graphml(dir / "a" / "net.graphml");
    CHECK(reread.net == first.net);
    REQUIRE(reread.partition.has_value());
    CHECK(reread.partition->community == first.partition.community);
    auto partition = read_partition_csv(dir / "a" / "partition.csv");
    CHECK(partition.community == first.partition.community);
    CHECK(partition.q == first.partition.q);
}
