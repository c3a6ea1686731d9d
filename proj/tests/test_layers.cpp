#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "scimap/layers.hpp"

using namespace scimap;

namespace {

Document doc(std::string id, std::vector<std::string> authors, std::vector<std::string> keywords,
             std::vector<std::string> refs = {}) {
    Document d;
    d.id = std::move(id);
    d.authors = std::move(authors);
    d.keywords = std::move(keywords);
    d.references = std::move(refs);
    return d;
}

Corpus corpus_of(std::vector<Document> docs) {
    Corpus c;
    for (auto& d : docs)
        c.add(std::move(d));
    return resolve_citations(std::move(c));
}

double w(const Layer& l, const Node& a, const Node& b) {
    auto it = l.edges.find({a, b});
    return it == l.edges.end() ? 0.0 : it->second;
}

}  // namespace

TEST_CASE("author citation") {
    auto l = build_author_citation(corpus_of({doc("d1", {"a", "b"}, {}, {"d2"}), doc("d2", {"c"}, {})}));
    CHECK(l.edges.size() == 2);
    CHECK(w(l, author("a"), author("c")) == 1.0);
    CHECK(w(l, author("b"), author("c")) == 1.0);

    auto self = build_author_citation(corpus_of({doc("d1", {"a"}, {}, {"d2"}), doc("d2", {"a"}, {})}));
    CHECK(self.edges.empty());

    auto twice = build_author_citation(corpus_of(
        {doc("d1", {"a"}, {}, {"d3"}), doc("d2", {"a"}, {}, {"d3"}), doc("d3", {"c"}, {})}));
    CHECK(w(twice, author("a"), author("c")) == 2.0);

    // Co-authored self-citation still links to the co-author.
    auto co = build_author_citation(corpus_of({doc("d1", {"a"}, {}, {"d2"}), doc("d2", {"a", "b"}, {})}));
    CHECK(co.edges.size() == 1);
    CHECK(w(co, author("a"), author("b")) == 1.0);

    CHECK(build_author_citation(corpus_of({doc("d1", {}, {"k"}, {"d2"}), doc("d2", {}, {"k"})})).edges.empty());
}

TEST_CASE("fractional counting splits one credit per document pair") {
    auto l = build_author_citation(
        corpus_of({doc("d1", {"a", "b"}, {}, {"d2"}), doc("d2", {"c", "d"}, {})}), Counting::Fractional);
    CHECK(l.edges.size() == 4);
    CHECK(l.total_weight() == doctest::Approx(1.0));
    CHECK(w(l, author("a"), author("d")) == 0.25);
}

TEST_CASE("keyword citation") {
    auto l = build_keyword_citation(corpus_of({doc("d1", {"a"}, {"x", "y"}, {"d2"}), doc("d2", {"b"}, {"y", "z"})}));
    CHECK(l.edges.size() == 3);
    CHECK(w(l, keyword("x"), keyword("y")) == 1.0);
    CHECK(w(l, keyword("x"), keyword("z")) == 1.0);
    CHECK(w(l, keyword("y"), keyword("z")) == 1.0);
    CHECK(w(l, keyword("y"), keyword("y")) == 0.0);

    auto missing = build_keyword_citation(corpus_of({doc("d1", {"a"}, {}, {"d2"}), doc("d2", {"b"}, {"y"})}));
    CHECK(missing.edges.empty());

    auto twice = build_keyword_citation(corpus_of({doc("d1", {"a"}, {"x"}, {"d2"}), doc("d2", {"b"}, {"z"}),
                                                   doc("d3", {"a"}, {"x"}, {"d4"}), doc("d4", {"b"}, {"z"})}));
    CHECK(w(twice, keyword("x"), keyword("z")) == 2.0);
}

TEST_CASE("author keyword") {
    auto l = build_author_keyword(corpus_of({doc("d1", {"a"}, {"x"}), doc("d2", {"a"}, {"x"})}));
    CHECK(w(l, author("a"), keyword("x")) == 2.0);
    CHECK_FALSE(l.directed());

    auto cross = build_author_keyword(corpus_of({doc("d1", {"a", "b"}, {"x", "y"})}));
    CHECK(cross.edges.size() == 4);
    for (const auto& [key, weight] : cross.edges)
        CHECK(weight == 1.0);

    auto degraded = build_author_keyword(corpus_of({doc("d1", {}, {"lonely"}), doc("d2", {"a"}, {"x"})}));
    CHECK(degraded.edges.size() == 1);
    for (const auto& [key, weight] : degraded.edges)
        CHECK(key.second.label != "lonely");
}

TEST_CASE("validate rejects malformed layers") {
    Layer bad{LayerTag::AuthorCitation, {}};
    bad.edges[{author("a"), keyword("k")}] = 1.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    Layer loop{LayerTag::KeywordCitation, {}};
    loop.edges[{keyword("k"), keyword("k")}] = 1.0;
    CHECK_THROWS_AS(validate(loop), std::invalid_argument);
    Layer zero{LayerTag::AuthorKeyword, {}};
    zero.edges[{author("a"), keyword("k")}] = 0.0;
    CHECK_THROWS_AS(validate(zero), std::invalid_argument);
}

namespace {

Corpus random_corpus(std::mt19937_64& rng, std::size_t n) {
    std::vector<Document> docs;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> authors, keywords, refs;
        for (int a = 0; a < 5; ++a)
            if (rng() % 3 == 0)
                authors.push_back("a" + std::to_string(a));
        for (int k = 0; k < 5; ++k)
            if (rng() % 3 == 0)
                keywords.push_back("k" + std::to_string(k));
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 3 == 0)
                refs.push_back("d" + std::to_string(j));
        docs.push_back(doc("d" + std::to_string(i), authors, keywords, refs));
    }
    return corpus_of(std::move(docs));
}

}  // namespace

TEST_CASE("property: brute-force recount, bipartiteness, permutation invariance") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = random_corpus(rng, 2 + trial % 15);
        auto ac = build_author_citation(c);
        auto kc = build_keyword_citation(c);
        auto ak = build_author_keyword(c);
        CHECK_NOTHROW(validate(ac));
        CHECK_NOTHROW(validate(kc));
        CHECK_NOTHROW(validate(ak));

        double expected = 0.0;
        for (const auto& [from, to] : c.citation_edges) {
            const auto& x = c.find(from)->authors;
            const auto& y = c.find(to)->authors;
            double shared = 0.0;
            for (const auto& a : x)
                shared += static_cast<double>(std::count(y.begin(), y.end(), a));
            expected += static_cast<double>(x.size() * y.size()) - shared;
        }
        CHECK(ac.total_weight() == expected);

        for (const auto& [key, weight] : ak.edges) {
            CHECK(key.first.kind == NodeKind::Author);
            CHECK(key.second.kind == NodeKind::Keyword);
        }

        // Rebuilding from reversed insertion order gives identical layers.
        std::vector<Document> docs;
        for (const auto& [id, d] : c.documents)
            docs.insert(docs.begin(), d);
        auto again = corpus_of(docs);
        CHECK(build_author_citation(again).edges == ac.edges);
        CHECK(build_keyword_citation(again).edges == kc.edges);
        CHECK(build_author_keyword(again).edges == ak.edges);
    }
}
