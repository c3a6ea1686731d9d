#include "scimap/layers.hpp"

#include <stdexcept>

namespace scimap {

namespace {

// Adds one credit per (x, y) pair with x != y. Same-label pairs still count
// toward the fractional denominator.
void add_pairs(Layer& layer, NodeKind kind, const std::vector<std::string>& from,
               const std::vector<std::string>& to, Counting counting) {
    if (from.empty() || to.empty())
        return;
    double credit = counting == Counting::Full
                        ? 1.0
                        : 1.0 / (static_cast<double>(from.size()) * static_cast<double>(to.size()));
    for (const auto& x : from)
        for (const auto& y : to)
            if (x != y)
                layer.edges[{Node{kind, x}, Node{kind, y}}] += credit;
}

Layer build_citation_layer(const Corpus& corpus, LayerTag tag, Counting counting) {
    Layer layer{tag, {}};
    const bool authors = tag == LayerTag::AuthorCitation;
    const NodeKind kind = authors ? NodeKind::Author : NodeKind::Keyword;
    for (const auto& [citing, cited] : corpus.citation_edges) {
        const Document* a = corpus.find(citing);
        const Document* b = corpus.find(cited);
        if (a == nullptr || b == nullptr)
            continue;
        add_pairs(layer, kind, authors ? a->authors : a->keywords,
                  authors ? b->authors : b->keywords, counting);
    }
    return layer;
}

}  // namespace

std::string_view to_string(NodeKind kind) {
    return kind == NodeKind::Author ? "author" : "keyword";
}

std::string_view to_string(LayerTag tag) {
    switch (tag) {
    case LayerTag::AuthorCitation:
        return "author_citation";
    case LayerTag::KeywordCitation:
        return "keyword_citation";
    case LayerTag::AuthorKeyword:
        return "author_keyword";
    }
    return "unknown";
}

NodeKind parse_node_kind(std::string_view text) {
    if (text == "author")
        return NodeKind::Author;
    if (text == "keyword")
        return NodeKind::Keyword;
    throw std::invalid_argument("unknown node kind '" + std::string(text) + "'");
}

LayerTag parse_layer_tag(std::string_view text) {
    for (auto tag : kAllLayers)
        if (to_string(tag) == text)
            return tag;
    throw std::invalid_argument("unknown layer '" + std::string(text) + "'");
}

double Layer::total_weight() const {
    double total = 0.0;
    for (const auto& [key, w] : edges)
        total += w;
    return total;
}

void validate(const Layer& layer) {
    for (const auto& [key, w] : layer.edges) {
        const auto& [s, t] = key;
        if (s.label.empty() || t.label.empty())
            throw std::invalid_argument("empty node label in layer " +
                                        std::string(to_string(layer.tag)));
        if (s == t)
            throw std::invalid_argument("self-loop on '" + s.label + "' in layer " +
                                        std::string(to_string(layer.tag)));
        if (!(w > 0.0))
            throw std::invalid_argument("non-positive weight in layer " +
                                        std::string(to_string(layer.tag)));
        bool ok = false;
        switch (layer.tag) {
        case LayerTag::AuthorCitation:
            ok = s.kind == NodeKind::Author && t.kind == NodeKind::Author;
            break;
        case LayerTag::KeywordCitation:
            ok = s.kind == NodeKind::Keyword && t.kind == NodeKind::Keyword;
            break;
        case LayerTag::AuthorKeyword:
            ok = s.kind == NodeKind::Author && t.kind == NodeKind::Keyword;
            break;
        }
        if (!ok)
            throw std::invalid_argument("node kind mismatch for edge '" + s.label + "' -> '" +
                                        t.label + "' in layer " +
                                        std::string(to_string(layer.tag)));
    }
}

Layer build_author_citation(const Corpus& corpus, Counting counting) {
    return build_citation_layer(corpus, LayerTag::AuthorCitation, counting);
}

Layer build_keyword_citation(const Corpus& corpus, Counting counting) {
    return build_citation_layer(corpus, LayerTag::KeywordCitation, counting);
}

Layer build_author_keyword(const Corpus& corpus, Counting counting) {
    Layer layer{LayerTag::AuthorKeyword, {}};
    for (const auto& [id, doc] : corpus.documents) {
        if (doc.authors.empty() || doc.keywords.empty())
            continue;
        double credit = counting == Counting::Full
                            ? 1.0
                            : 1.0 / (static_cast<double>(doc.authors.size()) *
                                     static_cast<double>(doc.keywords.size()));
        for (const auto& a : doc.authors)
            for (const auto& k : doc.keywords)
                layer.edges[{author(a), keyword(k)}] += credit;
    }
    return layer;
}

}  // namespace scimap
