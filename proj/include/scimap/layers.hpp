#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "scimap/corpus.hpp"

namespace scimap {

enum class NodeKind { Author, Keyword };

/// (kind, label) is the identity of a node in every downstream structure.
struct Node {
    NodeKind kind = NodeKind::Author;
    std::string label;

    auto operator<=>(const Node&) const = default;
    bool operator==(const Node&) const = default;
};

inline Node author(std::string label) { return {NodeKind::Author, std::move(label)}; }
inline Node keyword(std::string label) { return {NodeKind::Keyword, std::move(label)}; }

enum class LayerTag { AuthorCitation, KeywordCitation, AuthorKeyword };

inline constexpr LayerTag kAllLayers[] = {LayerTag::AuthorCitation, LayerTag::KeywordCitation,
                                          LayerTag::AuthorKeyword};

std::string_view to_string(NodeKind kind);
std::string_view to_string(LayerTag tag);
NodeKind parse_node_kind(std::string_view text);
LayerTag parse_layer_tag(std::string_view text);

/// Citation layers are directed; the author-keyword coupling is not.
constexpr bool is_directed(LayerTag tag) { return tag != LayerTag::AuthorKeyword; }

/// How a citing/cited pair of documents distributes credit over its
/// author (or keyword) pairs.
enum class Counting {
    Full,        ///< every pair gets 1
    Fractional,  ///< every pair gets 1 / (|side1| * |side2|)
};

struct Layer {
    using Key = std::pair<Node, Node>;

    LayerTag tag = LayerTag::AuthorCitation;
    /// Undirected (author-keyword) edges are keyed (author, keyword).
    std::map<Key, double> edges;

    bool directed() const { return is_directed(tag); }
    double total_weight() const;
};

/// Throws std::invalid_argument on a self-loop, a non-positive weight, or a
/// node whose kind does not belong in this layer.
void validate(const Layer& layer);

Layer build_author_citation(const Corpus& corpus, Counting counting = Counting::Full);
Layer build_keyword_citation(const Corpus& corpus, Counting counting = Counting::Full);
Layer build_author_keyword(const Corpus& corpus, Counting counting = Counting::Full);

}  // namespace scimap
