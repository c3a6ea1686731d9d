#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "scimap/corpus.hpp"
#include "scimap/layers.hpp"

namespace scimap {

/// Planted-partition corpus parameters. Each block owns disjoint author and
/// keyword pools; documents draw from their own block only.
struct PlantedSpec {
    std::size_t n_blocks = 2;
    std::size_t authors_per_block = 10;
    std::size_t keywords_per_block = 10;
    std::size_t docs_per_block = 100;
    std::size_t authors_per_doc = 2;
    std::size_t keywords_per_doc = 3;
    double p_intra = 0.3;
    double p_inter = 0.01;
    /// Fraction of documents published without keywords.
    double keyword_dropout = 0.0;
    /// Probability that a document lists its block's hub author.
    double hub_share = 0.5;
    std::uint64_t seed = 1;

    void validate() const;
};

struct SyntheticCorpus {
    Corpus corpus;  ///< citation-resolved
    std::map<Node, std::size_t> truth;
    std::vector<Node> hubs;  ///< hub author of each block
    std::vector<std::size_t> doc_block;  ///< block of doc i (ids sort by index)
};

/// Documents are indexed 0..N-1 in publication order and only cite earlier
/// documents. Deterministic for a fixed seed on every platform.
SyntheticCorpus generate_corpus(const PlantedSpec& spec);

/// Normalized mutual information 2 I(X;Y) / (H(X) + H(Y)); 1 for two
/// single-community partitions.
double nmi(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// NMI over the nodes both assignments share. Throws std::invalid_argument
/// if they share none.
double nmi(const std::map<Node, std::size_t>& a, const std::map<Node, std::size_t>& b);

}  // namespace scimap
