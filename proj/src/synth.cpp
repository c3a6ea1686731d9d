#include "scimap/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace scimap {

namespace {

// std distributions are implementation-defined; these are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n));
    }

    /// k distinct values from [lo, hi), in increasing order.
    std::vector<std::size_t> sample(std::size_t lo, std::size_t hi, std::size_t k) {
        std::vector<std::size_t> pool;
        for (auto v = lo; v < hi; ++v)
            pool.push_back(v);
        k = std::min(k, pool.size());
        for (std::size_t i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + below(pool.size() - i)]);
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

std::string padded(const char* prefix, std::size_t value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%05zu", prefix, value);
    return buf;
}

std::string author_label(std::size_t block, std::size_t i) {
    return "author b" + std::to_string(block) + " " + std::to_string(i);
}

std::string keyword_label(std::size_t block, std::size_t i) {
    return "topic b" + std::to_string(block) + " " + std::to_string(i);
}

double entropy(const std::map<std::size_t, double>& counts, double n) {
    double h = 0.0;
    for (const auto& [k, c] : counts)
        if (c > 0.0)
            h -= (c / n) * std::log(c / n);
    return h;
}

}  // namespace

void PlantedSpec::validate() const {
    if (n_blocks == 0 || docs_per_block == 0)
        throw std::invalid_argument("planted spec yields zero documents");
    if (authors_per_block == 0 || authors_per_doc == 0)
        throw std::invalid_argument("planted spec needs authors");
    if (!(0.0 <= p_inter && p_inter < p_intra && p_intra <= 1.0))
        throw std::invalid_argument("need 0 <= p_inter < p_intra <= 1");
    if (!(keyword_dropout >= 0.0 && keyword_dropout < 1.0))
        throw std::invalid_argument("keyword dropout must lie in [0, 1)");
    if (!(hub_share >= 0.0 && hub_share <= 1.0))
        throw std::invalid_argument("hub share must lie in [0, 1]");
}

SyntheticCorpus generate_corpus(const PlantedSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    SyntheticCorpus out;
    const std::size_t n_docs = spec.n_blocks * spec.docs_per_block;

    for (std::size_t b = 0; b < spec.n_blocks; ++b)
        out.hubs.push_back(author(author_label(b, 0)));

    std::vector<Document> docs(n_docs);
    for (std::size_t i = 0; i < n_docs; ++i) {
        const std::size_t block = i % spec.n_blocks;
        out.doc_block.push_back(block);
        auto& doc = docs[i];
        doc.id = padded("doc", i);
        doc.title = "synthetic paper " + std::to_string(i) + " of block " + std::to_string(block);
        doc.year = 1975 + static_cast<int>(i * 40 / n_docs);

        std::size_t want = spec.authors_per_doc;
        if (rng.bernoulli(spec.hub_share)) {
            doc.authors.push_back(author_label(block, 0));
            --want;
        }
        for (auto a : rng.sample(1, spec.authors_per_block, want))
            doc.authors.push_back(author_label(block, a));
        if (doc.authors.empty())
            doc.authors.push_back(author_label(block, 0));

        if (!rng.bernoulli(spec.keyword_dropout))
            for (auto k : rng.sample(0, spec.keywords_per_block, spec.keywords_per_doc))
                doc.keywords.push_back(keyword_label(block, k));

        for (std::size_t j = 0; j < i; ++j) {
            const double p = out.doc_block[j] == block ? spec.p_intra : spec.p_inter;
            if (rng.bernoulli(p))
                doc.references.push_back(docs[j].id);
        }
    }

    for (std::size_t i = 0; i < n_docs; ++i) {
        auto& doc = docs[i];
        const std::size_t block = out.doc_block[i];
        for (const auto& a : doc.authors)
            out.truth[author(a)] = block;
        for (const auto& k : doc.keywords)
            out.truth[keyword(k)] = block;
        out.corpus.add(std::move(doc));
    }
    out.corpus = resolve_citations(std::move(out.corpus));
    return out;
}

double nmi(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partitions cover different numbers of nodes");
    if (a.empty())
        throw std::invalid_argument("nmi of empty partitions");
    const double n = static_cast<double>(a.size());
    std::map<std::size_t, double> ca, cb;
    std::map<std::pair<std::size_t, std::size_t>, double> joint;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca[a[i]] += 1.0;
        cb[b[i]] += 1.0;
        joint[{a[i], b[i]}] += 1.0;
    }
    // Identical up to relabeling: the contingency table is a bijection.
    if (joint.size() == ca.size() && joint.size() == cb.size())
        return 1.0;
    const double ha = entropy(ca, n), hb = entropy(cb, n);
    double mi = 0.0;
    for (const auto& [key, c] : joint)
        mi += (c / n) * std::log(c * n / (ca[key.first] * cb[key.second]));
    return std::clamp(2.0 * mi / (ha + hb), 0.0, 1.0);
}

double nmi(const std::map<Node, std::size_t>& a, const std::map<Node, std::size_t>& b) {
    std::vector<std::size_t> la, lb;
    for (const auto& [node, c] : a)
        if (auto it = b.find(node); it != b.end()) {
            la.push_back(c);
            lb.push_back(it->second);
        }
    if (la.empty())
        throw std::invalid_argument("partitions share no nodes");
    return nmi(la, lb);
}

}  // namespace scimap
