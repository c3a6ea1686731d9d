#include "scimap/snowball.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace scimap {

namespace {

bool mentions(std::string_view haystack, const std::vector<std::string>& needles) {
    return std::any_of(needles.begin(), needles.end(), [&](const std::string& n) {
        return haystack.find(n) != std::string_view::npos;
    });
}

}  // namespace

CitationStore::CitationStore(Corpus universe) : universe_(std::move(universe)) {}

std::vector<std::string> CitationStore::topic_query(std::span<const std::string> phrases) const {
    std::vector<std::string> needles;
    for (const auto& p : phrases) {
        auto n = normalize_label(p);
        if (n.empty())
            throw std::invalid_argument("empty query phrase");
        needles.push_back(std::move(n));
    }
    std::vector<std::string> ids;
    for (const auto& [id, doc] : universe_.documents) {
        bool hit = mentions(normalize_label(doc.title), needles) ||
                   std::any_of(doc.keywords.begin(), doc.keywords.end(),
                               [&](const std::string& k) { return mentions(k, needles); });
        if (hit)
            ids.push_back(id);
    }
    return ids;
}

void SnowballConfig::validate() const {
    if (seed_query.empty())
        throw std::invalid_argument("snowball needs at least one query phrase");
    if (thresholds.empty())
        throw std::invalid_argument("snowball needs at least one threshold");
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (thresholds[i] < 1)
            throw std::invalid_argument("thresholds must be positive");
        if (i > 0 && thresholds[i] < thresholds[i - 1])
            throw std::invalid_argument("thresholds must be non-decreasing");
    }
    if (max_iterations < 1)
        throw std::invalid_argument("max_iterations must be at least 1");
}

int SnowballConfig::threshold_for(std::size_t i) const {
    return thresholds.at(std::min(i, thresholds.size() - 1));
}

Corpus seed_corpus(const CitationStore& store, std::span<const std::string> query) {
    if (query.empty())
        throw std::invalid_argument("empty seed query");
    Corpus seed;
    for (const auto& id : store.topic_query(query))
        seed.add(*store.lookup(id));
    return resolve_citations(std::move(seed));
}

IterationOutcome snowball_iterate(const Corpus& current,
                                  std::span<const std::string> newest_generation,
                                  const CitationStore& store, int threshold) {
    if (threshold < 1)
        throw std::invalid_argument("threshold must be positive");
    IterationOutcome out;
    out.row.threshold = threshold;
    out.row.n_source_documents = newest_generation.size();

    std::map<std::string_view, std::size_t> frequency;
    for (const auto& id : newest_generation) {
        const Document* doc = current.find(id);
        if (doc == nullptr)
            throw std::invalid_argument("generation member '" + id + "' not in corpus");
        out.row.n_references += doc->references.size();
        for (const auto& ref : doc->references)
            ++frequency[ref];
    }
    out.row.n_unique_references = frequency.size();

    for (const auto& [ref, count] : frequency) {
        if (count < static_cast<std::size_t>(threshold))
            continue;
        ++out.row.n_relevant;
        if (current.contains(ref))
            continue;
        if (store.lookup(ref) == nullptr) {
            ++out.row.n_relevant_unretrievable;
            continue;
        }
        out.added.emplace_back(ref);
    }
    out.row.n_relevant_retrievable = out.added.size();
    return out;
}

SnowballResult snowball_run(const CitationStore& store, const SnowballConfig& config) {
    config.validate();
    SnowballResult result;
    result.corpus = seed_corpus(store, config.seed_query);
    std::vector<std::string> newest;
    for (const auto& [id, doc] : result.corpus.documents)
        newest.push_back(id);
    result.generations.push_back(newest);

    for (int i = 0; i < config.max_iterations; ++i) {
        auto step = snowball_iterate(result.corpus, newest, store, config.threshold_for(i));
        result.rows.push_back(step.row);
        if (step.added.empty()) {
            result.converged = true;
            break;
        }
        for (const auto& id : step.added)
            result.corpus.add(*store.lookup(id));
        newest = std::move(step.added);
        result.generations.push_back(newest);
    }
    result.corpus = resolve_citations(std::move(result.corpus));
    return result;
}

void write_iteration_csv(std::ostream& out, std::span<const IterationRow> rows) {
    out << "iteration,n_source_documents,n_references,n_unique_references,threshold,"
           "n_relevant_retrievable\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << (i + 1) << ',' << r.n_source_documents << ',' << r.n_references << ','
            << r.n_unique_references << ',' << r.threshold << ',' << r.n_relevant_retrievable
            << '\n';
    }
}

}  // namespace scimap
