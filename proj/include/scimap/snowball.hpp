#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scimap/corpus.hpp"

namespace scimap {

/// Read-only universe of records the snowball draws from. Stands in for
/// the remote bibliographic databases.
class CitationStore {
public:
    CitationStore() = default;
    explicit CitationStore(Corpus universe);

    /// Absent ids yield nullptr.
    const Document* lookup(std::string_view id) const { return universe_.find(id); }

    /// Ids of documents whose title or keywords contain any phrase
    /// (case-insensitive substring), in id order.
    std::vector<std::string> topic_query(std::span<const std::string> phrases) const;

    std::size_t size() const { return universe_.size(); }

private:
    Corpus universe_;
};

struct SnowballConfig {
    std::vector<std::string> seed_query;
    std::vector<int> thresholds;
    int max_iterations = 1;

    /// Throws std::invalid_argument if the config breaks its invariants.
    void validate() const;
    /// Threshold for 0-based iteration `i`; the last one is reused.
    int threshold_for(std::size_t i) const;
};

/// One row of the collection log. The first five fields are the columns of
/// the CSV report.
struct IterationRow {
    std::size_t n_source_documents = 0;
    std::size_t n_references = 0;
    std::size_t n_unique_references = 0;
    int threshold = 0;
    std::size_t n_relevant_retrievable = 0;
    // Bookkeeping beyond the report columns.
    std::size_t n_relevant = 0;
    std::size_t n_relevant_unretrievable = 0;

    bool operator==(const IterationRow&) const = default;
};

struct IterationOutcome {
    std::vector<std::string> added;
    IterationRow row;
};

struct SnowballResult {
    Corpus corpus;
    std::vector<IterationRow> rows;
    /// generations[0] is the seed; generations[i] the ids added by row i.
    std::vector<std::vector<std::string>> generations;
    bool converged = false;
};

/// Throws std::invalid_argument on an empty query or an empty phrase.
Corpus seed_corpus(const CitationStore& store, std::span<const std::string> query);

/// Counts reference frequencies over `newest_generation` only. Every
/// reference cited by at least `threshold` of those documents is relevant;
/// the relevant ones present in the store but not in `current` are added.
IterationOutcome snowball_iterate(const Corpus& current,
                                  std::span<const std::string> newest_generation,
                                  const CitationStore& store, int threshold);

SnowballResult snowball_run(const CitationStore& store, const SnowballConfig& config);

/// Header: iteration, n_source_documents, n_references,
/// n_unique_references, threshold, n_relevant_retrievable.
void write_iteration_csv(std::ostream& out, std::span<const IterationRow> rows);

}  // namespace scimap
