#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scimap {

/// One bibliographic record.
///
/// Authors and keywords are stored normalized (see normalize_label()).
/// A record without authors is "degraded": it is kept, but only feeds the
/// layers it has data for.
struct Document {
    std::string id;
    std::string title;
    int year = 0;
    std::vector<std::string> authors;
    std::vector<std::string> keywords;
    std::vector<std::string> references;

    bool degraded() const { return authors.empty(); }

    bool operator==(const Document&) const = default;
};

using CitationEdge = std::pair<std::string, std::string>;

/// A validated collection of documents plus the document-level citation
/// edges resolved among them.
struct Corpus {
    std::map<std::string, Document, std::less<>> documents;
    std::set<CitationEdge> citation_edges;
    std::size_t unresolved_reference_count = 0;
    std::size_t self_reference_count = 0;

    const Document* find(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }
    std::size_t size() const { return documents.size(); }
    bool empty() const { return documents.empty(); }

    /// Inserts a document, throwing std::invalid_argument on an empty or
    /// duplicate id. Citation edges are not touched.
    void add(Document doc);

    bool operator==(const Corpus&) const = default;
};

struct CorpusStats {
    std::size_t n_documents = 0;
    std::size_t n_references = 0;
    std::size_t n_unique_references = 0;
    std::size_t n_resolved_edges = 0;

    bool operator==(const CorpusStats&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Case-folds (ASCII), trims and collapses internal whitespace runs.
std::string normalize_label(std::string_view text);

/// Trims leading and trailing whitespace only.
std::string trim(std::string_view text);

/// Removes repeated entries, keeping the first occurrence.
void dedupe_in_place(std::vector<std::string>& values);

/// Parses one JSON-object record. Throws ParseError tagged with `line`.
Document parse_record(std::string_view text, std::size_t line);

/// Parses line-delimited records. Blank lines are skipped. Citations are
/// left unresolved.
Corpus parse_records(std::istream& in);
Corpus parse_records(std::string_view text);
Corpus read_records(const std::filesystem::path& path);

std::string serialize_record(const Document& doc);
/// One record per line, in id order.
std::string serialize(const Corpus& corpus);
void write_records(const std::filesystem::path& path, const Corpus& corpus);

/// Recomputes citation edges from the reference lists. Idempotent.
Corpus resolve_citations(Corpus corpus);

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace scimap
