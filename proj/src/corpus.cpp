#include "scimap/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "scimap/io.hpp"

namespace scimap {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string> string_list(const nlohmann::json& record, const char* field,
                                     std::size_t line) {
    std::vector<std::string> values;
    auto it = record.find(field);
    if (it == record.end() || it->is_null())
        return values;
    if (!it->is_array())
        throw ParseError(line, std::string("field '") + field + "' is not an array");
    for (const auto& item : *it) {
        if (!item.is_string())
            throw ParseError(line, std::string("field '") + field + "' has a non-string entry");
        values.push_back(item.get<std::string>());
    }
    return values;
}

// Normalizes every entry, drops the ones that become empty, then dedupes.
template <typename Fn>
void clean_list(std::vector<std::string>& values, Fn normalize) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        auto n = normalize(v);
        if (!n.empty())
            out.push_back(std::move(n));
    }
    dedupe_in_place(out);
    values = std::move(out);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error(reason + " at line " + std::to_string(line)), line_(line) {}

const Document* Corpus::find(std::string_view id) const {
    auto it = documents.find(id);
    return it == documents.end() ? nullptr : &it->second;
}

void Corpus::add(Document doc) {
    if (doc.id.empty())
        throw std::invalid_argument("document with empty id");
    auto id = doc.id;
    if (!documents.emplace(id, std::move(doc)).second)
        throw std::invalid_argument("duplicate id '" + id + "'");
}

std::string trim(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && is_space(text[b]))
        ++b;
    while (e > b && is_space(text[e - 1]))
        --e;
    return std::string(text.substr(b, e - b));
}

std::string normalize_label(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

void dedupe_in_place(std::vector<std::string>& values) {
    std::unordered_set<std::string> seen;
    std::erase_if(values, [&](const std::string& v) { return !seen.insert(v).second; });
}

Document parse_record(std::string_view text, std::size_t line) {
    nlohmann::json record;
    try {
        record = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line, std::string("malformed record (") + e.what() + ")");
    }
    if (!record.is_object())
        throw ParseError(line, "record is not an object");

    Document doc;
    auto id = record.find("id");
    if (id == record.end() || id->is_null())
        throw ParseError(line, "missing id");
    if (!id->is_string())
        throw ParseError(line, "id is not a string");
    doc.id = trim(id->get<std::string>());
    if (doc.id.empty())
        throw ParseError(line, "empty id");

    if (auto t = record.find("title"); t != record.end() && !t->is_null()) {
        if (!t->is_string())
            throw ParseError(line, "title is not a string");
        doc.title = t->get<std::string>();
    }
    if (auto y = record.find("year"); y != record.end() && !y->is_null()) {
        if (!y->is_number_integer())
            throw ParseError(line, "year is not an integer");
        doc.year = y->get<int>();
    }

    doc.authors = string_list(record, "authors", line);
    doc.keywords = string_list(record, "keywords", line);
    doc.references = string_list(record, "references", line);
    clean_list(doc.authors, normalize_label);
    clean_list(doc.keywords, normalize_label);
    clean_list(doc.references, trim);
    return doc;
}

Corpus parse_records(std::istream& in) {
    Corpus corpus;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (trim(text).empty())
            continue;
        auto doc = parse_record(text, line);
        if (corpus.contains(doc.id))
            throw ParseError(line, "duplicate id '" + doc.id + "'");
        corpus.add(std::move(doc));
    }
    return corpus;
}

Corpus parse_records(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_records(in);
}

Corpus read_records(const std::filesystem::path& path) {
    auto in = io::open_input(path);
    return parse_records(in);
}

std::string serialize_record(const Document& doc) {
    nlohmann::ordered_json record;
    record["id"] = doc.id;
    record["title"] = doc.title;
    record["year"] = doc.year;
    record["authors"] = doc.authors;
    record["keywords"] = doc.keywords;
    record["references"] = doc.references;
    return record.dump();
}

std::string serialize(const Corpus& corpus) {
    std::string out;
    for (const auto& [id, doc] : corpus.documents) {
        out += serialize_record(doc);
        out += '\n';
    }
    return out;
}

void write_records(const std::filesystem::path& path, const Corpus& corpus) {
    auto out = io::open_output(path);
    out << serialize(corpus);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

Corpus resolve_citations(Corpus corpus) {
    corpus.citation_edges.clear();
    corpus.unresolved_reference_count = 0;
    corpus.self_reference_count = 0;
    for (const auto& [id, doc] : corpus.documents) {
        for (const auto& ref : doc.references) {
            if (ref == id)
                ++corpus.self_reference_count;
            else if (corpus.contains(ref))
                corpus.citation_edges.emplace(id, ref);
            else
                ++corpus.unresolved_reference_count;
        }
    }
    return corpus;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    stats.n_documents = corpus.size();
    std::set<std::string_view> unique;
    for (const auto& [id, doc] : corpus.documents) {
        stats.n_references += doc.references.size();
        unique.insert(doc.references.begin(), doc.references.end());
    }
    stats.n_unique_references = unique.size();
    stats.n_resolved_edges = corpus.citation_edges.size();
    return stats;
}

}  // namespace scimap
