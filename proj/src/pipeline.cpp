#include "scimap/pipeline.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "scimap/graph_io.hpp"
#include "scimap/io.hpp"

namespace scimap {

namespace {

using Setter = std::function<void(const std::string&)>;

void read_key_values(std::istream& in, const std::map<std::string, Setter>& setters,
                     const std::function<bool(const std::string&, const std::string&)>& fallback) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key = value at line " + std::to_string(line_no));
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        try {
            if (auto it = setters.find(key); it != setters.end())
                it->second(value);
            else if (!fallback || !fallback(key, value))
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string(e.what()) + " at line " +
                                        std::to_string(line_no));
        }
    }
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw std::invalid_argument("not a boolean: '" + v + "'");
}

std::size_t parse_count(const std::string& v) {
    auto n = io::parse_integer(v);
    if (n < 0)
        throw std::invalid_argument("negative count: '" + v + "'");
    return static_cast<std::size_t>(n);
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
}

void write_layer_csv(const std::filesystem::path& path, const Layer& layer) {
    auto out = io::open_output(path);
    out << "source_kind,source_label,target_kind,target_label,raw_weight\n";
    for (const auto& [key, w] : layer.edges)
        out << to_string(key.first.kind) << ',' << io::csv_field(key.first.label) << ','
            << to_string(key.second.kind) << ',' << io::csv_field(key.second.label) << ','
            << io::format_double(w) << '\n';
}

}  // namespace

PipelineError::PipelineError(std::string stage, const std::string& message)
    : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> values;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ','))
        values.push_back(static_cast<int>(io::parse_integer(trim(item))));
    return values;
}

PipelineConfig parse_config(std::istream& in) {
    PipelineConfig c;
    std::map<std::string, Setter> setters{
        {"counting",
         [&](const std::string& v) {
             if (v == "full")
                 c.counting = Counting::Full;
             else if (v == "fractional")
                 c.counting = Counting::Fractional;
             else
                 throw std::invalid_argument("counting must be full or fractional");
         }},
        {"walk_length", [&](const std::string& v) { c.walk_length = static_cast<int>(io::parse_integer(v)); }},
        {"damping", [&](const std::string& v) { c.pagerank.damping = io::parse_double(v); }},
        {"tolerance", [&](const std::string& v) { c.pagerank.tolerance = io::parse_double(v); }},
        {"max_iter", [&](const std::string& v) { c.pagerank.max_iterations = parse_count(v); }},
        {"pagerank_scope",
         [&](const std::string& v) {
             if (v == "global")
                 c.pagerank_scope = PageRankScope::Global;
             else if (v == "module")
                 c.pagerank_scope = PageRankScope::PerModule;
             else
                 throw std::invalid_argument("pagerank_scope must be global or module");
         }},
        {"top_n", [&](const std::string& v) { c.top_n = parse_count(v); }},
        {"keep_fraction", [&](const std::string& v) { c.keep_fraction = io::parse_double(v); }},
        {"reduction",
         [&](const std::string& v) {
             if (v == "degree")
                 c.reduction = ReductionCriterion::WeightedDegree;
             else if (v == "pagerank")
                 c.reduction = ReductionCriterion::PageRank;
             else
                 throw std::invalid_argument("reduction must be degree or pagerank");
         }},
        {"thresholds", [&](const std::string& v) { c.thresholds = parse_int_list(v); }},
        {"filter.min_weight",
         [&](const std::string& v) {
             for (auto tag : kAllLayers)
                 c.filter.min_normalized_weight[tag] = io::parse_double(v);
         }},
        {"filter.min_degree", [&](const std::string& v) { c.filter.min_node_total_degree = parse_count(v); }},
        {"filter.keep_largest_component",
         [&](const std::string& v) { c.filter.keep_largest_component = parse_bool(v); }},
    };
    read_key_values(in, setters, [&](const std::string& key, const std::string& value) {
        const std::string prefix = "filter.min_weight.";
        if (key.rfind(prefix, 0) != 0)
            return false;
        c.filter.min_normalized_weight[parse_layer_tag(key.substr(prefix.size()))] =
            io::parse_double(value);
        return true;
    });
    c.filter.validate();
    if (c.walk_length < 1)
        throw std::invalid_argument("walk_length must be at least 1");
    if (!(c.keep_fraction > 0.0 && c.keep_fraction <= 1.0))
        throw std::invalid_argument("keep_fraction must lie in (0, 1]");
    return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    auto in = io::open_input(path);
    return parse_config(in);
}

PlantedSpec parse_planted_spec(std::istream& in) {
    PlantedSpec s;
    std::map<std::string, Setter> setters{
        {"n_blocks", [&](const std::string& v) { s.n_blocks = parse_count(v); }},
        {"authors_per_block", [&](const std::string& v) { s.authors_per_block = parse_count(v); }},
        {"keywords_per_block", [&](const std::string& v) { s.keywords_per_block = parse_count(v); }},
        {"docs_per_block", [&](const std::string& v) { s.docs_per_block = parse_count(v); }},
        {"authors_per_doc", [&](const std::string& v) { s.authors_per_doc = parse_count(v); }},
        {"keywords_per_doc", [&](const std::string& v) { s.keywords_per_doc = parse_count(v); }},
        {"p_intra", [&](const std::string& v) { s.p_intra = io::parse_double(v); }},
        {"p_inter", [&](const std::string& v) { s.p_inter = io::parse_double(v); }},
        {"keyword_dropout", [&](const std::string& v) { s.keyword_dropout = io::parse_double(v); }},
        {"hub_share", [&](const std::string& v) { s.hub_share = io::parse_double(v); }},
        {"seed", [&](const std::string& v) { s.seed = static_cast<std::uint64_t>(parse_count(v)); }},
    };
    read_key_values(in, setters, nullptr);
    s.validate();
    return s;
}

PlantedSpec load_planted_spec(const std::filesystem::path& path) {
    auto in = io::open_input(path);
    return parse_planted_spec(in);
}

MultiNet build_net(const Corpus& corpus, const PipelineConfig& config) {
    const Layer layers[] = {build_author_citation(corpus, config.counting),
                            build_keyword_citation(corpus, config.counting),
                            build_author_keyword(corpus, config.counting)};
    return filter(normalize(unify(layers)), config.filter);
}

void write_corpus_stats(std::ostream& out, const CorpusStats& stats) {
    out << "n_documents,n_references,n_unique_references,n_resolved_edges\n"
        << stats.n_documents << ',' << stats.n_references << ',' << stats.n_unique_references
        << ',' << stats.n_resolved_edges << '\n';
}

PipelineResult run_pipeline(const Corpus& corpus, const PipelineConfig& config) {
    PipelineResult r;
    r.corpus = stage("corpus", [&] {
        if (corpus.empty())
            throw std::invalid_argument("no documents");
        return resolve_citations(corpus);
    });
    r.stats = corpus_stats(r.corpus);
    r.net = stage("build", [&] {
        auto net = build_net(r.corpus, config);
        if (net.empty())
            throw std::invalid_argument("the records induce an empty network");
        return net;
    });
    r.partition = stage("detect", [&] { return detect_modules(r.net, config.walk_length); });
    r.scores = stage("rank", [&] {
        return config.pagerank_scope == PageRankScope::Global
                   ? pagerank(r.net, config.pagerank)
                   : pagerank_per_module(r.net, r.partition, config.pagerank);
    });
    r.reports = stage("report", [&] {
        return module_reports(r.net, r.partition, r.scores, config.top_n, config.keep_fraction,
                              config.reduction);
    });
    return r;
}

PipelineResult run_pipeline(const std::filesystem::path& records, const PipelineConfig& config,
                            const std::filesystem::path& out_dir, bool dump_intermediates) {
    auto corpus = stage("corpus", [&] { return read_records(records); });
    auto result = run_pipeline(corpus, config);

    stage("export", [&] {
        std::filesystem::create_directories(out_dir);
        if (dump_intermediates) {
            auto stats = io::open_output(out_dir / "corpus_stats.csv");
            write_corpus_stats(stats, result.stats);
            const Layer layers[] = {build_author_citation(result.corpus, config.counting),
                                    build_keyword_citation(result.corpus, config.counting),
                                    build_author_keyword(result.corpus, config.counting)};
            for (const auto& layer : layers)
                write_layer_csv(out_dir / ("layer_" + std::string(to_string(layer.tag)) + ".csv"),
                                layer);
            export_graph(normalize(unify(layers)), GraphFormat::GraphML, out_dir / "net_raw.graphml");
        }
        export_graph(result.net, GraphFormat::GraphML, out_dir / "net.graphml", &result.partition);
        auto partition = io::open_output(out_dir / "partition.csv");
        write_partition_csv(partition, result.partition);
        auto modules = io::open_output(out_dir / "modules.csv");
        write_module_summary(modules, result.reports);
        auto rankings = io::open_output(out_dir / "rankings.csv");
        write_rankings(rankings, result.reports);
        for (const auto& report : result.reports)
            export_graph(report.reduced, GraphFormat::GraphML,
                         out_dir / ("module_" + std::to_string(report.module) + ".graphml"),
                         &result.partition);
        return 0;
    });
    return result;
}

}  // namespace scimap
