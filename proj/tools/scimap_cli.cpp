// scimap: command-line front end for building and analysing science maps
// from bibliographic records.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "scimap/corpus.hpp"
#include "scimap/graph_io.hpp"
#include "scimap/io.hpp"
#include "scimap/pipeline.hpp"
#include "scimap/snowball.hpp"
#include "scimap/synth.hpp"

namespace fs = std::filesystem;
using namespace scimap;

namespace {

// Runs a subcommand body, mapping exceptions to "<stage>: <message>" and exit 1.
template <typename Fn>
int guarded(const char* stage, Fn&& fn) {
    try {
        fn();
        return 0;
    } catch (const PipelineError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << stage << ": " << e.what() << '\n';
    }
    return 1;
}

PipelineConfig config_or_default(const std::string& path) {
    return path.empty() ? PipelineConfig{} : load_config(path);
}

std::ostream& output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-")
        return std::cout;
    file = io::open_output(path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multidimensional science maps from bibliographic records"};
    app.require_subcommand(1);
    int status = 0;

    // ingest
    std::string records, out, config_path;
    auto* ingest = app.add_subcommand("ingest", "Parse and validate records; print corpus statistics");
    ingest->add_option("--records", records, "Record file (one JSON object per line)")->required();
    ingest->add_option("--out", out, "Write normalized records here");
    ingest->callback([&] {
        status = guarded("ingest", [&] {
            auto corpus = resolve_citations(read_records(records));
            if (!out.empty())
                write_records(out, corpus);
            write_corpus_stats(std::cout, corpus_stats(corpus));
            std::cerr << corpus.unresolved_reference_count << " unresolved references, "
                      << corpus.self_reference_count << " self references dropped\n";
        });
    });

    // snowball
    std::string store_path, report_path;
    std::vector<std::string> queries;
    std::string thresholds = "3,10,10";
    int max_iter = 5;
    auto* snow = app.add_subcommand("snowball", "Grow a topic seed into a citation-closed corpus");
    snow->add_option("--store", store_path, "Record file acting as the citation store")->required();
    snow->add_option("--query", queries, "Topic phrase (repeatable)")->required();
    snow->add_option("--thresholds", thresholds, "Per-iteration frequency thresholds")->capture_default_str();
    snow->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
    snow->add_option("--out", out, "Corpus output file")->required();
    snow->add_option("--report", report_path, "Iteration CSV (default stdout)");
    snow->callback([&] {
        status = guarded("snowball", [&] {
            SnowballConfig cfg{queries, parse_int_list(thresholds), max_iter};
            auto result = snowball_run(CitationStore(read_records(store_path)), cfg);
            write_records(out, result.corpus);
            std::ofstream file;
            write_iteration_csv(output(report_path, file), result.rows);
            std::cerr << result.corpus.size() << " documents, "
                      << (result.converged ? "converged" : "not converged") << '\n';
        });
    });

    // build
    auto* build = app.add_subcommand("build", "Build, unify, normalize and filter the multinet");
    build->add_option("--records", records)->required();
    build->add_option("--config", config_path, "key = value config file");
    build->add_option("--out", out, "GraphML output")->required();
    build->callback([&] {
        status = guarded("build", [&] {
            auto corpus = resolve_citations(read_records(records));
            export_graph(build_net(corpus, config_or_default(config_path)), GraphFormat::GraphML, out);
        });
    });

    // detect
    std::string net_path;
    int walk_length = kDefaultWalkLength;
    auto* detect = app.add_subcommand("detect", "Walktrap modules at maximum modularity");
    detect->add_option("--net", net_path, "GraphML multinet")->required();
    detect->add_option("--walk-length", walk_length, "Random walk length")->capture_default_str();
    detect->add_option("--out", out, "partition.csv (default stdout)");
    detect->callback([&] {
        status = guarded("detect", [&] {
            auto partition = detect_modules(read_graphml(net_path).net, walk_length);
            std::ofstream file;
            write_partition_csv(output(out, file), partition);
            std::cerr << partition.n_communities << " modules, Q = " << partition.q << '\n';
        });
    });

    // rank
    std::string partition_path;
    auto* rank = app.add_subcommand("rank", "PageRank rankings and module summaries");
    rank->add_option("--net", net_path)->required();
    rank->add_option("--partition", partition_path)->required();
    rank->add_option("--config", config_path);
    rank->add_option("--out", out, "rankings CSV (default stdout)");
    rank->add_option("--modules", report_path, "module summary CSV");
    rank->callback([&] {
        status = guarded("rank", [&] {
            auto cfg = config_or_default(config_path);
            auto net = read_graphml(net_path).net;
            auto partition = read_partition_csv(fs::path(partition_path));
            auto scores = cfg.pagerank_scope == PageRankScope::Global
                              ? pagerank(net, cfg.pagerank)
                              : pagerank_per_module(net, partition, cfg.pagerank);
            auto reports = module_reports(net, partition, scores, cfg.top_n, cfg.keep_fraction,
                                          cfg.reduction);
            std::ofstream file;
            write_rankings(output(out, file), reports);
            if (!report_path.empty()) {
                auto summary = io::open_output(report_path);
                write_module_summary(summary, reports);
            }
        });
    });

    // export
    std::string format = "graphml";
    std::string module_arg;
    double keep_fraction = 1.0;
    auto* exp = app.add_subcommand("export", "Write a net or one reduced module as graphml/dot/csv");
    exp->add_option("--net", net_path)->required();
    exp->add_option("--partition", partition_path, "Attach communities from partition.csv");
    exp->add_option("--module", module_arg, "Export only this module (needs --partition)");
    exp->add_option("--keep-fraction", keep_fraction, "Fraction of module nodes kept")->capture_default_str();
    exp->add_option("--format", format, "graphml | dot | csv")->capture_default_str();
    exp->add_option("--out", out)->required();
    exp->callback([&] {
        status = guarded("export", [&] {
            auto file = read_graphml(net_path);
            std::optional<ModulePartition> partition = file.partition;
            if (!partition_path.empty())
                partition = read_partition_csv(fs::path(partition_path));
            MultiNet net = file.net;
            if (!module_arg.empty()) {
                if (!partition)
                    throw std::invalid_argument("--module needs a partition");
                net = reduced_graph(net, *partition,
                                    static_cast<std::size_t>(io::parse_integer(module_arg)),
                                    keep_fraction);
            }
            export_graph(net, parse_graph_format(format), out, partition ? &*partition : nullptr);
        });
    });

    // pipeline
    std::string out_dir;
    bool dump = false;
    auto* pipe = app.add_subcommand("pipeline", "Records to modules, rankings and exports");
    pipe->add_option("--records", records)->required();
    pipe->add_option("--config", config_path);
    pipe->add_option("--out-dir", out_dir)->required();
    pipe->add_flag("--dump", dump, "Also write intermediate layers and the unfiltered net");
    pipe->callback([&] {
        status = guarded("pipeline", [&] {
            auto result = run_pipeline(records, config_or_default(config_path), out_dir, dump);
            std::cerr << result.partition.n_communities << " modules, Q = " << result.partition.q
                      << '\n';
        });
    });

    // synth
    std::string spec_path, truth_path;
    long long seed = -1;
    auto* synth = app.add_subcommand("synth", "Generate a planted-partition corpus");
    synth->add_option("--spec", spec_path, "PlantedSpec key = value file");
    synth->add_option("--seed", seed, "Overrides the spec seed");
    synth->add_option("--out", out, "Record file")->required();
    synth->add_option("--truth", truth_path, "Ground-truth CSV (default <out>.truth.csv)");
    synth->callback([&] {
        status = guarded("synth", [&] {
            PlantedSpec spec = spec_path.empty() ? PlantedSpec{} : load_planted_spec(spec_path);
            if (seed >= 0)
                spec.seed = static_cast<std::uint64_t>(seed);
            auto synthetic = generate_corpus(spec);
            write_records(out, synthetic.corpus);
            auto truth = io::open_output(truth_path.empty() ? out + ".truth.csv" : truth_path);
            truth << "kind,label,block\n";
            for (const auto& [node, block] : synthetic.truth)
                truth << to_string(node.kind) << ',' << io::csv_field(node.label) << ',' << block
                      << '\n';
        });
    });

    CLI11_PARSE(app, argc, argv);
    return status;
}
