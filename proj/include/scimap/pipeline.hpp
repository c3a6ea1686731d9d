#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scimap/community.hpp"
#include "scimap/corpus.hpp"
#include "scimap/multinet.hpp"
#include "scimap/pagerank.hpp"
#include "scimap/report.hpp"
#include "scimap/synth.hpp"

namespace scimap {

enum class PageRankScope { Global, PerModule };

struct PipelineConfig {
    Counting counting = Counting::Full;
    FilterSpec filter;
    int walk_length = kDefaultWalkLength;
    PageRankOptions pagerank;
    PageRankScope pagerank_scope = PageRankScope::Global;
    std::size_t top_n = 10;
    double keep_fraction = 0.5;
    ReductionCriterion reduction = ReductionCriterion::WeightedDegree;
    /// Only read by the snowball subcommand.
    std::vector<int> thresholds;
};

/// Flat `key = value` file; `#` starts a comment. Known keys:
///   counting (full|fractional), walk_length, damping, tolerance, max_iter,
///   pagerank_scope (global|module), top_n, keep_fraction,
///   reduction (degree|pagerank), thresholds (comma list),
///   filter.min_weight (all layers), filter.min_weight.<layer>,
///   filter.min_degree, filter.keep_largest_component (true|false)
PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config(const std::filesystem::path& path);

/// Same format; keys are the PlantedSpec field names.
PlantedSpec parse_planted_spec(std::istream& in);
PlantedSpec load_planted_spec(const std::filesystem::path& path);

std::vector<int> parse_int_list(std::string_view text);

/// Failure inside run_pipeline; stage() names the step that failed.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& message);

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct PipelineResult {
    Corpus corpus;
    CorpusStats stats;
    MultiNet net;  ///< normalized and filtered
    ModulePartition partition;
    CentralityScores scores;
    std::vector<ModuleReport> reports;
};

PipelineResult run_pipeline(const Corpus& corpus, const PipelineConfig& config);

/// Reads records, runs the pipeline and writes into `out_dir`:
/// net.graphml, partition.csv, modules.csv, rankings.csv and
/// module_<id>.graphml per reduced module. With `dump_intermediates`
/// also corpus_stats.csv, layer_<tag>.csv and net_raw.graphml.
PipelineResult run_pipeline(const std::filesystem::path& records, const PipelineConfig& config,
                            const std::filesystem::path& out_dir,
                            bool dump_intermediates = false);

/// Layers -> unify -> normalize -> filter.
MultiNet build_net(const Corpus& corpus, const PipelineConfig& config);

void write_corpus_stats(std::ostream& out, const CorpusStats& stats);

}  // namespace scimap
