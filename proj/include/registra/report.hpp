#pragma once

#include <optional>
#include <string>
#include <vector>

#include "registra/corpus.hpp"
#include "registra/multivariate.hpp"
#include "registra/stats.hpp"

namespace registra::report {

struct ComparisonSpec {
    std::vector<std::string> groups_a; // pooled when more than one
    std::vector<std::string> groups_b;
    std::vector<int> dimensions; // 1-based; empty = config default dimensions
    std::string label_a;         // display label; defaults to joined group names
    std::string label_b;
};

struct AnalysisConfig {
    std::string manifest_path;
    std::vector<std::string> group_filter; // empty = all groups
    std::size_t top_n = 100;
    double min_rate_per_1000 = 2.0;
    double tag_min_rate_per_1000 = 5.0;
    int factors = 3;
    multivariate::Rotation rotation = multivariate::Rotation::Varimax;
    std::string out_dir = "out";
    std::string data_dir;          // empty = default resolution
    std::string lexicon_path;      // empty = <data_dir>/function_words.txt
    std::string tagger_lexicon;    // empty = <data_dir>/tagger_lexicon.tsv
    std::string tagged_dir;        // optional pre-tagged input (token<TAB>tag files)
    std::vector<int> dimensions; // empty = auto (D1/D2 for fwpca, all factors for mda)
    std::vector<ComparisonSpec> comparisons; // empty = all group pairs
    std::size_t wilcoxon_exact_limit = 10000;
    std::string scores_path; // for the standalone compare command
    std::string jobs_path;   // for the generate command
    bool mock_transport = false;
    unsigned long seed = 0; // reserved; deterministic analyses ignore it

    static AnalysisConfig from_file(const std::string& path);
};

// Resolution order: REGISTRA_DATA_DIR, then the compiled-in source data
// directory, then ./data.
std::string default_data_dir();

const std::string& tool_version();

struct RunResult {
    std::vector<std::string> files; // relative to out_dir
};

RunResult run_ingest(const AnalysisConfig& config, const std::string& cache_path);
RunResult run_fwpca(const AnalysisConfig& config);
RunResult run_mda(const AnalysisConfig& config);
RunResult run_pos_contrast(const AnalysisConfig& config);
RunResult run_content_profile(const AnalysisConfig& config);
RunResult run_compare(const AnalysisConfig& config);
RunResult run_generate(const AnalysisConfig& config);

} // namespace registra::report
