#include "registra/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "registra/digest.hpp"
#include "registra/errors.hpp"
#include "registra/format.hpp"
#include "registra/genclient.hpp"
#include "registra/lexical.hpp"
#include "registra/svg.hpp"
#include "registra/tagger.hpp"

#ifndef REGISTRA_VERSION
#define REGISTRA_VERSION "0.0.0"
#endif
#ifndef REGISTRA_DEFAULT_DATA_DIR
#define REGISTRA_DEFAULT_DATA_DIR "data"
#endif

namespace registra::report {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

const std::string& tool_version() {
    static const std::string v = REGISTRA_VERSION;
    return v;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("REGISTRA_DATA_DIR")) return env;
    if (fs::exists(fs::path(REGISTRA_DEFAULT_DATA_DIR) / "function_words.txt"))
        return REGISTRA_DEFAULT_DATA_DIR;
    return "data";
}

AnalysisConfig AnalysisConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("config " + path + ": " + e.what());
    }
    AnalysisConfig c;
    c.manifest_path = j.value("manifest", std::string());
    if (j.contains("groups")) c.group_filter = j["groups"].get<std::vector<std::string>>();
    c.top_n = j.value("top_n", std::size_t{100});
    c.min_rate_per_1000 = j.value("min_rate_per_1000", 2.0);
    c.tag_min_rate_per_1000 = j.value("tag_min_rate_per_1000", 5.0);
    c.factors = j.value("factors", 3);
    c.rotation = multivariate::rotation_from_name(j.value("rotation", std::string("varimax")));
    c.out_dir = j.value("out_dir", std::string("out"));
    c.data_dir = j.value("data_dir", std::string());
    c.lexicon_path = j.value("function_word_lexicon", std::string());
    c.tagger_lexicon = j.value("tagger_lexicon", std::string());
    c.tagged_dir = j.value("tagged_dir", std::string());
    if (j.contains("dimensions")) c.dimensions = j["dimensions"].get<std::vector<int>>();
    if (j.contains("comparisons")) {
        for (const auto& item : j["comparisons"]) {
            ComparisonSpec spec;
            if (item.contains("a") && item["a"].is_array())
                spec.groups_a = item["a"].get<std::vector<std::string>>();
            else if (item.contains("a"))
                spec.groups_a = {item["a"].get<std::string>()};
            if (item.contains("b") && item["b"].is_array())
                spec.groups_b = item["b"].get<std::vector<std::string>>();
            else if (item.contains("b"))
                spec.groups_b = {item["b"].get<std::string>()};
            if (item.contains("dims")) spec.dimensions = item["dims"].get<std::vector<int>>();
            spec.label_a = item.value("label_a", std::string());
            spec.label_b = item.value("label_b", std::string());
            if (spec.groups_a.empty() || spec.groups_b.empty())
                throw InputError("config " + path + ": comparison needs \"a\" and \"b\" groups");
            c.comparisons.push_back(std::move(spec));
        }
    }
    c.wilcoxon_exact_limit = j.value("wilcoxon_exact_limit", std::size_t{10000});
    c.scores_path = j.value("scores", std::string());
    c.jobs_path = j.value("jobs", std::string());
    c.mock_transport = j.value("mock_transport", false);
    c.seed = j.value("seed", 0UL);

    if (c.top_n < 1) throw InputError("config: top_n must be positive");
    if (c.min_rate_per_1000 < 0 || c.tag_min_rate_per_1000 < 0)
        throw InputError("config: rate thresholds must be nonnegative");
    if (c.factors < 1) throw InputError("config: factors must be at least 1");
    return c;
}

namespace {

std::string resolve_data_dir(const AnalysisConfig& c) {
    return c.data_dir.empty() ? default_data_dir() : c.data_dir;
}

std::string utc_now_iso() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Staged output: everything is rendered in memory first so a failed run
// leaves no partial files behind.
class OutputStage {
public:
    OutputStage(std::string command, const AnalysisConfig& config)
        : command_(std::move(command)), config_(&config), started_(utc_now_iso()) {}

    void add(const std::string& name, std::string content) {
        names_.push_back(name);
        contents_.push_back(std::move(content));
    }

    void add_input(const std::string& path) {
        inputs_.push_back({path, sha256_file_hex(path)});
    }

    RunResult commit(const std::string& out_dir) {
        fs::create_directories(out_dir);
        RunResult result;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const fs::path p = fs::path(out_dir) / names_[i];
            if (p.has_parent_path()) fs::create_directories(p.parent_path());
            std::ofstream out(p, std::ios::binary);
            if (!out) throw InputError("cannot write output file: " + p.string());
            out << contents_[i];
            result.files.push_back(names_[i]);
        }
        ordered_json record;
        record["tool"] = "registra";
        record["version"] = tool_version();
        record["command"] = command_;
        record["started"] = started_;
        record["finished"] = utc_now_iso();
        ordered_json cfg;
        cfg["manifest"] = config_->manifest_path;
        cfg["groups"] = config_->group_filter;
        cfg["top_n"] = config_->top_n;
        cfg["min_rate_per_1000"] = config_->min_rate_per_1000;
        cfg["tag_min_rate_per_1000"] = config_->tag_min_rate_per_1000;
        cfg["factors"] = config_->factors;
        cfg["rotation"] = multivariate::rotation_name(config_->rotation);
        cfg["dimensions"] = config_->dimensions;
        cfg["wilcoxon_exact_limit"] = config_->wilcoxon_exact_limit;
        cfg["seed"] = config_->seed;
        record["config"] = std::move(cfg);
        ordered_json inputs = ordered_json::array();
        for (const auto& [path, digest] : inputs_) {
            ordered_json i;
            i["path"] = path;
            i["sha256"] = digest;
            inputs.push_back(std::move(i));
        }
        record["inputs"] = std::move(inputs);
        record["outputs"] = result.files;
        const fs::path rp = fs::path(out_dir) / "run_record.json";
        std::ofstream out(rp, std::ios::binary);
        out << record.dump(2) << '\n';
        result.files.push_back("run_record.json");
        return result;
    }

private:
    std::string command_;
    const AnalysisConfig* config_;
    std::string started_;
    std::vector<std::string> names_;
    std::vector<std::string> contents_;
    std::vector<std::pair<std::string, std::string>> inputs_;
};

corpus::Corpus load_scoped_corpus(const AnalysisConfig& config, OutputStage& stage) {
    if (config.manifest_path.empty()) throw InputError("config: no manifest path");
    stage.add_input(config.manifest_path);
    corpus::Corpus c = corpus::load_corpus_file(config.manifest_path);
    if (!config.group_filter.empty()) c = c.subset(config.group_filter);
    if (c.empty()) throw InputError("corpus is empty after group filtering");
    return c;
}

std::string group_summary_csv(const corpus::Corpus& c) {
    std::ostringstream out;
    out << "group,n_texts,total_words,mean_length,mean_length_rounded\n";
    for (const auto& g : c.group_labels()) {
        const auto s = c.group_summary(g);
        out << csv_quote(g) << ',' << s.n_texts << ',' << s.total_words << ','
            << format_fixed(s.mean_length, 6) << ','
            << static_cast<long long>(std::llround(s.mean_length)) << '\n';
    }
    const auto total = c.corpus_summary();
    out << "ALL," << total.n_texts << ',' << total.total_words << ','
        << format_fixed(total.mean_length, 6) << ','
        << static_cast<long long>(std::llround(total.mean_length)) << '\n';
    return out.str();
}

void markdown_group_table(std::ostringstream& md, const corpus::Corpus& c) {
    md << "| group | texts | total words | mean length |\n";
    md << "|---|---|---|---|\n";
    for (const auto& g : c.group_labels()) {
        const auto s = c.group_summary(g);
        md << "| " << g << " | " << s.n_texts << " | " << s.total_words << " | "
           << static_cast<long long>(std::llround(s.mean_length)) << " |\n";
    }
}

struct DimensionScores {
    // label -> scores for one dimension, insertion order preserved
    std::vector<std::pair<std::string, std::vector<double>>> by_group;
};

DimensionScores collect_scores(const Eigen::MatrixXd& scores,
                               const std::vector<std::string>& doc_groups,
                               const std::vector<std::string>& group_order,
                               int dim /*1-based*/) {
    DimensionScores out;
    for (const auto& g : group_order) out.by_group.push_back({g, {}});
    for (Eigen::Index r = 0; r < scores.rows(); ++r) {
        const auto& g = doc_groups[static_cast<std::size_t>(r)];
        for (auto& [label, values] : out.by_group) {
            if (label == g) {
                values.push_back(scores(r, dim - 1));
                break;
            }
        }
    }
    return out;
}

std::vector<double> pooled_scores(const Eigen::MatrixXd& scores,
                                  const std::vector<std::string>& doc_groups,
                                  const std::vector<std::string>& groups,
                                  int dim) {
    std::set<std::string> wanted(groups.begin(), groups.end());
    std::vector<double> out;
    for (Eigen::Index r = 0; r < scores.rows(); ++r) {
        if (wanted.count(doc_groups[static_cast<std::size_t>(r)]))
            out.push_back(scores(r, dim - 1));
    }
    return out;
}

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += "+";
        out += names[i];
    }
    return out;
}

std::vector<ComparisonSpec> resolve_comparisons(const AnalysisConfig& config,
                                                const std::vector<std::string>& group_order,
                                                const std::vector<int>& default_dims) {
    std::vector<ComparisonSpec> specs = config.comparisons;
    if (specs.empty()) {
        for (std::size_t i = 0; i < group_order.size(); ++i) {
            for (std::size_t j = i + 1; j < group_order.size(); ++j) {
                ComparisonSpec s;
                s.groups_a = {group_order[i]};
                s.groups_b = {group_order[j]};
                specs.push_back(std::move(s));
            }
        }
    }
    for (auto& s : specs) {
        if (s.dimensions.empty()) s.dimensions = default_dims;
        if (s.label_a.empty()) s.label_a = joined(s.groups_a);
        if (s.label_b.empty()) s.label_b = joined(s.groups_b);
    }
    return specs;
}

std::vector<stats::GroupComparison> run_comparisons(
    const Eigen::MatrixXd& scores,
    const std::vector<std::string>& doc_groups,
    const std::vector<std::string>& group_order,
    const std::vector<ComparisonSpec>& specs,
    std::size_t exact_limit,
    int max_dim) {
    std::set<std::string> known(group_order.begin(), group_order.end());
    stats::WilcoxonOptions opts;
    opts.exact_limit = exact_limit;
    std::vector<stats::GroupComparison> out;
    for (const auto& spec : specs) {
        for (const auto& g : spec.groups_a) {
            if (!known.count(g)) throw InputError("comparison references unknown group: " + g);
        }
        for (const auto& g : spec.groups_b) {
            if (!known.count(g)) throw InputError("comparison references unknown group: " + g);
        }
        for (int dim : spec.dimensions) {
            if (dim < 1 || dim > max_dim) continue;
            stats::ScoreGroup a{spec.label_a, pooled_scores(scores, doc_groups, spec.groups_a, dim)};
            stats::ScoreGroup b{spec.label_b, pooled_scores(scores, doc_groups, spec.groups_b, dim)};
            if (a.values.empty() || b.values.empty())
                throw InputError("comparison group is empty: " +
                                 (a.values.empty() ? spec.label_a : spec.label_b));
            out.push_back(stats::compare_pair("D" + std::to_string(dim), a, b, opts));
        }
    }
    return out;
}

std::string group_stats_csv(const Eigen::MatrixXd& scores,
                            const std::vector<std::string>& doc_groups,
                            const std::vector<std::string>& group_order,
                            int dims) {
    std::ostringstream out;
    out << "dimension,group,n,median,q1,q3,iqr\n";
    for (int d = 1; d <= dims; ++d) {
        DimensionScores ds = collect_scores(scores, doc_groups, group_order, d);
        for (const auto& [label, values] : ds.by_group) {
            if (values.empty()) continue;
            const auto s = stats::summarize(values);
            out << 'D' << d << ',' << csv_quote(label) << ',' << s.n << ','
                << format_fixed(s.median, 6) << ',' << format_fixed(s.q1, 6) << ','
                << format_fixed(s.q3, 6) << ',' << format_fixed(s.iqr, 6) << '\n';
        }
    }
    return out.str();
}

void markdown_comparisons(std::ostringstream& md,
                          const std::vector<stats::GroupComparison>& comparisons) {
    md << "| dimension | group A | group B | n(A) | n(B) | W | p | direction |\n";
    md << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : comparisons) {
        md << "| " << c.dimension << " | " << c.group_a << " | " << c.group_b << " | "
           << c.test.n << " | " << c.test.m << " | " << format_fixed(c.test.w, 1) << " | "
           << stats::format_p(c.test.p_value) << " | "
           << (c.direction == "a" ? c.group_a : c.direction == "b" ? c.group_b : "none")
           << " |\n";
    }
}

// Loading blocks in the style used for dimension tables: entries with
// |loading| >= 0.3, positives then negatives, by descending magnitude.
void markdown_loading_blocks(std::ostringstream& md,
                             const std::vector<std::string>& features,
                             const Eigen::MatrixXd& loadings) {
    for (Eigen::Index d = 0; d < loadings.cols(); ++d) {
        std::vector<std::pair<double, std::string>> pos, neg;
        for (Eigen::Index f = 0; f < loadings.rows(); ++f) {
            const double v = loadings(f, d);
            if (v >= 0.3) pos.push_back({v, features[static_cast<std::size_t>(f)]});
            else if (v <= -0.3) neg.push_back({-v, features[static_cast<std::size_t>(f)]});
        }
        std::stable_sort(pos.rbegin(), pos.rend());
        std::stable_sort(neg.rbegin(), neg.rend());
        md << "\n### D" << (d + 1) << "\n\n";
        md << "Positive loadings:";
        if (pos.empty()) md << " (none at |loading| >= 0.3)";
        for (const auto& [v, name] : pos) md << ' ' << name << " (" << format_fixed(v, 6) << ")";
        md << "\n\nNegative loadings:";
        if (neg.empty()) md << " (none at |loading| >= 0.3)";
        for (const auto& [v, name] : neg) md << ' ' << name << " (-" << format_fixed(v, 6) << ")";
        md << "\n";
    }
}

void add_score_plots(OutputStage& stage,
                     const std::string& prefix,
                     const Eigen::MatrixXd& scores,
                     const std::vector<std::string>& doc_groups,
                     const std::vector<std::string>& group_order,
                     const std::vector<std::string>& features,
                     const Eigen::MatrixXd& display_loadings,
                     int dims) {
    if (dims >= 2) {
        std::vector<svg::ScatterPoint> points;
        for (Eigen::Index r = 0; r < scores.rows(); ++r) {
            points.push_back({scores(r, 0), scores(r, 1), doc_groups[static_cast<std::size_t>(r)]});
        }
        stage.add(prefix + "_scatter_d1_d2.svg",
                  svg::scatter_plot(prefix + " scores", "D1", "D2", points));
    }
    for (int d = 1; d <= dims; ++d) {
        DimensionScores ds = collect_scores(scores, doc_groups, group_order, d);
        std::vector<svg::Box> boxes;
        for (const auto& [label, values] : ds.by_group) {
            if (values.empty()) continue;
            svg::Box b;
            b.label = label;
            b.group = label;
            b.stats = stats::summarize(values);
            b.whisker_lo = *std::min_element(values.begin(), values.end());
            b.whisker_hi = *std::max_element(values.begin(), values.end());
            boxes.push_back(std::move(b));
        }
        stage.add(prefix + "_boxplot_d" + std::to_string(d) + ".svg",
                  svg::box_plot(prefix + " D" + std::to_string(d) + " scores by group",
                                "D" + std::to_string(d) + " score", boxes));
        std::vector<double> values;
        for (Eigen::Index f = 0; f < display_loadings.rows(); ++f)
            values.push_back(display_loadings(f, d - 1));
        stage.add(prefix + "_loadings_d" + std::to_string(d) + ".svg",
                  svg::value_bars(prefix + " D" + std::to_string(d) + " loadings", features,
                                  values));
    }
}

} // namespace

RunResult run_ingest(const AnalysisConfig& config, const std::string& cache_path) {
    if (config.manifest_path.empty()) throw InputError("ingest: no manifest path");
    corpus::Corpus c = corpus::load_corpus_file(config.manifest_path);
    if (!config.group_filter.empty()) c = c.subset(config.group_filter);
    const fs::path out(cache_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    corpus::write_corpus_cache(c, cache_path);
    RunResult r;
    r.files.push_back(cache_path);
    return r;
}

RunResult run_fwpca(const AnalysisConfig& config) {
    OutputStage stage("fwpca", config);
    corpus::Corpus c = load_scoped_corpus(config, stage);

    const std::string lexicon_path = config.lexicon_path.empty()
                                         ? resolve_data_dir(config) + "/function_words.txt"
                                         : config.lexicon_path;
    stage.add_input(lexicon_path);
    auto lexicon = lexical::FunctionWordLexicon::from_file(lexicon_path);

    auto ranked = lexical::rank_words(c, config.top_n);
    auto features = lexical::select_function_words(ranked, lexicon, config.min_rate_per_1000);
    auto matrix = lexical::build_feature_matrix(c, features);
    auto model = multivariate::pca(matrix);

    std::vector<int> dims = config.dimensions.empty() ? std::vector<int>{1, 2} : config.dimensions;
    const int max_dim = static_cast<int>(model.eigenvalues.size());
    int plot_dims = 0;
    for (int d : dims) plot_dims = std::max(plot_dims, d);
    plot_dims = std::min(plot_dims, max_dim);
    if (plot_dims == 0) plot_dims = std::min(2, max_dim);

    auto specs = resolve_comparisons(config, c.group_labels(), dims);
    auto comparisons = run_comparisons(model.scores, model.doc_groups, c.group_labels(), specs,
                                       config.wilcoxon_exact_limit, max_dim);

    const Eigen::MatrixXd display = model.structure_loadings();

    stage.add("feature_matrix.csv", lexical::feature_matrix_csv(matrix));
    stage.add("eigenvalues.csv", multivariate::eigenvalues_csv(model));
    stage.add("loadings.csv", multivariate::loadings_csv(model.features, display));
    stage.add("scores.csv", multivariate::scores_csv(model.doc_ids, model.doc_groups, model.scores));
    stage.add("comparisons.csv", stats::comparisons_csv(comparisons));
    stage.add("group_stats.csv",
              group_stats_csv(model.scores, model.doc_groups, c.group_labels(), plot_dims));
    stage.add("group_summary.csv", group_summary_csv(c));
    stage.add("model_metadata.json", multivariate::pca_metadata_json(model));
    add_score_plots(stage, "fwpca", model.scores, model.doc_groups, c.group_labels(),
                    model.features, display, plot_dims);

    std::ostringstream md;
    md << "# Function-word PCA\n\n";
    md << "## Corpus\n\n";
    markdown_group_table(md, c);
    md << "\n## Feature set (" << features.words.size() << " words, top " << config.top_n
       << " filtered at >= " << format_fixed(config.min_rate_per_1000, 6) << " per 1,000)\n\n";
    for (std::size_t i = 0; i < features.words.size(); ++i) {
        if (i) md << ", ";
        md << features.words[i];
    }
    md << "\n\n## Variance\n\n| dimension | eigenvalue | proportion | cumulative |\n|---|---|---|---|\n";
    auto rep = multivariate::variance_report(model);
    for (std::size_t i = 0; i < rep.proportions.size() && i < static_cast<std::size_t>(plot_dims); ++i) {
        md << "| D" << (i + 1) << " | " << format_fixed(model.eigenvalues(static_cast<Eigen::Index>(i)), 6)
           << " | " << format_fixed(rep.proportions[i], 6) << " | "
           << format_fixed(rep.cumulative[i], 6) << " |\n";
    }
    md << "\n## Strongest loadings (|loading| >= 0.3)\n";
    markdown_loading_blocks(md, model.features, display.leftCols(std::max(plot_dims, 1)));
    md << "\n## Group comparisons\n\n";
    markdown_comparisons(md, comparisons);
    stage.add("summary.md", md.str());

    return stage.commit(config.out_dir);
}

namespace {

struct TaggedCorpus {
    std::vector<tagger::BiberFeatureVector> vectors;
    std::vector<std::string> doc_groups;
};

TaggedCorpus tag_and_extract(const AnalysisConfig& config, const corpus::Corpus& c,
                             OutputStage& stage) {
    const std::string data_dir = resolve_data_dir(config);
    auto rules = tagger::FeatureRuleData::from_dir(data_dir);
    TaggedCorpus out;
    if (!config.tagged_dir.empty()) {
        for (const auto& d : c.documents()) {
            const std::string path = config.tagged_dir + "/" + d.id + ".txt";
            auto stream = tagger::ingest_tagged(path);
            stream.doc_id = d.id;
            out.vectors.push_back(tagger::extract_biber_features(stream, rules));
            out.doc_groups.push_back(d.group);
        }
    } else {
        const std::string lexicon_path = config.tagger_lexicon.empty()
                                             ? data_dir + "/tagger_lexicon.tsv"
                                             : config.tagger_lexicon;
        stage.add_input(lexicon_path);
        auto tg = tagger::Tagger::from_file(lexicon_path);
        for (const auto& d : c.documents()) {
            auto stream = tg.tag(d);
            out.vectors.push_back(tagger::extract_biber_features(stream, rules));
            out.doc_groups.push_back(d.group);
        }
    }
    return out;
}

// Corpus-level tag rates per 1,000 words decide which features enter the MDA.
std::vector<std::size_t> filter_features_by_rate(const std::vector<tagger::BiberFeatureVector>& vectors,
                                                 double min_rate_per_1000,
                                                 std::vector<std::string>& dropped) {
    std::array<std::size_t, tagger::kBiberFeatureCount> totals{};
    std::size_t total_words = 0;
    for (const auto& v : vectors) {
        for (std::size_t f = 0; f < tagger::kBiberFeatureCount; ++f) totals[f] += v.counts[f];
        total_words += v.word_count;
    }
    std::vector<std::size_t> kept;
    for (std::size_t f = 0; f < tagger::kBiberFeatureCount; ++f) {
        const double rate =
            1000.0 * static_cast<double>(totals[f]) / static_cast<double>(total_words);
        if (rate >= min_rate_per_1000) kept.push_back(f);
        else
            dropped.push_back(tagger::biber_feature_codes()[f] + " (" + format_fixed(rate, 6) +
                              ")");
    }
    return kept;
}

} // namespace

RunResult run_mda(const AnalysisConfig& config) {
    OutputStage stage("mda", config);
    corpus::Corpus c = load_scoped_corpus(config, stage);
    TaggedCorpus tagged = tag_and_extract(config, c, stage);

    std::vector<std::string> dropped;
    auto kept = filter_features_by_rate(tagged.vectors, config.tag_min_rate_per_1000, dropped);
    if (kept.size() < 2)
        throw InputError("mda: fewer than 2 features pass the rate threshold of " +
                         format_fixed(config.tag_min_rate_per_1000, 2) + " per 1,000 words");
    if (config.factors >= static_cast<int>(kept.size()))
        throw InputError("mda: factor count " + std::to_string(config.factors) +
                         " is not below the number of selected features (" +
                         std::to_string(kept.size()) + ")");

    lexical::FeatureMatrix matrix;
    matrix.unit = lexical::Unit::PerHundredWords;
    for (std::size_t f : kept) matrix.features.push_back(tagger::biber_feature_codes()[f]);
    for (std::size_t i = 0; i < tagged.vectors.size(); ++i) {
        matrix.doc_ids.push_back(tagged.vectors[i].doc_id);
        matrix.doc_groups.push_back(tagged.doc_groups[i]);
        std::vector<double> row;
        for (std::size_t f : kept) row.push_back(tagged.vectors[i].rate_per_100(f));
        matrix.values.push_back(std::move(row));
    }

    auto model = multivariate::factor_analysis(matrix, config.factors, config.rotation);

    std::vector<int> dims = config.dimensions;
    if (dims.empty()) {
        for (int d = 1; d <= config.factors; ++d) dims.push_back(d);
    }
    auto specs = resolve_comparisons(config, c.group_labels(), dims);
    auto comparisons = run_comparisons(model.scores, model.doc_groups, c.group_labels(), specs,
                                       config.wilcoxon_exact_limit, config.factors);

    stage.add("feature_rates.csv", tagger::feature_vectors_csv(tagged.vectors, tagged.doc_groups));
    stage.add("rotated_loadings.csv", multivariate::loadings_csv(model.features, model.loadings));
    stage.add("factor_scores.csv",
              multivariate::scores_csv(model.doc_ids, model.doc_groups, model.scores));
    stage.add("variance.csv", multivariate::factor_variance_csv(model));
    stage.add("comparisons.csv", stats::comparisons_csv(comparisons));
    stage.add("group_stats.csv",
              group_stats_csv(model.scores, model.doc_groups, c.group_labels(), config.factors));
    stage.add("group_summary.csv", group_summary_csv(c));
    stage.add("model_metadata.json", multivariate::factor_metadata_json(model));
    add_score_plots(stage, "mda", model.scores, model.doc_groups, c.group_labels(),
                    model.features, model.loadings, config.factors);

    std::ostringstream md;
    md << "# Multidimensional register analysis\n\n";
    md << "## Corpus\n\n";
    markdown_group_table(md, c);
    md << "\n## Selected features (" << kept.size() << " of " << tagger::kBiberFeatureCount
       << " at >= " << format_fixed(config.tag_min_rate_per_1000, 6) << " per 1,000 words)\n\n";
    for (std::size_t i = 0; i < matrix.features.size(); ++i) {
        if (i) md << ", ";
        md << matrix.features[i];
    }
    if (!dropped.empty()) {
        md << "\n\nFiltered out:";
        for (const auto& d : dropped) md << ' ' << d;
    }
    md << "\n\n## Variance (" << config.factors << " factors, "
       << multivariate::rotation_name(config.rotation) << ")\n\n";
    md << "| dimension | ss_loadings | proportion | cumulative |\n|---|---|---|---|\n";
    auto rep = multivariate::variance_report(model);
    const double p = static_cast<double>(model.features.size());
    for (std::size_t i = 0; i < rep.proportions.size(); ++i) {
        md << "| D" << (i + 1) << " | " << format_fixed(rep.proportions[i] * p, 6) << " | "
           << format_fixed(rep.proportions[i], 6) << " | " << format_fixed(rep.cumulative[i], 6)
           << " |\n";
    }
    md << "\n## Strongest loadings (|loading| >= 0.3)\n";
    markdown_loading_blocks(md, model.features, model.loadings);
    md << "\n## Group comparisons\n\n";
    markdown_comparisons(md, comparisons);
    if (model.heywood)
        md << "\nNote: a Heywood case was encountered; the affected communalities were "
              "clamped to 1.\n";
    stage.add("summary.md", md.str());

    return stage.commit(config.out_dir);
}

RunResult run_pos_contrast(const AnalysisConfig& config) {
    OutputStage stage("pos", config);
    corpus::Corpus c = load_scoped_corpus(config, stage);
    TaggedCorpus tagged = tag_and_extract(config, c, stage);

    std::map<std::string, std::vector<tagger::BiberFeatureVector>> by_group;
    for (std::size_t i = 0; i < tagged.vectors.size(); ++i)
        by_group[tagged.doc_groups[i]].push_back(tagged.vectors[i]);

    std::vector<tagger::WordClassProfile> profiles;
    for (const auto& g : c.group_labels())
        profiles.push_back(tagger::word_class_profile(by_group[g], g));

    std::ostringstream csv;
    csv << "group";
    for (const auto& label : tagger::word_class_labels()) csv << ',' << label;
    csv << '\n';
    for (const auto& p : profiles) {
        csv << csv_quote(p.group);
        for (double r : p.rates_per_1000) csv << ',' << format_fixed(r, 6);
        csv << '\n';
    }
    stage.add("word_class_rates.csv", csv.str());

    std::vector<std::string> categories(tagger::word_class_labels().begin(),
                                        tagger::word_class_labels().end());
    std::vector<svg::BarGroup> series;
    for (const auto& p : profiles) {
        svg::BarGroup s;
        s.group = p.group;
        s.values.assign(p.rates_per_1000.begin(), p.rates_per_1000.end());
        series.push_back(std::move(s));
    }
    stage.add("word_class_bars.svg",
              svg::grouped_bar_chart("Word-class rates per 1,000 words", "per 1,000 words",
                                     categories, series));

    std::ostringstream md;
    md << "# Word-class contrast\n\n| group |";
    for (const auto& label : tagger::word_class_labels()) md << ' ' << label << " |";
    md << "\n|---|";
    for (std::size_t i = 0; i < tagger::kWordClassCount; ++i) md << "---|";
    md << '\n';
    for (const auto& p : profiles) {
        md << "| " << p.group << " |";
        for (double r : p.rates_per_1000) md << ' ' << format_fixed(r, 6) << " |";
        md << '\n';
    }
    stage.add("summary.md", md.str());

    return stage.commit(config.out_dir);
}

RunResult run_content_profile(const AnalysisConfig& config) {
    OutputStage stage("profile", config);
    corpus::Corpus c = load_scoped_corpus(config, stage);

    const std::string lexicon_path = config.lexicon_path.empty()
                                         ? resolve_data_dir(config) + "/function_words.txt"
                                         : config.lexicon_path;
    stage.add_input(lexicon_path);
    auto lexicon = lexical::FunctionWordLexicon::from_file(lexicon_path);

    const std::size_t top_n = config.top_n;
    auto profile = lexical::content_word_profile(c, top_n, lexicon);

    std::ostringstream csv;
    csv << "rank,word,rate_per_1000,is_content\n";
    for (const auto& w : profile.words) {
        csv << w.rank << ',' << csv_quote(w.word) << ',' << format_fixed(w.rate_per_1000, 6)
            << ',' << (w.is_content ? 1 : 0) << '\n';
    }
    stage.add("content_profile.csv", csv.str());

    std::ostringstream md;
    md << "# Content-word profile (top " << top_n << ")\n\n";
    md << "Content words in top " << top_n << ": " << profile.content_count << "\n\n";
    if (profile.first_content_rank > 0) {
        md << "First content word: " << profile.first_content_word << " at rank "
           << profile.first_content_rank << "\n\n";
    } else {
        md << "No content words in the top " << top_n << ".\n\n";
    }
    md << "| rank | word | per 1,000 | content |\n|---|---|---|---|\n";
    for (const auto& w : profile.words) {
        md << "| " << w.rank << " | " << w.word << " | " << format_fixed(w.rate_per_1000, 6)
           << " | " << (w.is_content ? 1 : 0) << " |\n";
    }
    stage.add("summary.md", md.str());

    return stage.commit(config.out_dir);
}

namespace {

std::vector<std::string> parse_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += ch;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

} // namespace

RunResult run_compare(const AnalysisConfig& config) {
    OutputStage stage("compare", config);
    if (config.scores_path.empty()) throw InputError("compare: config needs \"scores\" path");
    stage.add_input(config.scores_path);

    std::ifstream in(config.scores_path);
    if (!in) throw InputError("cannot open scores file: " + config.scores_path);
    std::string line;
    if (!std::getline(in, line)) throw InputError("scores file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = parse_csv_line(line);
    if (header.size() < 3 || header[0] != "doc_id" || header[1] != "group")
        throw InputError("scores file: expected header doc_id,group,D1,...");
    const int max_dim = static_cast<int>(header.size()) - 2;

    std::vector<std::string> doc_groups;
    std::vector<std::string> group_order;
    Eigen::MatrixXd scores(0, max_dim);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = parse_csv_line(line);
        if (fields.size() != header.size())
            throw InputError("scores file: row with " + std::to_string(fields.size()) +
                             " fields, expected " + std::to_string(header.size()));
        doc_groups.push_back(fields[1]);
        if (std::find(group_order.begin(), group_order.end(), fields[1]) == group_order.end())
            group_order.push_back(fields[1]);
        std::vector<double> row;
        for (std::size_t i = 2; i < fields.size(); ++i) {
            try {
                row.push_back(std::stod(fields[i]));
            } catch (const std::exception&) {
                throw InputError("scores file: non-numeric score \"" + fields[i] + "\"");
            }
        }
        rows.push_back(std::move(row));
    }
    scores.resize(static_cast<Eigen::Index>(rows.size()), max_dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int d = 0; d < max_dim; ++d) scores(static_cast<Eigen::Index>(r), d) = rows[r][static_cast<std::size_t>(d)];
    }

    std::vector<int> dims = config.dimensions.empty() ? std::vector<int>{1, 2} : config.dimensions;
    auto specs = resolve_comparisons(config, group_order, dims);
    auto comparisons = run_comparisons(scores, doc_groups, group_order, specs,
                                       config.wilcoxon_exact_limit, max_dim);
    stage.add("comparisons.csv", stats::comparisons_csv(comparisons));

    std::ostringstream md;
    md << "# Group comparisons\n\n";
    markdown_comparisons(md, comparisons);
    stage.add("summary.md", md.str());

    return stage.commit(config.out_dir);
}

RunResult run_generate(const AnalysisConfig& config) {
    if (config.jobs_path.empty()) throw InputError("generate: config needs \"jobs\" path");
    auto jobs = genclient::read_jobs(config.jobs_path);

    genclient::GenerateOptions options;
    options.out_dir = config.out_dir;

    std::unique_ptr<genclient::Transport> transport;
    if (config.mock_transport) {
        transport = std::make_unique<genclient::MockTransport>();
        options.timestamp_provider = [] { return std::string("1970-01-01T00:00:00Z"); };
        options.sleeper = [](double) {};
    } else {
        transport = genclient::HttpTransport::from_env();
    }

    auto result = genclient::generate_corpus(jobs, *transport, options);

    std::ostringstream md;
    md << "# Generation run\n\n";
    md << "Jobs: " << jobs.size() << ", succeeded: " << result.succeeded
       << ", failed: " << result.failed << "\n\n";
    md << "| template | n | mean words | min | max |\n|---|---|---|---|---|\n";
    for (const auto& rep : genclient::length_report(result.records)) {
        md << "| " << rep.template_id << " | " << rep.n << " | "
           << format_fixed(rep.mean_words, 1) << " | " << rep.min_words << " | "
           << rep.max_words << " |\n";
    }
    std::ofstream out(fs::path(config.out_dir) / "generation_summary.md", std::ios::binary);
    out << md.str();

    RunResult r;
    r.files = {result.manifest_path, result.records_path, result.failures_path};
    return r;
}

} // namespace registra::report
