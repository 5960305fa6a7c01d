#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace registra::stats {

enum class PMethod { Exact, NormalApproximation };

struct WilcoxonResult {
    double w = 0.0;      // first-sample Mann-Whitney statistic: #(x > y) + 0.5 per tie
    double p_value = 1.0; // two-sided
    PMethod method = PMethod::Exact;
    std::size_t n = 0;   // size of x
    std::size_t m = 0;   // size of y
    bool ties = false;
};

struct WilcoxonOptions {
    // Exact enumeration is used when the data are tie-free and n*m does not
    // exceed this limit; otherwise the normal approximation with continuity
    // and tie corrections applies.
    std::size_t exact_limit = 10000;
};

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& x,
                                 const std::vector<double>& y,
                                 const WilcoxonOptions& options = {});

struct SummaryStats {
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    std::size_t n = 0;
};

// Quartiles by linear interpolation between order statistics at positions
// 1 + (n-1)*p.
SummaryStats summarize(const std::vector<double>& values);

struct ScoreGroup {
    std::string label;
    std::vector<double> values;
};

struct GroupComparison {
    std::string dimension;
    std::string group_a;
    std::string group_b;
    WilcoxonResult test;
    SummaryStats stats_a;
    SummaryStats stats_b;
    std::string direction; // "a" | "b" | "none" (which group has the higher median)
};

GroupComparison compare_pair(const std::string& dimension,
                             const ScoreGroup& a,
                             const ScoreGroup& b,
                             const WilcoxonOptions& options = {});

// CSV per External Interfaces:
// dimension, group_a, group_b, n_a, n_b, W, p, method, direction, iqr_a, iqr_b
std::string comparisons_csv(const std::vector<GroupComparison>& comparisons);

// p at four decimals with "<0.0001" floor, for human-readable reports.
std::string format_p(double p);

} // namespace registra::stats
