#include "registra/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "registra/errors.hpp"
#include "registra/format.hpp"

namespace registra::stats {

namespace {

void check_sample(const std::vector<double>& v, const char* name) {
    if (v.empty()) throw InputError(std::string("wilcoxon_rank_sum: empty sample ") + name);
    for (double d : v) {
        if (!std::isfinite(d))
            throw InputError(std::string("wilcoxon_rank_sum: non-finite value in sample ") + name);
    }
}

// Counts of rank arrangements by Mann-Whitney statistic u = 0..n*m, computed
// as the coefficients of the Gaussian binomial [n+m choose n]_q. Multiplies
// by (1-q^(m+i)) and divides by (1-q^i) alternately to keep magnitudes small.
std::vector<double> exact_counts(std::size_t n, std::size_t m) {
    const std::size_t umax = n * m;
    std::vector<double> c(umax + n + 1, 0.0);
    c[0] = 1.0;
    std::size_t degree = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t k = m + i;
        degree += k;
        const std::size_t top = std::min(degree, c.size() - 1);
        for (std::size_t j = top; j >= k; --j) c[j] -= c[j - k];
        for (std::size_t j = i; j <= top; ++j) c[j] += c[j - i];
        degree -= i;
    }
    c.resize(umax + 1);
    return c;
}

double normal_sf(double z) {
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& x,
                                 const std::vector<double>& y,
                                 const WilcoxonOptions& options) {
    check_sample(x, "x");
    check_sample(y, "y");

    WilcoxonResult r;
    r.n = x.size();
    r.m = y.size();

    double w = 0.0;
    bool ties = false;
    for (double xv : x) {
        for (double yv : y) {
            if (xv > yv) w += 1.0;
            else if (xv == yv) {
                w += 0.5;
                ties = true;
            }
        }
    }
    r.w = w;
    r.ties = ties;

    const double nm = static_cast<double>(r.n) * static_cast<double>(r.m);
    if (!ties && r.n * r.m <= options.exact_limit) {
        r.method = PMethod::Exact;
        std::vector<double> counts = exact_counts(r.n, r.m);
        double total = 0.0;
        for (double c : counts) total += c;
        const auto wi = static_cast<std::size_t>(w + 0.5);
        double lower = 0.0;
        double upper = 0.0;
        for (std::size_t u = 0; u <= wi; ++u) lower += counts[u];
        for (std::size_t u = wi; u < counts.size(); ++u) upper += counts[u];
        const double one_sided = std::min(lower, upper) / total;
        r.p_value = std::min(1.0, 2.0 * one_sided);
        return r;
    }

    r.method = PMethod::NormalApproximation;
    const double bign = static_cast<double>(r.n + r.m);
    // Tie correction over the pooled sample.
    std::map<double, std::size_t> mult;
    for (double v : x) ++mult[v];
    for (double v : y) ++mult[v];
    double tie_sum = 0.0;
    for (const auto& [value, t] : mult) {
        (void)value;
        const double td = static_cast<double>(t);
        tie_sum += td * td * td - td;
    }
    const double mean = nm / 2.0;
    const double var =
        (nm / 12.0) * ((bign + 1.0) - tie_sum / (bign * (bign - 1.0)));
    if (var <= 0.0) {
        r.p_value = 1.0;
        return r;
    }
    double z = 0.0;
    if (w > mean) z = (w - mean - 0.5) / std::sqrt(var);
    else if (w < mean) z = (w - mean + 0.5) / std::sqrt(var);
    const double one_sided = normal_sf(std::fabs(z));
    r.p_value = std::min(1.0, 2.0 * one_sided);
    return r;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = 1.0 + (static_cast<double>(n) - 1.0) * p; // 1-based
    const double fl = std::floor(pos);
    auto lo = static_cast<std::size_t>(fl) - 1;
    const double h = pos - fl;
    if (lo + 1 >= n) return sorted[n - 1];
    return sorted[lo] * (1.0 - h) + sorted[lo + 1] * h;
}

} // namespace

SummaryStats summarize(const std::vector<double>& values) {
    if (values.empty()) throw InputError("summarize: empty sample");
    for (double v : values) {
        if (!std::isfinite(v)) throw InputError("summarize: non-finite value");
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    SummaryStats s;
    s.n = sorted.size();
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.50);
    s.q3 = quantile_sorted(sorted, 0.75);
    s.iqr = s.q3 - s.q1;
    return s;
}

GroupComparison compare_pair(const std::string& dimension,
                             const ScoreGroup& a,
                             const ScoreGroup& b,
                             const WilcoxonOptions& options) {
    GroupComparison c;
    c.dimension = dimension;
    c.group_a = a.label;
    c.group_b = b.label;
    c.test = wilcoxon_rank_sum(a.values, b.values, options);
    c.stats_a = summarize(a.values);
    c.stats_b = summarize(b.values);
    if (c.stats_a.median > c.stats_b.median) c.direction = "a";
    else if (c.stats_a.median < c.stats_b.median) c.direction = "b";
    else c.direction = "none";
    return c;
}

std::string comparisons_csv(const std::vector<GroupComparison>& comparisons) {
    std::ostringstream out;
    out << "dimension,group_a,group_b,n_a,n_b,W,p,method,direction,iqr_a,iqr_b\n";
    for (const auto& c : comparisons) {
        out << csv_quote(c.dimension) << ',' << csv_quote(c.group_a) << ','
            << csv_quote(c.group_b) << ',' << c.test.n << ',' << c.test.m << ','
            << format_fixed(c.test.w, 1) << ',' << format_fixed(c.test.p_value, 4) << ','
            << (c.test.method == PMethod::Exact ? "exact" : "normal") << ','
            << c.direction << ',' << format_fixed(c.stats_a.iqr, 6) << ','
            << format_fixed(c.stats_b.iqr, 6) << '\n';
    }
    return out.str();
}

std::string format_p(double p) {
    if (p < 0.0001) return "<0.0001";
    return format_fixed(p, 4);
}

} // namespace registra::stats
