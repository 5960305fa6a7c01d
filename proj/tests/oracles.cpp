#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracles {

namespace {

std::vector<double> matvec(const std::vector<std::vector<double>>& m,
                           const std::vector<double>& v) {
    const std::size_t p = m.size();
    std::vector<double> out(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

EigenResult power_iteration_eigen(const std::vector<std::vector<double>>& matrix,
                                  int iterations) {
    const std::size_t p = matrix.size();
    // Shift so all eigenvalues are nonnegative: A + c*I keeps eigenvectors
    // and adds c to each eigenvalue. c = max row sum bounds |lambda|.
    double shift = 0.0;
    for (const auto& row : matrix) {
        double s = 0.0;
        for (double x : row) s += std::fabs(x);
        shift = std::max(shift, s);
    }
    std::vector<std::vector<double>> work = matrix;
    for (std::size_t i = 0; i < p; ++i) work[i][i] += shift;

    EigenResult result;
    for (std::size_t k = 0; k < p; ++k) {
        std::vector<double> v(p, 0.0);
        v[k % p] = 1.0;
        // Start orthogonal to already-found vectors.
        for (const auto& prev : result.vectors) {
            double dot = 0.0;
            for (std::size_t i = 0; i < p; ++i) dot += v[i] * prev[i];
            for (std::size_t i = 0; i < p; ++i) v[i] -= dot * prev[i];
        }
        if (norm(v) < 1e-12) {
            v.assign(p, 1.0 / std::sqrt(static_cast<double>(p)));
        }
        double lambda = 0.0;
        for (int it = 0; it < iterations; ++it) {
            std::vector<double> w = matvec(work, v);
            for (const auto& prev : result.vectors) {
                double dot = 0.0;
                for (std::size_t i = 0; i < p; ++i) dot += w[i] * prev[i];
                for (std::size_t i = 0; i < p; ++i) w[i] -= dot * prev[i];
            }
            const double n = norm(w);
            if (n < 1e-300) {
                v = w;
                lambda = 0.0;
                break;
            }
            for (double& x : w) x /= n;
            lambda = n;
            v = w;
        }
        // Rayleigh quotient against the unshifted matrix.
        std::vector<double> av = matvec(matrix, v);
        double rq = 0.0;
        for (std::size_t i = 0; i < p; ++i) rq += v[i] * av[i];
        result.values.push_back(rq);
        result.vectors.push_back(v);
        (void)lambda;
    }
    // Descending eigenvalues.
    std::vector<std::size_t> order(p);
    for (std::size_t i = 0; i < p; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return result.values[a] > result.values[b];
    });
    EigenResult sorted;
    for (std::size_t i : order) {
        sorted.values.push_back(result.values[i]);
        sorted.vectors.push_back(result.vectors[i]);
    }
    return sorted;
}

WilcoxonOracle brute_force_wilcoxon(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    std::vector<double> pooled = x;
    pooled.insert(pooled.end(), y.begin(), y.end());
    std::sort(pooled.begin(), pooled.end());
    for (std::size_t i = 1; i < pooled.size(); ++i) {
        if (pooled[i] == pooled[i - 1])
            throw std::invalid_argument("brute_force_wilcoxon: ties not supported");
    }

    auto statistic = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double w = 0.0;
        for (double av : a) {
            for (double bv : b) {
                if (av > bv) w += 1.0;
            }
        }
        return w;
    };
    const double observed = statistic(x, y);

    // Every subset of size n of the pooled sample plays the role of x.
    std::vector<bool> mask(n + m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
    std::sort(mask.begin(), mask.end()); // lexicographically first arrangement
    std::size_t total = 0;
    std::size_t at_or_below = 0;
    std::size_t at_or_above = 0;
    do {
        std::vector<double> a, b;
        for (std::size_t i = 0; i < pooled.size(); ++i) {
            (mask[i] ? a : b).push_back(pooled[i]);
        }
        const double w = statistic(a, b);
        ++total;
        if (w <= observed) ++at_or_below;
        if (w >= observed) ++at_or_above;
    } while (std::next_permutation(mask.begin(), mask.end()));

    WilcoxonOracle o;
    o.w = observed;
    const double one_sided =
        static_cast<double>(std::min(at_or_below, at_or_above)) / static_cast<double>(total);
    o.p_two_sided = std::min(1.0, 2.0 * one_sided);
    return o;
}

} // namespace oracles
