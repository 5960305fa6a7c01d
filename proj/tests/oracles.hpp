#pragma once

// Test-only oracles, independent of the library's implementation paths.

#include <cstddef>
#include <vector>

namespace oracles {

// Symmetric eigendecomposition by power iteration with Hotelling deflation.
// Slow and simple; used to cross-check the library's eigen solver on small
// matrices. Matrices are row-major p x p.
struct EigenResult {
    std::vector<double> values;               // descending
    std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i]
};

EigenResult power_iteration_eigen(const std::vector<std::vector<double>>& matrix,
                                  int iterations = 20000);

// Exact two-sided Wilcoxon/Mann-Whitney p by enumerating every C(n+m, n)
// assignment of the pooled sample to the first group. Tie-free input only.
struct WilcoxonOracle {
    double w = 0.0;
    double p_two_sided = 1.0;
};

WilcoxonOracle brute_force_wilcoxon(const std::vector<double>& x,
                                    const std::vector<double>& y);

} // namespace oracles
