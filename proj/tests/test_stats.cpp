#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "registra/errors.hpp"
#include "registra/stats.hpp"

#include "oracles.hpp"

using namespace registra;

TEST_CASE("wilcoxon W counts pairs with x greater, halves for ties") {
    auto r = stats::wilcoxon_rank_sum({1, 2, 3}, {4, 5, 6});
    CHECK(r.w == 0.0);
    CHECK(r.method == stats::PMethod::Exact);
    CHECK(r.p_value == doctest::Approx(0.1)); // 2 of 20 rank splits as extreme

    auto r2 = stats::wilcoxon_rank_sum({4, 5, 6}, {1, 2, 3});
    CHECK(r2.w == 9.0);
    CHECK(r2.p_value == doctest::Approx(0.1));

    auto tie = stats::wilcoxon_rank_sum({1, 2}, {2, 3});
    CHECK(tie.w == doctest::Approx(0.5));
    CHECK(tie.ties);
    CHECK(tie.method == stats::PMethod::NormalApproximation);
}

TEST_CASE("wilcoxon single observations") {
    auto r = stats::wilcoxon_rank_sum({1}, {2});
    CHECK(r.w == 0.0);
    CHECK(r.method == stats::PMethod::Exact);
    CHECK(r.p_value == doctest::Approx(1.0));
}

TEST_CASE("wilcoxon input errors") {
    CHECK_THROWS_AS(stats::wilcoxon_rank_sum({}, {1.0}), InputError);
    CHECK_THROWS_AS(stats::wilcoxon_rank_sum({1.0}, {}), InputError);
    CHECK_THROWS_AS(stats::wilcoxon_rank_sum({1.0, std::nan("")}, {1.0}), InputError);
    CHECK_THROWS_AS(
        stats::wilcoxon_rank_sum({1.0}, {std::numeric_limits<double>::infinity()}),
        InputError);
}

TEST_CASE("exact p matches brute-force enumeration for tie-free samples up to 8x8") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> size_dist(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = size_dist(rng);
        const int m = size_dist(rng);
        std::vector<double> x, y;
        for (int i = 0; i < n; ++i) x.push_back(unif(rng));
        for (int i = 0; i < m; ++i) y.push_back(unif(rng));
        auto got = stats::wilcoxon_rank_sum(x, y);
        auto expected = oracles::brute_force_wilcoxon(x, y);
        CAPTURE(trial);
        CAPTURE(n);
        CAPTURE(m);
        REQUIRE(got.method == stats::PMethod::Exact);
        CHECK(got.w == expected.w);
        CHECK(got.p_value == doctest::Approx(expected.p_two_sided).epsilon(1e-12));
    }
}

TEST_CASE("antisymmetry: W(x,y) + W(y,x) = n*m with equal p") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x, y;
        for (int i = 0; i < 6; ++i) x.push_back(unif(rng));
        for (int i = 0; i < 9; ++i) y.push_back(unif(rng));
        auto a = stats::wilcoxon_rank_sum(x, y);
        auto b = stats::wilcoxon_rank_sum(y, x);
        CHECK(a.w + b.w == doctest::Approx(54.0));
        CHECK(a.p_value == doctest::Approx(b.p_value).epsilon(1e-12));
    }
}

TEST_CASE("shift monotonicity drives W to n*m and p to significance") {
    std::mt19937 rng(99);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x, y;
    for (int i = 0; i < 12; ++i) x.push_back(normal(rng));
    for (int i = 0; i < 12; ++i) y.push_back(normal(rng));
    std::vector<double> shifted = x;
    for (double& v : shifted) v += 1000.0;
    auto r = stats::wilcoxon_rank_sum(shifted, y);
    CHECK(r.w == doctest::Approx(144.0));
    CHECK(r.p_value < 0.001);
}

TEST_CASE("normal approximation is close to exact for n = m = 20") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    stats::WilcoxonOptions exact_opts;
    exact_opts.exact_limit = 100000;
    stats::WilcoxonOptions approx_opts;
    approx_opts.exact_limit = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x, y;
        for (int i = 0; i < 20; ++i) x.push_back(unif(rng));
        for (int i = 0; i < 20; ++i) y.push_back(unif(rng));
        auto exact = stats::wilcoxon_rank_sum(x, y, exact_opts);
        auto approx = stats::wilcoxon_rank_sum(x, y, approx_opts);
        REQUIRE(exact.method == stats::PMethod::Exact);
        REQUIRE(approx.method == stats::PMethod::NormalApproximation);
        CHECK(std::fabs(exact.p_value - approx.p_value) < 0.01);
    }
}

TEST_CASE("summarize uses interpolated quartiles") {
    auto s = stats::summarize({1, 2, 3, 4});
    CHECK(s.q1 == doctest::Approx(1.75));
    CHECK(s.median == doctest::Approx(2.5));
    CHECK(s.q3 == doctest::Approx(3.25));
    CHECK(s.iqr == doctest::Approx(1.5));

    auto constant = stats::summarize({5, 5, 5, 5, 5});
    CHECK(constant.iqr == 0.0);
    CHECK(constant.median == 5.0);

    auto single = stats::summarize({7});
    CHECK(single.median == 7.0);
    CHECK(single.iqr == 0.0);

    CHECK_THROWS_AS(stats::summarize({}), InputError);
    CHECK_THROWS_AS(stats::summarize({1.0, std::nan("")}), InputError);
}

TEST_CASE("summarize invariances") {
    std::mt19937 rng(11);
    std::normal_distribution<double> normal(0.0, 2.0);
    std::vector<double> values;
    for (int i = 0; i < 23; ++i) values.push_back(normal(rng));
    auto base = stats::summarize(values);

    SUBCASE("permutation invariant") {
        std::vector<double> shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto s = stats::summarize(shuffled);
        CHECK(s.median == doctest::Approx(base.median));
        CHECK(s.iqr == doctest::Approx(base.iqr));
    }
    SUBCASE("iqr invariant under constant shift") {
        std::vector<double> shifted = values;
        for (double& v : shifted) v += 42.0;
        CHECK(stats::summarize(shifted).iqr == doctest::Approx(base.iqr).epsilon(1e-9));
    }
    SUBCASE("iqr scales linearly under positive scaling") {
        std::vector<double> scaled = values;
        for (double& v : scaled) v *= 3.0;
        CHECK(stats::summarize(scaled).iqr == doctest::Approx(3.0 * base.iqr).epsilon(1e-9));
    }
}

TEST_CASE("compare_pair reports direction from medians") {
    stats::ScoreGroup lo{"low", {1, 2, 3, 4, 5}};
    stats::ScoreGroup hi{"high", {11, 12, 13, 14, 15}};
    auto c = stats::compare_pair("D1", hi, lo);
    CHECK(c.direction == "a");
    CHECK(c.test.w == doctest::Approx(25.0));

    auto same = stats::compare_pair("D1", lo, lo);
    CHECK(same.direction == "none");
    CHECK(same.test.p_value > 0.9);
}

TEST_CASE("comparisons_csv layout and p formatting") {
    stats::ScoreGroup a{"A", {1, 2, 3}};
    stats::ScoreGroup b{"B", {4, 5, 6}};
    auto c = stats::compare_pair("D1", a, b);
    auto csv = stats::comparisons_csv({c});
    CHECK(csv ==
          "dimension,group_a,group_b,n_a,n_b,W,p,method,direction,iqr_a,iqr_b\n"
          "D1,A,B,3,3,0.0,0.1000,exact,b,1.000000,1.000000\n");
    CHECK(stats::format_p(0.00005) == "<0.0001");
    CHECK(stats::format_p(0.1234567) == "0.1235");
}
