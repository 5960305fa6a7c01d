#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "registra/errors.hpp"
#include "registra/multivariate.hpp"

#include "oracles.hpp"

using namespace registra;

namespace {

lexical::FeatureMatrix make_matrix(const std::vector<std::vector<double>>& rows,
                                   std::vector<std::string> features = {}) {
    lexical::FeatureMatrix m;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    if (features.empty()) {
        for (std::size_t c = 0; c < cols; ++c) features.push_back("f" + std::to_string(c));
    }
    m.features = std::move(features);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.doc_ids.push_back("d" + std::to_string(r));
        m.doc_groups.push_back("G");
        m.values.push_back(rows[r]);
    }
    return m;
}

lexical::FeatureMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> data(rows, std::vector<double>(cols));
    // Correlated columns: mix a few shared sources so the correlation
    // structure is non-trivial.
    const std::size_t sources = std::max<std::size_t>(2, cols / 3);
    std::vector<std::vector<double>> basis(rows, std::vector<double>(sources));
    for (auto& row : basis) {
        for (double& v : row) v = normal(rng);
    }
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<double> w(sources);
        for (double& v : w) v = weight(rng);
        for (std::size_t r = 0; r < rows; ++r) {
            double v = 0.3 * normal(rng);
            for (std::size_t s = 0; s < sources; ++s) v += w[s] * basis[r][s];
            data[r][c] = v;
        }
    }
    return make_matrix(data);
}

// Data whose sample correlation matrix equals `target` up to rounding:
// whiten a random matrix, then color it with the matrix square root.
lexical::FeatureMatrix matrix_with_correlation(const Eigen::MatrixXd& target,
                                               std::size_t rows, std::mt19937& rng) {
    const auto p = target.rows();
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd x(rows, p);
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
        for (Eigen::Index c = 0; c < p; ++c) x(r, c) = normal(rng);
    }
    x.rowwise() -= x.colwise().mean();
    Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(rows - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    Eigen::MatrixXd whiten = es.operatorInverseSqrt();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ts(target);
    Eigen::MatrixXd color = ts.operatorSqrt();
    Eigen::MatrixXd z = x * whiten * color;

    std::vector<std::vector<double>> data(rows, std::vector<double>(p));
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
        for (Eigen::Index c = 0; c < p; ++c)
            data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = z(r, c);
    }
    return make_matrix(data);
}

Eigen::MatrixXd two_block_correlation() {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(6, 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) {
                r(i, j) = 0.8;
                r(i + 3, j + 3) = 0.8;
            }
        }
    }
    return r;
}

double pearson(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double n = static_cast<double>(a.size());
    const double ma = a.mean();
    const double mb = b.mean();
    double num = 0.0, da = 0.0, db = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        num += (a(i) - ma) * (b(i) - mb);
        da += (a(i) - ma) * (a(i) - ma);
        db += (b(i) - mb) * (b(i) - mb);
    }
    (void)n;
    return num / std::sqrt(da * db);
}

} // namespace

TEST_CASE("standardize centers and scales each column") {
    auto m = make_matrix({{1, 5}, {2, 5.5}, {3, 9}});
    auto z = multivariate::standardize(m);
    CHECK(z.values[0][0] == doctest::Approx(-1.0));
    CHECK(z.values[1][0] == doctest::Approx(0.0));
    CHECK(z.values[2][0] == doctest::Approx(1.0));

    SUBCASE("idempotent") {
        auto zz = multivariate::standardize(z);
        for (std::size_t r = 0; r < z.rows(); ++r) {
            for (std::size_t c = 0; c < z.cols(); ++c) {
                CHECK(zz.values[r][c] == doctest::Approx(z.values[r][c]).epsilon(1e-12));
            }
        }
    }
    SUBCASE("zero-variance column names the feature") {
        auto bad = make_matrix({{1, 5}, {2, 5}, {3, 5}}, {"ok", "flat"});
        CHECK_THROWS_WITH_AS(multivariate::standardize(bad), doctest::Contains("flat"),
                             NumericalError);
    }
}

TEST_CASE("correlation basics") {
    SUBCASE("identical columns correlate at 1") {
        auto m = make_matrix({{1, 1}, {2, 2}, {3, 3}, {5, 5}});
        auto c = multivariate::correlation(m);
        CHECK(c.r(0, 1) == doctest::Approx(1.0));
        CHECK(c.r(0, 0) == 1.0);
    }
    SUBCASE("negated column correlates at -1") {
        auto m = make_matrix({{1, -1}, {2, -2}, {3, -3}, {5, -5}});
        auto c = multivariate::correlation(m);
        CHECK(c.r(0, 1) == doctest::Approx(-1.0));
    }
    SUBCASE("matches the direct covariance formula on a 4x3 fixture") {
        auto m = make_matrix({{1, 2, 0.5}, {2, 1, 1.5}, {4, 3, 2.0}, {3, 7, 0.0}});
        auto c = multivariate::correlation(m);
        Eigen::MatrixXd x(4, 3);
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 3; ++col) x(r, col) = m.values[r][col];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(c.r(i, j) == doctest::Approx(pearson(x.col(i), x.col(j))).epsilon(1e-12));
            }
        }
    }
    SUBCASE("fewer than 3 rows is an error") {
        auto m = make_matrix({{1, 2}, {3, 4}});
        CHECK_THROWS_AS(multivariate::correlation(m), NumericalError);
    }
}

TEST_CASE("pca on two perfectly correlated features") {
    auto m = make_matrix({{1, 2}, {2, 4}, {3, 6}, {4, 8}});
    auto model = multivariate::pca(m);
    CHECK(model.eigenvalues(0) == doctest::Approx(2.0));
    CHECK(model.eigenvalues(1) == doctest::Approx(0.0));
    CHECK(std::fabs(model.loadings(0, 0)) == doctest::Approx(0.7071067812));
    CHECK(model.loadings(0, 0) == doctest::Approx(model.loadings(1, 0)));
    CHECK(model.loadings(0, 0) > 0); // sign canonicalization

    auto rep = multivariate::variance_report(model);
    CHECK(rep.proportions[0] == doctest::Approx(1.0));
    CHECK(rep.proportions[1] == doctest::Approx(0.0));
}

TEST_CASE("pca on orthogonal features gives unit eigenvalues") {
    auto m = make_matrix({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    auto model = multivariate::pca(m);
    CHECK(model.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(model.eigenvalues(1) == doctest::Approx(1.0));
    auto rep = multivariate::variance_report(model);
    CHECK(rep.proportions[0] == doctest::Approx(0.5));
    CHECK(rep.cumulative[1] == doctest::Approx(1.0));
}

TEST_CASE("pca eigenpairs match the power-iteration oracle on a 5-feature fixture") {
    std::mt19937 rng(20240818);
    auto m = random_matrix(rng, 40, 5);
    auto corr = multivariate::correlation(m);
    auto model = multivariate::pca(m);

    std::vector<std::vector<double>> rmat(5, std::vector<double>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) rmat[i][j] = corr.r(i, j);
    auto oracle = oracles::power_iteration_eigen(rmat);

    for (int k = 0; k < 5; ++k) {
        CHECK(model.eigenvalues(k) == doctest::Approx(oracle.values[k]).epsilon(1e-7));
        // Eigenvectors match up to sign.
        double dot = 0.0;
        for (int i = 0; i < 5; ++i) dot += model.loadings(i, k) * oracle.vectors[k][i];
        CHECK(std::fabs(dot) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("pca reconstruction, score orthogonality, and eigenvalue sum") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t cols = 3 + static_cast<std::size_t>(trial);
        auto m = random_matrix(rng, 60, cols);
        auto corr = multivariate::correlation(m);
        auto model = multivariate::pca(m);

        Eigen::MatrixXd reconstructed =
            model.loadings * model.eigenvalues.asDiagonal() * model.loadings.transpose();
        CHECK((reconstructed - corr.r).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(model.eigenvalues.sum() ==
              doctest::Approx(static_cast<double>(cols)).epsilon(1e-12));

        for (Eigen::Index i = 0; i < model.scores.cols(); ++i) {
            const double var =
                model.scores.col(i).squaredNorm() / static_cast<double>(model.scores.rows() - 1);
            if (model.eigenvalues(i) > 1e-12) {
                CHECK(std::fabs(var - model.eigenvalues(i)) < 1e-8);
            }
            for (Eigen::Index j = i + 1; j < model.scores.cols(); ++j) {
                if (model.eigenvalues(i) > 1e-12 && model.eigenvalues(j) > 1e-12) {
                    CHECK(std::fabs(pearson(model.scores.col(i), model.scores.col(j))) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("permuting documents permutes score rows and changes nothing else") {
    std::mt19937 rng(55);
    auto m = random_matrix(rng, 20, 4);
    auto model = multivariate::pca(m);

    lexical::FeatureMatrix perm = m;
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) {
        perm.values[i] = m.values[order[i]];
        perm.doc_ids[i] = m.doc_ids[order[i]];
    }
    auto pmodel = multivariate::pca(perm);

    CHECK((pmodel.eigenvalues - model.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((pmodel.loadings - model.loadings).cwiseAbs().maxCoeff() < 1e-9);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Eigen::Index c = 0; c < model.scores.cols(); ++c) {
            CHECK(pmodel.scores(static_cast<Eigen::Index>(i), c) ==
                  doctest::Approx(model.scores(static_cast<Eigen::Index>(order[i]), c))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("permuting features permutes loading rows, eigenvalues and scores unchanged") {
    std::mt19937 rng(56);
    auto m = random_matrix(rng, 25, 4);
    auto model = multivariate::pca(m);

    const std::vector<std::size_t> order = {2, 0, 3, 1};
    lexical::FeatureMatrix perm = m;
    for (std::size_t c = 0; c < order.size(); ++c) {
        perm.features[c] = m.features[order[c]];
        for (std::size_t r = 0; r < m.rows(); ++r) perm.values[r][c] = m.values[r][order[c]];
    }
    auto pmodel = multivariate::pca(perm);

    CHECK((pmodel.eigenvalues - model.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((pmodel.scores - model.scores).cwiseAbs().maxCoeff() < 1e-9);
    for (std::size_t c = 0; c < order.size(); ++c) {
        for (Eigen::Index k = 0; k < model.loadings.cols(); ++k) {
            CHECK(pmodel.loadings(static_cast<Eigen::Index>(c), k) ==
                  doctest::Approx(model.loadings(static_cast<Eigen::Index>(order[c]), k))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("factor analysis recovers the two-block structure with varimax") {
    std::mt19937 rng(20240819);
    auto m = matrix_with_correlation(two_block_correlation(), 200, rng);
    auto model = multivariate::factor_analysis(m, 2, multivariate::Rotation::Varimax);

    // Each factor should own one block: loadings > 0.8 inside, < 0.2 outside.
    for (int block = 0; block < 2; ++block) {
        const int off = block * 3;
        int owner = -1;
        for (int f = 0; f < 2; ++f) {
            if (std::fabs(model.loadings(off, f)) > 0.5) owner = f;
        }
        REQUIRE(owner >= 0);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::fabs(model.loadings(off + i, owner)) > 0.8);
            CHECK(std::fabs(model.loadings(off + i, 1 - owner)) < 0.2);
        }
    }

    SUBCASE("varimax preserves communalities") {
        auto unrotated = multivariate::factor_analysis(m, 2, multivariate::Rotation::None);
        for (int i = 0; i < 6; ++i) {
            const double before = unrotated.loadings.row(i).squaredNorm();
            const double after = model.loadings.row(i).squaredNorm();
            CHECK(std::fabs(before - after) < 1e-8);
        }
    }
}

TEST_CASE("unrotated extraction at the true rank tracks top-k PCA variance") {
    // Six features spanned by three latent sources with tiny uniqueness, so
    // the common-factor space is the full signal space.
    std::mt19937 rng(31337);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int k = 3;
    const std::size_t rows = 120;
    std::vector<std::vector<double>> data(rows, std::vector<double>(6));
    std::vector<std::array<double, 3>> weights = {{1.0, 0.2, 0.0}, {0.9, -0.3, 0.1},
                                                  {0.1, 1.0, 0.2}, {-0.2, 0.8, 0.3},
                                                  {0.0, 0.1, 1.0}, {0.3, 0.0, 0.9}};
    for (std::size_t r = 0; r < rows; ++r) {
        double src[3] = {normal(rng), normal(rng), normal(rng)};
        for (std::size_t c = 0; c < 6; ++c) {
            double v = 0.02 * normal(rng);
            for (int s = 0; s < 3; ++s) v += weights[c][static_cast<std::size_t>(s)] * src[s];
            data[r][c] = v;
        }
    }
    auto m = make_matrix(data);
    auto fa = multivariate::factor_analysis(m, k, multivariate::Rotation::None);
    auto pca_model = multivariate::pca(m);
    auto rep = multivariate::variance_report(pca_model);
    const double pca_cum = rep.cumulative[k - 1];
    CHECK(fa.cumulative_variance == doctest::Approx(pca_cum).epsilon(0.05));
    CHECK(fa.cumulative_variance > 0.0);
    CHECK(fa.cumulative_variance <= 1.0);
}

TEST_CASE("factor analysis argument validation") {
    std::mt19937 rng(2);
    auto m = random_matrix(rng, 30, 4);
    CHECK_THROWS_AS(multivariate::factor_analysis(m, 0, multivariate::Rotation::Varimax),
                    InputError);
    CHECK_THROWS_AS(multivariate::factor_analysis(m, 4, multivariate::Rotation::Varimax),
                    InputError);
    CHECK_THROWS_AS(multivariate::rotation_from_name("quartimax"), InputError);
    CHECK(multivariate::rotation_from_name("promax") == multivariate::Rotation::Promax);
}

TEST_CASE("promax rotation yields a valid oblique solution on the block fixture") {
    std::mt19937 rng(77);
    auto m = matrix_with_correlation(two_block_correlation(), 150, rng);
    auto model = multivariate::factor_analysis(m, 2, multivariate::Rotation::Promax);
    for (int block = 0; block < 2; ++block) {
        const int off = block * 3;
        double best = 0.0;
        for (int f = 0; f < 2; ++f) best = std::max(best, std::fabs(model.loadings(off, f)));
        CHECK(best > 0.7);
    }
    CHECK(model.factor_correlations.rows() == 2);
}

TEST_CASE("variance_report is descending with monotone cumulative") {
    std::mt19937 rng(91);
    auto m = random_matrix(rng, 50, 7);
    auto model = multivariate::pca(m);
    auto rep = multivariate::variance_report(model);
    for (std::size_t i = 1; i < rep.proportions.size(); ++i) {
        CHECK(rep.proportions[i] <= rep.proportions[i - 1] + 1e-12);
        CHECK(rep.cumulative[i] >= rep.cumulative[i - 1] - 1e-12);
    }
    CHECK(rep.cumulative.back() == doctest::Approx(1.0));
}

TEST_CASE("sign canonicalization is stable across repeated runs") {
    std::mt19937 rng(123);
    auto m = random_matrix(rng, 40, 5);
    auto a = multivariate::pca(m);
    auto b = multivariate::pca(m);
    CHECK((a.loadings - b.loadings).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.scores - b.scores).cwiseAbs().maxCoeff() == 0.0);
    for (Eigen::Index c = 0; c < a.loadings.cols(); ++c) {
        Eigen::Index imax = 0;
        for (Eigen::Index r = 0; r < a.loadings.rows(); ++r) {
            if (std::fabs(a.loadings(r, c)) > std::fabs(a.loadings(imax, c))) imax = r;
        }
        CHECK(a.loadings(imax, c) >= 0.0);
    }
}

TEST_CASE("csv exports are deterministic") {
    auto m = make_matrix({{1, 2}, {2, 4.5}, {3, 5.5}, {4, 9}});
    auto model = multivariate::pca(m);
    CHECK(multivariate::eigenvalues_csv(model) == multivariate::eigenvalues_csv(model));
    const std::string scores =
        multivariate::scores_csv(model.doc_ids, model.doc_groups, model.scores);
    CHECK(scores.substr(0, 15) == "doc_id,group,D1");
}
