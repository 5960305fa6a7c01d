#include "registra/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "registra/errors.hpp"
#include "registra/format.hpp"

namespace registra::multivariate {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd to_eigen(const lexical::FeatureMatrix& m) {
    MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m.values[r][c];
        }
    }
    return out;
}

// Column means to 0 and sample standard deviations to 1; throws naming the
// first zero-variance feature.
MatrixXd standardized_data(const lexical::FeatureMatrix& m) {
    if (m.rows() < 2) throw NumericalError("standardize: need at least 2 rows");
    MatrixXd x = to_eigen(m);
    const double n = static_cast<double>(x.rows());
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const double mean = x.col(c).mean();
        x.col(c).array() -= mean;
        const double var = x.col(c).squaredNorm() / (n - 1.0);
        if (var <= 0.0)
            throw NumericalError("standardize: feature \"" + m.features[static_cast<std::size_t>(c)] +
                                 "\" has zero variance");
        x.col(c) /= std::sqrt(var);
    }
    return x;
}

// Descending eigenvalues and matching eigenvectors of a symmetric matrix.
void symmetric_eigen(const MatrixXd& s, VectorXd& values, MatrixXd& vectors) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(s);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigen solver failed to converge (matrix size " +
                             std::to_string(s.rows()) + ", norm " + std::to_string(s.norm()) + ")");
    const Eigen::Index p = s.rows();
    values.resize(p);
    vectors.resize(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        values(i) = solver.eigenvalues()(p - 1 - i);
        vectors.col(i) = solver.eigenvectors().col(p - 1 - i);
    }
}

// Largest-magnitude loading in each column made positive; score columns
// flipped with their loadings.
void canonicalize_signs(MatrixXd& loadings, MatrixXd* scores) {
    for (Eigen::Index c = 0; c < loadings.cols(); ++c) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < loadings.rows(); ++r) {
            const double a = std::fabs(loadings(r, c));
            if (a > best + 1e-15) {
                best = a;
                imax = r;
            }
        }
        if (loadings(imax, c) < 0.0) {
            loadings.col(c) = -loadings.col(c);
            if (scores && c < scores->cols()) scores->col(c) = -scores->col(c);
        }
    }
}

} // namespace

lexical::FeatureMatrix standardize(const lexical::FeatureMatrix& m) {
    MatrixXd z = standardized_data(m);
    lexical::FeatureMatrix out = m;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            out.values[r][c] = z(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

CorrelationMatrix correlation(const lexical::FeatureMatrix& m) {
    if (m.rows() < 3) throw NumericalError("correlation: need at least 3 rows");
    MatrixXd z = standardized_data(m);
    const double n = static_cast<double>(z.rows());
    MatrixXd r = (z.transpose() * z) / (n - 1.0);
    // Exact unit diagonal and clamped off-diagonals against rounding.
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        r(i, i) = 1.0;
        for (Eigen::Index j = 0; j < r.cols(); ++j) {
            if (i != j) r(i, j) = std::clamp(r(i, j), -1.0, 1.0);
        }
    }
    CorrelationMatrix out;
    out.features = m.features;
    out.r = std::move(r);
    return out;
}

PcaModel pca(const lexical::FeatureMatrix& m) {
    CorrelationMatrix corr = correlation(m);
    MatrixXd z = standardized_data(m);

    PcaModel model;
    model.features = m.features;
    model.doc_ids = m.doc_ids;
    model.doc_groups = m.doc_groups;
    symmetric_eigen(corr.r, model.eigenvalues, model.loadings);
    for (Eigen::Index i = 0; i < model.eigenvalues.size(); ++i) {
        if (model.eigenvalues(i) < 0.0 && model.eigenvalues(i) > -1e-9) model.eigenvalues(i) = 0.0;
    }
    model.scores = z * model.loadings;
    canonicalize_signs(model.loadings, &model.scores);
    return model;
}

MatrixXd PcaModel::structure_loadings() const {
    MatrixXd s = loadings;
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
        s.col(c) *= std::sqrt(std::max(0.0, eigenvalues(c)));
    }
    return s;
}

std::string rotation_name(Rotation r) {
    switch (r) {
        case Rotation::None: return "none";
        case Rotation::Varimax: return "varimax";
        case Rotation::Promax: return "promax";
    }
    return "varimax";
}

Rotation rotation_from_name(const std::string& name) {
    if (name == "none") return Rotation::None;
    if (name == "varimax") return Rotation::Varimax;
    if (name == "promax") return Rotation::Promax;
    throw InputError("unknown rotation: " + name + " (expected none|varimax|promax)");
}

Eigen::MatrixXd varimax(const Eigen::MatrixXd& loadings, double tol, int max_iter) {
    const Eigen::Index p = loadings.rows();
    const Eigen::Index k = loadings.cols();
    if (k < 2) return loadings;

    // Kaiser normalization: rows scaled to unit communality for the rotation.
    VectorXd norms(p);
    for (Eigen::Index i = 0; i < p; ++i) {
        norms(i) = loadings.row(i).norm();
        if (norms(i) < 1e-12) norms(i) = 1.0;
    }
    MatrixXd a = norms.cwiseInverse().asDiagonal() * loadings;

    // Cyclic pairwise rotations with Kaiser's analytic angle. The closed-form
    // angle also handles exactly degenerate loadings, where gradient-style
    // updates stall at the symmetric saddle point.
    const double np = static_cast<double>(p);
    for (int sweep = 0; sweep < max_iter; ++sweep) {
        double max_angle = 0.0;
        for (Eigen::Index i = 0; i + 1 < k; ++i) {
            for (Eigen::Index j = i + 1; j < k; ++j) {
                VectorXd u = a.col(i).array().square() - a.col(j).array().square();
                VectorXd v = 2.0 * a.col(i).array() * a.col(j).array();
                const double sum_u = u.sum();
                const double sum_v = v.sum();
                const double c = (u.array().square() - v.array().square()).sum();
                const double d = 2.0 * (u.array() * v.array()).sum();
                const double num = d - 2.0 * sum_u * sum_v / np;
                const double den = c - (sum_u * sum_u - sum_v * sum_v) / np;
                const double angle = 0.25 * std::atan2(num, den);
                if (std::fabs(angle) < 1e-12) continue;
                max_angle = std::max(max_angle, std::fabs(angle));
                const double cs = std::cos(angle);
                const double sn = std::sin(angle);
                VectorXd ai = a.col(i);
                a.col(i) = cs * ai + sn * a.col(j);
                a.col(j) = -sn * ai + cs * a.col(j);
            }
        }
        if (max_angle < tol) break;
    }
    return norms.asDiagonal() * a;
}

FactorModel factor_analysis(const lexical::FeatureMatrix& m, int k, Rotation rotation) {
    const auto p = static_cast<Eigen::Index>(m.cols());
    if (k < 1) throw InputError("factor_analysis: k must be at least 1");
    if (k >= p) throw InputError("factor_analysis: k must be smaller than the feature count");

    CorrelationMatrix corr = correlation(m);
    MatrixXd z = standardized_data(m);
    const MatrixXd& r = corr.r;

    FactorModel model;
    model.features = m.features;
    model.doc_ids = m.doc_ids;
    model.doc_groups = m.doc_groups;
    model.k = k;
    model.rotation = rotation;

    // Initial communalities: squared multiple correlations, falling back to
    // the largest absolute off-diagonal correlation when R is singular.
    VectorXd h2(p);
    Eigen::FullPivLU<MatrixXd> lu(r);
    if (lu.isInvertible()) {
        MatrixXd rinv = lu.inverse();
        for (Eigen::Index i = 0; i < p; ++i) h2(i) = 1.0 - 1.0 / rinv(i, i);
    } else {
        for (Eigen::Index i = 0; i < p; ++i) {
            double best = 0.0;
            for (Eigen::Index j = 0; j < p; ++j) {
                if (i != j) best = std::max(best, std::fabs(r(i, j)));
            }
            h2(i) = best;
        }
    }
    h2 = h2.cwiseMax(0.0).cwiseMin(1.0);

    // Iterate to max communality change < 1e-6 or the iteration cap; hitting
    // the cap completes with converged=false recorded in the model.
    const double tol = 1e-6;
    const int max_iter = 100;
    MatrixXd extracted;
    model.converged = false;
    for (int iter = 1; iter <= max_iter; ++iter) {
        MatrixXd reduced = r;
        for (Eigen::Index i = 0; i < p; ++i) reduced(i, i) = h2(i);
        VectorXd values;
        MatrixXd vectors;
        symmetric_eigen(reduced, values, vectors);
        extracted.resize(p, k);
        for (int f = 0; f < k; ++f) {
            const double lambda = std::max(0.0, values(f));
            extracted.col(f) = vectors.col(f) * std::sqrt(lambda);
        }
        VectorXd h2_new = extracted.array().square().rowwise().sum();
        for (Eigen::Index i = 0; i < p; ++i) {
            if (h2_new(i) > 1.0 + 1e-6) {
                model.heywood = true;
                h2_new(i) = 1.0;
            }
        }
        const double delta = (h2_new - h2).cwiseAbs().maxCoeff();
        h2 = h2_new;
        model.iterations = iter;
        if (delta < tol) {
            model.converged = true;
            break;
        }
    }

    model.communalities = h2;

    MatrixXd pattern = extracted;
    MatrixXd phi = MatrixXd::Identity(k, k);
    if (rotation == Rotation::Varimax) {
        pattern = varimax(extracted);
    } else if (rotation == Rotation::Promax) {
        // Oblique promax (power 4) on top of the varimax solution.
        MatrixXd v = varimax(extracted);
        MatrixXd q = (v.array() * v.array().abs().pow(3.0)).matrix(); // sign(v) * |v|^4
        MatrixXd u = (v.transpose() * v).ldlt().solve(v.transpose() * q);
        MatrixXd uti = (u.transpose() * u).inverse();
        VectorXd d = uti.diagonal();
        u = u * d.cwiseSqrt().asDiagonal();
        pattern = v * u;
        phi = (u.transpose() * u).inverse();
    }

    // Factors ordered by explained variance after rotation.
    {
        VectorXd ss = pattern.array().square().colwise().sum();
        std::vector<int> order(static_cast<std::size_t>(k));
        for (int f = 0; f < k; ++f) order[static_cast<std::size_t>(f)] = f;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return ss(a) > ss(b); });
        MatrixXd sorted(p, k);
        MatrixXd phi_sorted(k, k);
        for (int f = 0; f < k; ++f) sorted.col(f) = pattern.col(order[static_cast<std::size_t>(f)]);
        for (int f = 0; f < k; ++f) {
            for (int g = 0; g < k; ++g) {
                phi_sorted(f, g) = phi(order[static_cast<std::size_t>(f)],
                                       order[static_cast<std::size_t>(g)]);
            }
        }
        pattern = std::move(sorted);
        phi = std::move(phi_sorted);
    }

    // Structure = pattern for orthogonal rotations, pattern * phi otherwise.
    MatrixXd structure = pattern * phi;

    // Regression-method factor scores.
    MatrixXd weights = r.ldlt().solve(structure);
    model.scores = z * weights;
    model.loadings = pattern;
    canonicalize_signs(model.loadings, &model.scores);

    VectorXd ss = model.loadings.array().square().colwise().sum();
    model.variance_proportions.resize(static_cast<std::size_t>(k));
    double cum = 0.0;
    for (int f = 0; f < k; ++f) {
        model.variance_proportions[static_cast<std::size_t>(f)] = ss(f) / static_cast<double>(p);
        cum += ss(f) / static_cast<double>(p);
    }
    model.cumulative_variance = cum;
    model.factor_correlations = phi;
    return model;
}

VarianceReport variance_report(const PcaModel& model) {
    VarianceReport rep;
    const double p = static_cast<double>(model.features.size());
    double cum = 0.0;
    for (Eigen::Index i = 0; i < model.eigenvalues.size(); ++i) {
        const double prop = model.eigenvalues(i) / p;
        cum += prop;
        rep.proportions.push_back(prop);
        rep.cumulative.push_back(std::min(1.0, cum));
    }
    return rep;
}

VarianceReport variance_report(const FactorModel& model) {
    VarianceReport rep;
    double cum = 0.0;
    for (double prop : model.variance_proportions) {
        cum += prop;
        rep.proportions.push_back(prop);
        rep.cumulative.push_back(std::min(1.0, cum));
    }
    return rep;
}

std::string eigenvalues_csv(const PcaModel& model) {
    std::ostringstream out;
    out << "dimension,eigenvalue,proportion,cumulative\n";
    VarianceReport rep = variance_report(model);
    for (Eigen::Index i = 0; i < model.eigenvalues.size(); ++i) {
        out << "D" << (i + 1) << ',' << format_fixed(model.eigenvalues(i), 6) << ','
            << format_fixed(rep.proportions[static_cast<std::size_t>(i)], 6) << ','
            << format_fixed(rep.cumulative[static_cast<std::size_t>(i)], 6) << '\n';
    }
    return out.str();
}

std::string loadings_csv(const std::vector<std::string>& features, const Eigen::MatrixXd& loadings) {
    std::ostringstream out;
    out << "feature";
    for (Eigen::Index c = 0; c < loadings.cols(); ++c) out << ",D" << (c + 1);
    out << '\n';
    for (Eigen::Index r = 0; r < loadings.rows(); ++r) {
        out << csv_quote(features[static_cast<std::size_t>(r)]);
        for (Eigen::Index c = 0; c < loadings.cols(); ++c) {
            out << ',' << format_fixed(loadings(r, c), 6);
        }
        out << '\n';
    }
    return out.str();
}

std::string scores_csv(const std::vector<std::string>& doc_ids,
                       const std::vector<std::string>& doc_groups,
                       const Eigen::MatrixXd& scores) {
    std::ostringstream out;
    out << "doc_id,group";
    for (Eigen::Index c = 0; c < scores.cols(); ++c) out << ",D" << (c + 1);
    out << '\n';
    for (Eigen::Index r = 0; r < scores.rows(); ++r) {
        out << csv_quote(doc_ids[static_cast<std::size_t>(r)]) << ','
            << csv_quote(doc_groups[static_cast<std::size_t>(r)]);
        for (Eigen::Index c = 0; c < scores.cols(); ++c) {
            out << ',' << format_fixed(scores(r, c), 6);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

nlohmann::ordered_json base_metadata(const std::vector<std::string>& features) {
    nlohmann::ordered_json j;
    j["feature_order"] = features;
    j["sign_rule"] = "largest-magnitude loading positive per dimension";
    j["eigen_tolerance"] = 1e-12;
    return j;
}

} // namespace

std::string pca_metadata_json(const PcaModel& model) {
    nlohmann::ordered_json j = base_metadata(model.features);
    j["method"] = "pca-correlation";
    j["rotation"] = "none";
    j["loading_scale"] = "structure (eigenvector * sqrt(eigenvalue)) in reports; raw eigenvectors internal";
    return j.dump(2) + "\n";
}

std::string factor_metadata_json(const FactorModel& model) {
    nlohmann::ordered_json j = base_metadata(model.features);
    j["method"] = "iterated-principal-axis";
    j["rotation"] = rotation_name(model.rotation);
    j["factors"] = model.k;
    j["communality_tolerance"] = 1e-6;
    j["max_iterations"] = 100;
    j["iterations"] = model.iterations;
    j["converged"] = model.converged;
    j["heywood"] = model.heywood;
    j["score_method"] = "regression";
    return j.dump(2) + "\n";
}

std::string factor_variance_csv(const FactorModel& model) {
    std::ostringstream out;
    out << "dimension,ss_loadings,proportion,cumulative\n";
    VarianceReport rep = variance_report(model);
    const double p = static_cast<double>(model.features.size());
    for (std::size_t i = 0; i < rep.proportions.size(); ++i) {
        out << "D" << (i + 1) << ',' << format_fixed(rep.proportions[i] * p, 6) << ','
            << format_fixed(rep.proportions[i], 6) << ','
            << format_fixed(rep.cumulative[i], 6) << '\n';
    }
    return out.str();
}

} // namespace registra::multivariate
