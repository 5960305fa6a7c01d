#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "registra/lexical.hpp"

namespace registra::multivariate {

struct CorrelationMatrix {
    std::vector<std::string> features;
    Eigen::MatrixXd r; // symmetric, unit diagonal
};

struct PcaModel {
    std::vector<std::string> features;
    std::vector<std::string> doc_ids;
    std::vector<std::string> doc_groups;
    Eigen::VectorXd eigenvalues; // descending
    Eigen::MatrixXd loadings;    // features x dims, unit-norm eigenvector columns
    Eigen::MatrixXd scores;      // docs x dims

    // Eigenvector * sqrt(eigenvalue): correlation-scaled loadings for reports.
    Eigen::MatrixXd structure_loadings() const;
};

enum class Rotation { None, Varimax, Promax };

std::string rotation_name(Rotation r);
Rotation rotation_from_name(const std::string& name);

struct FactorModel {
    std::vector<std::string> features;
    std::vector<std::string> doc_ids;
    std::vector<std::string> doc_groups;
    int k = 0;
    Eigen::MatrixXd loadings;       // rotated pattern loadings, features x k
    Eigen::VectorXd communalities;  // from extraction
    Eigen::MatrixXd scores;         // docs x k, regression method
    Eigen::MatrixXd factor_correlations; // identity for orthogonal rotations
    std::vector<double> variance_proportions;
    double cumulative_variance = 0.0;
    Rotation rotation = Rotation::Varimax;
    bool heywood = false;
    bool converged = true; // false when the iteration cap was reached
    int iterations = 0;
};

lexical::FeatureMatrix standardize(const lexical::FeatureMatrix& m);
CorrelationMatrix correlation(const lexical::FeatureMatrix& m);
PcaModel pca(const lexical::FeatureMatrix& m);
FactorModel factor_analysis(const lexical::FeatureMatrix& m, int k, Rotation rotation);

struct VarianceReport {
    std::vector<double> proportions; // descending
    std::vector<double> cumulative;  // monotone nondecreasing, <= 1
};

VarianceReport variance_report(const PcaModel& model);
VarianceReport variance_report(const FactorModel& model);

// Kaiser-normalized varimax; returns the rotated loadings.
Eigen::MatrixXd varimax(const Eigen::MatrixXd& loadings, double tol = 1e-10, int max_iter = 1000);

// Model export (External Interfaces): eigenvalues/loadings/scores CSVs plus
// a JSON metadata record.
std::string eigenvalues_csv(const PcaModel& model);
std::string loadings_csv(const std::vector<std::string>& features, const Eigen::MatrixXd& loadings);
std::string scores_csv(const std::vector<std::string>& doc_ids,
                       const std::vector<std::string>& doc_groups,
                       const Eigen::MatrixXd& scores);
std::string pca_metadata_json(const PcaModel& model);
std::string factor_metadata_json(const FactorModel& model);
std::string factor_variance_csv(const FactorModel& model);

} // namespace registra::multivariate
