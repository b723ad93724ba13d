#ifndef SLEEPTOPO_SELECTION_HPP
#define SLEEPTOPO_SELECTION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "sleeptopo/common.hpp"

namespace sleeptopo::selection {

/// Epochs x named features with a label per row.
struct FeatureMatrix {
    std::vector<std::string> column_names;
    Eigen::MatrixXd values;  // rows = epochs
    std::vector<StageLabel> labels;
    std::vector<std::string> subject_ids;  // optional per-row provenance
    std::vector<int> epoch_indices;

    int rows() const { return static_cast<int>(values.rows()); }
    int cols() const { return static_cast<int>(values.cols()); }

    /// Checks finiteness and label count; throws on violation.
    void validate() const;

    /// Copy restricted to the given column indices.
    FeatureMatrix select_columns(const std::vector<int>& cols) const;
};

/// Per-column standardization statistics fitted on training rows.
struct Standardizer {
    Eigen::VectorXd mean;
    Eigen::VectorXd std;  // zero-variance columns get std 1 so they scale to 0

    static Standardizer fit(const Eigen::MatrixXd& train);
    Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
};

/// KNN with Euclidean distance and majority vote. Vote ties break by smaller
/// mean distance to the query among the tied classes, then lower class index.
/// Train/query must already be standardized consistently.
std::vector<StageLabel> knn_predict(const Eigen::MatrixXd& train,
                                    const std::vector<StageLabel>& train_labels,
                                    const Eigen::MatrixXd& queries, int k);

/// Stratified k-fold assignment: per class, rows are shuffled with the seeded
/// generator and dealt round-robin. Returns fold id per row.
std::vector<int> stratified_folds(const std::vector<StageLabel>& labels, int k_folds,
                                  std::uint64_t seed);

/// Mean fold accuracy of KNN over a stratified split. Standardization is
/// fitted on each fold's training part only. `feature_cols` empty means all.
double cross_val_accuracy(const FeatureMatrix& data, const std::vector<int>& feature_cols,
                          int k_folds, int knn_k, std::uint64_t seed);

struct SelectionResult {
    std::vector<std::string> kept_names;
    std::vector<int> kept_cols;  // original column indices
    std::vector<std::pair<std::string, double>> trace;  // (removed name, accuracy after)
    double baseline_accuracy = 0.0;
    double final_accuracy = 0.0;
};

struct RfecvOptions {
    int knn_k = 5;
    int k_folds = 5;
    /// With strict_paper set the baseline starts at 0, which forces an
    /// unconditional first removal; the default baseline is the full-set CV
    /// accuracy so a removal must genuinely improve on it.
    bool strict_paper = false;
};

/// Greedy backward elimination: each pass evaluates removing every remaining
/// feature and commits the best removal only if it strictly improves the CV
/// accuracy. Stops when nothing improves or one feature remains. Ties between
/// candidate removals break by smaller original column index.
SelectionResult rfecv(const FeatureMatrix& data, const RfecvOptions& opts, std::uint64_t seed);

}  // namespace sleeptopo::selection

#endif
