#ifndef SLEEPTOPO_EVAL_HPP
#define SLEEPTOPO_EVAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "sleeptopo/dimred.hpp"
#include "sleeptopo/selection.hpp"

namespace sleeptopo::eval {

/// 5x5 counts, rows = true stage, columns = predicted stage.
struct ConfusionMatrix {
    std::array<std::array<long, kNumStages>, kNumStages> counts{};

    long total() const;
    long trace() const;
    void add(StageLabel truth, StageLabel predicted) {
        ++counts[static_cast<int>(truth)][static_cast<int>(predicted)];
    }
};

struct Metrics {
    double acc = 0.0;
    double mf1 = 0.0;  // unweighted mean over all five classes
    double kappa = 0.0;
    std::array<double, kNumStages> per_class_f1{};
    std::array<bool, kNumStages> class_present{};    // row marginal > 0
    std::array<bool, kNumStages> class_predicted{};  // column marginal > 0
};

/// Accuracy, per-class F1 (0 when precision+recall is 0), macro F1, and
/// Cohen's kappa (0 when expected agreement is 1). Throws on an empty matrix.
Metrics metrics(const ConfusionMatrix& cm);

/// Macro F1 restricted to classes that are present or predicted; classes
/// that are neither are excluded rather than dragged in as zeros.
double macro_f1_excluding_absent(const Metrics& m, std::array<bool, kNumStages>* excluded = nullptr);

/// Which reducer (if any) to run before classification.
struct ReducerSpec {
    std::optional<dimred::Method> method;  // nullopt = classify original features
    int n_components = 2;
    dimred::TsneConfig tsne;
    dimred::UmapConfig umap;
};

struct EvalReport {
    double acc_mean = 0.0;
    double acc_std = 0.0;
    double mf1 = 0.0;
    double kappa = 0.0;
    std::array<double, kNumStages> per_class_f1{};
    std::array<bool, kNumStages> excluded_classes{};  // dropped from mf1 as absent
    ConfusionMatrix confusion;
    std::string method_tag;       // "Original" / "PCA" / "t-SNE" / "UMAP"
    std::string feature_set_tag;  // "spectral-temporal" / "topological" / "combined"
    std::string variance_source;  // what acc_std was computed over
    std::vector<double> fold_accuracies;
};

/// Transductive protocol: the reducer (when any) is fitted unsupervised on
/// all rows; KNN is then cross-validated in the embedded space with
/// stratified folds. The confusion matrix pools all folds.
EvalReport evaluate(const selection::FeatureMatrix& data, const ReducerSpec& reducer, int knn_k,
                    int k_folds, std::uint64_t seed);

/// CSV row in report column order: ACC, MF1, kappa, W, N1, N2, N3, REM.
std::string report_csv_header();
std::string report_csv_row(const EvalReport& report);
std::string report_text(const EvalReport& report);

}  // namespace sleeptopo::eval

#endif
