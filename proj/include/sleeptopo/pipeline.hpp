#ifndef SLEEPTOPO_PIPELINE_HPP
#define SLEEPTOPO_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sleeptopo/eval.hpp"
#include "sleeptopo/tda.hpp"

namespace sleeptopo::pipeline {

enum class FeatureSet { Spectral, Topological, Combined };
const char* feature_set_name(FeatureSet s);

enum class Grouping { PerSubject, Pooled };

struct InputConfig {
    std::string edf_path;
    std::string labels_csv_path;
    std::string epochs_csv_path;  // alternative to edf + labels
    std::string channel = "Fpz-Cz";
    double sample_rate_hz = 100.0;  // used when reading epoch CSVs
    std::string subject_id = "s1";  // used when segmenting an EDF
};

struct FeatureConfig {
    FeatureSet set = FeatureSet::Combined;
    double petrosian_delta = 0.0;
    bool hann_window = true;
};

struct RfecvConfig {
    bool enabled = true;
    int knn_k = 5;
    int k_folds = 5;
    bool strict_paper = false;
};

struct ReducerConfig {
    std::string method = "tsne";  // none | pca | tsne | umap
    int n_components = 2;
    // t-SNE
    double perplexity = 30.0;
    int tsne_iters = 1000;
    double tsne_learning_rate = 200.0;
    // UMAP
    int n_neighbors = 15;
    double min_dist = 0.1;
    double spread = 1.0;
    int umap_iters = 300;
    double umap_learning_rate = 0.2;
    bool umap_symmetrize = false;
};

struct EvalConfig {
    int knn_k = 5;
    int k_folds = 5;
    Grouping grouping = Grouping::PerSubject;
};

struct PipelineConfig {
    InputConfig input;
    FeatureConfig features;
    tda::TopoParams tda;
    int diagram_top_k0 = 500;
    int diagram_top_k1 = 20;
    RfecvConfig rfecv;
    ReducerConfig reducer;
    EvalConfig eval;
    std::uint64_t seed = 42;
    std::string out_dir = "out";

    /// Parses JSON text, rejecting unknown keys and invalid values; the
    /// failing field is named in the error.
    static PipelineConfig from_json(const std::string& text);
    std::string to_json() const;

    /// Hash of the canonical serialized config; stamped into artifact
    /// headers so stale caches are recomputed instead of silently reused.
    std::string hash() const;
};

/// Execution policy, kept separate from the config so that thread count
/// never affects artifact bytes.
struct RunOptions {
    int threads = 1;
    bool verbose = false;
    bool force = false;  // ignore caches
};

/// Runs one stage (or the whole chain for "run-all"). Returns a process exit
/// status: 0 success, 1 config error, 2 missing artifact, 3 numerical
/// failure.
int run(const std::string& subcommand, const PipelineConfig& config, const RunOptions& opts);

/// Stage artifact filenames within config.out_dir.
std::string epochs_artifact(const PipelineConfig& c);
std::string spectral_artifact(const PipelineConfig& c);
std::string topo_artifact(const PipelineConfig& c);
std::string selection_trace_artifact(const PipelineConfig& c);
std::string selected_features_artifact(const PipelineConfig& c);
std::string embedding_artifact(const PipelineConfig& c);
std::string report_csv_artifact(const PipelineConfig& c);
std::string report_text_artifact(const PipelineConfig& c);

/// Builds the feature matrix for the configured feature set from the stage
/// artifacts (used by the select/reduce/evaluate stages and by tests).
selection::FeatureMatrix load_feature_matrix(const PipelineConfig& c);

}  // namespace sleeptopo::pipeline

#endif
