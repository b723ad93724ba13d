#ifndef SLEEPTOPO_DIMRED_HPP
#define SLEEPTOPO_DIMRED_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace sleeptopo::dimred {

enum class Method { PCA, TSNE, UMAP };
const char* method_name(Method m);

struct LowDimEmbedding {
    Eigen::MatrixXd coords;  // n x c
    Method method = Method::PCA;
    std::uint64_t seed = 0;
    std::string config_json;  // snapshot of the producing configuration
};

// ---------------------------------------------------------------- PCA

struct PcaResult {
    LowDimEmbedding embedding;
    Eigen::VectorXd explained_variance;         // all eigenvalues, descending
    Eigen::VectorXd explained_variance_ratio;   // eigenvalue / total variance
    Eigen::MatrixXd components;                 // p x c, orthonormal columns
    std::vector<int> zero_variance_columns;     // flagged during standardization
};

/// Standardize, covariance (population normalization), symmetric
/// eigendecomposition, descending eigenvalue sort with index tie-break,
/// project onto the top-c eigenvectors. Sign convention: each component's
/// largest-magnitude entry is positive.
PcaResult pca(const Eigen::MatrixXd& x, int n_components);

// --------------------------------------------------------------- t-SNE

struct TsneConfig {
    int n_components = 2;
    double perplexity = 30.0;
    int n_iter = 1000;
    double learning_rate = 200.0;
    bool use_momentum = true;         // 0.5 for the first 250 epochs, then 0.8
    bool early_exaggeration = false;  // x4 on P for the first 100 epochs
    std::uint64_t seed = 0;
};

/// Symmetrized high-dimensional affinities: per row, the Gaussian bandwidth
/// is binary-searched until the conditional distribution's entropy (base 2)
/// matches log2(perplexity) within 1e-5; then p_ij = (p_{j|i}+p_{i|j})/(2n).
/// Entries sum to 1.
Eigen::MatrixXd tsne_affinities(const Eigen::MatrixXd& x, double perplexity);

/// Student-t low-dimensional affinities, normalized over all ordered pairs.
Eigen::MatrixXd tsne_q(const Eigen::MatrixXd& y);

/// KL divergence of P from Q and its gradient with respect to Y.
double tsne_loss(const Eigen::MatrixXd& p, const Eigen::MatrixXd& y);
Eigen::MatrixXd tsne_gradient(const Eigen::MatrixXd& p, const Eigen::MatrixXd& y);

struct TsneResult {
    LowDimEmbedding embedding;
    std::vector<double> kl_trace;  // one entry per epoch, pre-update
};
TsneResult tsne(const Eigen::MatrixXd& x, const TsneConfig& config);

// ---------------------------------------------------------------- UMAP

struct UmapConfig {
    int n_components = 2;
    int n_neighbors = 15;
    double min_dist = 0.1;
    double spread = 1.0;
    int n_iter = 300;
    double learning_rate = 0.2;
    int negative_samples = 5;  // non-edges sampled per point per epoch
    bool symmetrize = false;   // fuzzy union w + w' - w.w'
    bool clip_gradients = true;
    std::uint64_t seed = 0;
};

/// Directed kNN graph with Gaussian weights; per point the local scale is
/// binary-searched so the weights over its neighbors sum to
/// log2(n_neighbors). Points whose neighbors are all at distance zero get
/// scale 1 and unit weights, flagged via the returned count.
struct UmapGraph {
    Eigen::MatrixXd weights;  // n x n, zero off the edge set
    int degenerate_points = 0;
};
UmapGraph umap_graph(const Eigen::MatrixXd& x, int n_neighbors);

/// Fuzzy union symmetrization w <- w + w^T - w o w^T.
Eigen::MatrixXd fuzzy_union(const Eigen::MatrixXd& w);

/// Least-squares fit of (1 + a d^(2b))^-1 to the target curve that is 1 up
/// to min_dist and exp(-(d-min_dist)/spread) beyond it.
struct AbParams {
    double a = 0.0;
    double b = 0.0;
    double rmse = 0.0;
};
AbParams fit_ab(double min_dist, double spread);

/// Cross-entropy over the given edge terms (graph edges use their weight w;
/// sampled non-edges use w = 0) and its gradient. Low-dimensional weights
/// are clamped to [1e-7, 1 - 1e-7]; squared distances are floored at 1e-10
/// to keep the b < 1 power finite.
struct UmapEdgeTerm {
    int i = 0;
    int j = 0;
    double w = 0.0;
};
double umap_loss(const Eigen::MatrixXd& y, const std::vector<UmapEdgeTerm>& terms, double a,
                 double b);
Eigen::MatrixXd umap_gradient(const Eigen::MatrixXd& y, const std::vector<UmapEdgeTerm>& terms,
                              double a, double b);

/// Deterministic per-epoch negative sampling: `count` non-edges per point.
std::vector<UmapEdgeTerm> umap_negative_samples(const UmapGraph& graph, int count, int epoch,
                                                std::uint64_t seed);

struct UmapResult {
    LowDimEmbedding embedding;
    std::vector<double> loss_trace;
    AbParams ab;
};
UmapResult umap(const Eigen::MatrixXd& x, const UmapConfig& config);

}  // namespace sleeptopo::dimred

#endif
