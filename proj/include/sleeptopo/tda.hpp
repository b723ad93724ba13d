#ifndef SLEEPTOPO_TDA_HPP
#define SLEEPTOPO_TDA_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sleeptopo::tda {

/// Delay-embedded point cloud: row n is [x_n, x_{n+tau}, ..., x_{n+(d-1)tau}].
struct PointCloud {
    Eigen::MatrixXd points;  // n x d
    int delay = 0;
    int dimension = 0;
};

PointCloud takens_embed(std::span<const double> x, int dimension, int delay);

/// Symmetric pairwise Euclidean distances with zero diagonal.
Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& points);

/// Checks the metric axioms (symmetry, non-negativity, zero diagonal,
/// triangle inequality) within tol. O(n^3); meant for validation, not hot paths.
bool is_metric(const Eigen::MatrixXd& dist, double tol = 1e-9);

/// Greedy farthest-point traversal. The first index is drawn from the seeded
/// generator; each later index maximizes the distance to the chosen set,
/// ties broken by smaller index.
std::vector<int> maxmin_subsample(const Eigen::MatrixXd& dist, int k, std::uint64_t seed);

/// Farthest-point subsample computed directly from a point cloud without
/// materializing the full distance matrix.
std::vector<int> maxmin_subsample_points(const Eigen::MatrixXd& points, int k, std::uint64_t seed);

struct PersistencePair {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;
    bool essential = false;  // death substituted by the filtration cap

    double lifespan() const { return death - birth; }
    bool operator==(const PersistencePair&) const = default;
};

struct PersistenceDiagram {
    std::vector<PersistencePair> pairs;
    double filtration_cap = 0.0;
};

/// Connected-component persistence: union-find over edges in ascending
/// order. Merges emit (0, edge length); the last component is essential with
/// death = filtration cap (max pairwise distance). Zero-persistence pairs
/// from duplicate points are dropped.
std::vector<PersistencePair> rips_h0(const Eigen::MatrixXd& dist);

/// Cycle persistence up to the cap: boundary-matrix reduction over GF(2)
/// with triangle columns and edge rows. Unkilled cycles become essential
/// pairs with death = max_eps. Zero-persistence pairs are dropped.
std::vector<PersistencePair> rips_h1(const Eigen::MatrixXd& dist, double max_eps);

/// Both dimensions plus the cap, with max_eps defaulting to the cap itself
/// (in which case no H1 class can be essential).
PersistenceDiagram rips_diagram(const Eigen::MatrixXd& dist);

/// 16 summary statistics of one homology dimension: mean/std/skewness/
/// kurtosis/P25/P50/P75/entropy of the midlife set then of the lifespan set.
/// Entropy is the natural-log Shannon entropy of values normalized to sum 1.
struct PersistenceStats {
    std::array<double, 16> values{};
    bool degenerate = false;  // no pairs in the requested dimension
};
PersistenceStats persistence_statistics(const PersistenceDiagram& diagram, int dim);

/// Keeps the k0 H0 and k1 H1 pairs with the largest lifespans. Ties break by
/// smaller birth, then input order.
PersistenceDiagram filter_top_k(const PersistenceDiagram& diagram, int k0, int k1);

struct TopoParams {
    int embed_dim = 3;
    int delay = 10;          // samples; 0.1 s at 100 Hz
    int subsample = 256;     // maxmin landmark count
    bool autocorr_delay = false;  // pick delay from the first autocorrelation zero
    bool drop_essential = false;  // exclude essential pairs from the statistics
};

/// Names of the 32 topological features (16 per homology dimension),
/// aligned with topological_features output.
const std::vector<std::string>& topological_names();

struct TopoFeatures {
    std::vector<double> values;  // 32
    PersistenceDiagram diagram;
    std::vector<std::string> degenerate;
};

/// Full per-epoch pipeline: delay embedding, farthest-point subsample,
/// H0+H1 persistence, then summary statistics for both dimensions.
TopoFeatures topological_features(std::span<const double> x, const TopoParams& params,
                                  std::uint64_t seed);

/// First zero crossing of the sample autocorrelation, used as an alternative
/// delay heuristic. Falls back to `fallback` when the autocorrelation never
/// crosses zero.
int first_autocorr_zero(std::span<const double> x, int fallback);

}  // namespace sleeptopo::tda

#endif
