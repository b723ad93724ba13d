#ifndef SLEEPTOPO_VIZ_HPP
#define SLEEPTOPO_VIZ_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sleeptopo/common.hpp"
#include "sleeptopo/dimred.hpp"
#include "sleeptopo/tda.hpp"

namespace sleeptopo::viz {

/// Fixed stage palette so figures are comparable across runs.
inline constexpr std::array<const char*, kNumStages> kStageColors = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"};
inline constexpr const char* kUnlabeledColor = "#7f7f7f";
inline constexpr const char* kH0Color = "#1f77b4";
inline constexpr const char* kH1Color = "#ff7f0e";

/// Persistence diagram: birth/death axes, dashed diagonal, H0/H1 in fixed
/// colors, essential pairs drawn as open triangles. Top-k filtering is
/// applied before drawing.
std::string diagram_svg(const tda::PersistenceDiagram& diagram, int k0 = 500, int k1 = 20);

/// 2-D embedding scatter with one fixed color per stage and a legend.
/// Unlabeled rows draw in neutral gray. Throws unless coords have 2 columns.
std::string scatter_svg(const dimred::LowDimEmbedding& embedding,
                        const std::vector<std::optional<StageLabel>>& labels);

struct KdeGrid {
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    Eigen::MatrixXd density;  // g x g, density(ix, iy)
    double bandwidth_x = 0, bandwidth_y = 0;

    double cell_area() const;
    double riemann_sum() const;
};

/// Product-Gaussian KDE on a g x g grid covering the data plus a 3-bandwidth
/// margin. Per-axis bandwidth is sigma * n^(-1/6). Throws on zero spread.
KdeGrid kde_grid(const Eigen::MatrixXd& points, int g);

/// Filled density bands at 20/40/60/80% of the grid maximum, one overlay per
/// stage, in stage colors. Stages with fewer than two points or zero spread
/// are skipped.
std::string kde_svg(const dimred::LowDimEmbedding& embedding,
                    const std::vector<std::optional<StageLabel>>& labels, int g = 96);

std::string kde_grid_csv(const KdeGrid& grid);

/// Diagram exchange format consumed by the plot stage: dim, birth, death,
/// essential.
std::string diagram_csv(const tda::PersistenceDiagram& diagram);
tda::PersistenceDiagram parse_diagram_csv(const std::string& text);

}  // namespace sleeptopo::viz

#endif
