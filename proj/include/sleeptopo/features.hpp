#ifndef SLEEPTOPO_FEATURES_HPP
#define SLEEPTOPO_FEATURES_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

namespace sleeptopo::features {

/// The four fixed wavebands used for every frequency-domain feature.
struct BandSpec {
    const char* name;
    double low_hz;
    double high_hz;
};
inline constexpr std::array<BandSpec, 4> kBands = {{
    {"delta", 1.0, 4.0},
    {"theta", 4.0, 8.0},
    {"alpha", 8.0, 13.0},
    {"beta", 13.0, 30.0},
}};

struct Moments {
    double min = 0, max = 0, mean = 0, std = 0, var = 0;
    double skewness = 0, kurtosis = 0, median = 0;
    bool degenerate = false;  // zero variance
};

struct Hjorth {
    double activity = 0, mobility = 0, complexity = 0;
    bool degenerate = false;
};

/// Count of adjacent pairs where the signal crosses or lands on zero:
/// (- to +), (+ to -), or (nonzero to exactly zero).
int zero_crossings(std::span<const double> x);

/// Activity/mobility/complexity from the standard deviations of the signal
/// and its first two difference sequences.
Hjorth hjorth(std::span<const double> x);

/// Population-normalized statistics; kurtosis is the raw fourth standardized
/// moment. Zero variance resolves skewness and kurtosis to 0, flagged.
Moments moments(std::span<const double> x);

/// Petrosian fractal dimension. With delta == 0 (default) the difference
/// count is the number of sign changes between consecutive first differences;
/// with delta > 0 it counts |x[n]-x[n-1]| >= delta.
double petrosian_fd(std::span<const double> x, double delta = 0.0);

double teager_energy(std::span<const double> x);
double mean_energy(std::span<const double> x);
double curve_length(std::span<const double> x);

/// Rescaled-range Hurst estimate: slope of log(mean R/S) against log(window
/// size) over logarithmically spaced window sizes. All-degenerate input
/// (every window flat) yields 0.5, flagged.
struct HurstResult {
    double exponent = 0.5;
    bool degenerate = false;
};
HurstResult hurst(std::span<const double> x);

/// The 20 frequency-domain values: per band, band power of the Butterworth-
/// filtered signal, periodogram power sum, relative power, peak frequency,
/// and band spectral entropy (base 2).
struct BandFeatures {
    std::array<double, 4> band_power{};
    std::array<double, 4> psd_sum{};
    std::array<double, 4> relative_power{};
    std::array<double, 4> peak_frequency{};
    std::array<double, 4> spectral_entropy{};
    bool degenerate = false;  // total four-band power was zero
};
BandFeatures band_features(std::span<const double> x, double sample_rate_hz, bool hann = true);

/// 16 values: mean, std, energy, and entropy of normalized squared
/// coefficients for each of the four DWT detail levels.
std::array<double, 16> dwt_features(std::span<const double> x);

/// One epoch's spectral-temporal block, in the fixed documented order.
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> degenerate;  // names of features that hit a 0/0 convention
};

/// Names of the 53 spectral-temporal features, fixed order:
/// 17 time, then 20 frequency, then 16 time-frequency.
const std::vector<std::string>& spectro_temporal_names();

/// Grouping tag ("time" / "frequency" / "time-frequency") per feature,
/// aligned with spectro_temporal_names().
const std::vector<std::string>& spectro_temporal_groups();

/// Computes all 53 spectral-temporal features for one epoch. The DWT block
/// consumes the signal truncated to the largest multiple of 16 samples.
FeatureVector spectro_temporal_features(std::span<const double> x, double sample_rate_hz,
                                        double petrosian_delta = 0.0, bool hann = true);

}  // namespace sleeptopo::features

#endif
