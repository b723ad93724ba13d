#ifndef SLEEPTOPO_DSP_HPP
#define SLEEPTOPO_DSP_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sleeptopo::dsp {

/// One-sided periodogram S(f_k) = |X_k|^2 / N for k = 0..N/2, with
/// delta_f = sample_rate / N. With `hann` set, a Hann window with
/// coherent-gain correction is applied before the transform.
struct Periodogram {
    std::vector<double> power;  // bins 0..N/2
    double delta_f = 0.0;
};
Periodogram periodogram(std::span<const double> x, double sample_rate_hz, bool hann = true);

/// Real-input DFT (positive-frequency half), via FFTW.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Butterworth band-pass of the given order (analog prototype order; the
/// digital filter has 2*order poles), applied forward-backward for zero
/// phase. Edges in Hz.
std::vector<double> butter_bandpass_filtfilt(std::span<const double> x, double sample_rate_hz,
                                             double low_hz, double high_hz, int order = 4);

/// 4-level Daubechies-4 decomposition with periodic extension.
/// Input length must be a multiple of 16.
struct Dwt4 {
    std::array<std::vector<double>, 4> detail;  // levels 1..4
    std::vector<double> approx;                 // level-4 approximation
};
Dwt4 dwt4_db4(std::span<const double> x);

/// Inverse of dwt4_db4; exact up to floating-point rounding.
std::vector<double> idwt4_db4(const Dwt4& coeffs);

}  // namespace sleeptopo::dsp

#endif
