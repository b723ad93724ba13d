#ifndef SLEEPTOPO_INGEST_HPP
#define SLEEPTOPO_INGEST_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sleeptopo/common.hpp"

namespace sleeptopo::ingest {

/// One channel of a recording in physical units.
struct SignalRecord {
    std::string label;
    double sample_rate_hz = 0.0;
    std::vector<double> samples;
    double physical_min = 0.0;
    double physical_max = 0.0;
    int digital_min = 0;
    int digital_max = 0;
};

/// One 30 s segment of a single channel; the unit of all downstream work.
struct Epoch {
    std::string subject_id;
    int index = 0;
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
    std::optional<StageLabel> label;
};

inline constexpr double kEpochSeconds = 30.0;

inline std::size_t epoch_sample_count(double sample_rate_hz) {
    return static_cast<std::size_t>(sample_rate_hz * kEpochSeconds + 0.5);
}

/// A labeled time span from a hypnogram sidecar.
struct LabelSpan {
    double onset_s = 0.0;
    double duration_s = 0.0;
    std::string stage_text;
};

/// Reads an EDF stream: 256-byte ASCII header, per-signal headers, then data
/// records of 16-bit little-endian samples. Samples are rescaled to physical
/// units. Values are clamped to the declared physical range (the affine map
/// can overshoot by half a quantization step at the digital rails).
std::vector<SignalRecord> read_edf(std::istream& in);
std::vector<SignalRecord> read_edf_file(const std::string& path);

/// Writes records back out as EDF, quantizing physical values through the
/// inverse of the read_edf scaling. All records must share one duration per
/// data record; record_duration_s controls how samples are chunked.
void write_edf(std::ostream& out, const std::vector<SignalRecord>& records,
               double record_duration_s = 1.0);

/// Epoch CSV: subject_id, index, label-or-empty, then one column per sample.
/// A header row is detected and skipped if present.
std::vector<Epoch> read_csv_epochs(std::istream& in, double sample_rate_hz);
std::vector<Epoch> read_csv_epochs_file(const std::string& path, double sample_rate_hz);
void write_csv_epochs(std::ostream& out, const std::vector<Epoch>& epochs);

/// Hypnogram sidecar CSV: onset_s, duration_s, stage text. Header optional.
std::vector<LabelSpan> read_label_csv(std::istream& in);
std::vector<LabelSpan> read_label_csv_file(const std::string& path);

struct SegmentResult {
    std::vector<Epoch> epochs;
    int dropped_spans = 0;    // spans with unmappable stage text
    int dropped_windows = 0;  // windows extending past the end of the signal
};

/// Cuts the labeled portion of a signal into 30 s epochs. Stage text is
/// mapped through map_hypnogram_text; R&K stage 4 folds into N3. Windows
/// running past the end of the signal are dropped and counted.
SegmentResult segment(const SignalRecord& record, const std::vector<LabelSpan>& labels,
                      const std::string& subject_id);

/// Picks the channel whose label contains `selector` (case-sensitive
/// substring). Throws if no channel matches.
const SignalRecord& select_channel(const std::vector<SignalRecord>& records,
                                   const std::string& selector);

}  // namespace sleeptopo::ingest

#endif
