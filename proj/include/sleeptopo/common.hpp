#ifndef SLEEPTOPO_COMMON_HPP
#define SLEEPTOPO_COMMON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sleeptopo {

/// The five-class hypnogram vocabulary. Order is fixed: it defines class
/// indices for confusion matrices and report columns.
enum class StageLabel : int { W = 0, N1 = 1, N2 = 2, N3 = 3, REM = 4 };

inline constexpr int kNumStages = 5;

inline constexpr std::array<const char*, kNumStages> kStageNames = {"W", "N1", "N2", "N3", "REM"};

inline const char* stage_name(StageLabel s) { return kStageNames[static_cast<int>(s)]; }

/// Parses an exact stage name ("W", "N1", ... "REM"). Returns nullopt for
/// anything else; callers decide whether that is an error or an unlabeled row.
std::optional<StageLabel> parse_stage(const std::string& text);

/// Maps raw hypnogram annotation text to a stage. Accepts exact names, the
/// R&K digit codes ("1".."4", with 3 and 4 both mapping to N3), "R", and the
/// common "Sleep stage X" annotation strings. Returns nullopt for spans that
/// must be dropped (MOVEMENT, UNKNOWN, "?", ...).
std::optional<StageLabel> map_hypnogram_text(const std::string& text);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data. Carries the byte offset (for binary streams) or the
/// row number (for text) where parsing failed.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte offset " + std::to_string(offset) + ")"), byte_offset(offset) {}
    std::size_t byte_offset;
};

struct ConfigError : Error {
    using Error::Error;
};

struct MissingArtifactError : Error {
    MissingArtifactError(const std::string& path)
        : Error("missing upstream artifact: " + path), expected_path(path) {}
    std::string expected_path;
};

struct NumericalError : Error {
    using Error::Error;
};

}  // namespace sleeptopo

#endif
