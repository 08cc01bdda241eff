#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hurst/convergence.hpp"
#include "hurst/study.hpp"
#include "hurst/timeseries.hpp"

namespace hurst {

inline constexpr std::string_view kSeriesHeader = "# hurst-series v1";
inline constexpr std::string_view kEstimatesHeader = "# hurst-estimates v1";
inline constexpr std::string_view kStudyCellsHeader = "# hurst-study-cells v1";
inline constexpr std::string_view kStudyNminHeader = "# hurst-study-nmin v1";
inline constexpr std::string_view kTrackHeader = "# hurst-track v1";
inline constexpr int kJsonFormatVersion = 1;

/// Shortest decimal that parses back to the same double; "nan" for NaN.
[[nodiscard]] std::string format_double(double v);

/// Strict full-token parse; nullopt on any trailing garbage.
[[nodiscard]] std::optional<double> parse_double(std::string_view token);

// Series files: one value per line, '#' comments allowed, read(write(x)) == x bit for bit.
void write_series(std::ostream& out, std::span<const double> x);
[[nodiscard]] std::string series_text(std::span<const double> x);
[[nodiscard]] TimeSeries read_series(std::istream& in);
[[nodiscard]] TimeSeries read_series_file(const std::filesystem::path& path);

/// Writes to a temporary sibling, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Study report: `h0,n,method,bias,sigma,mse,rmse,failures,quality`, `method,nmin`, and JSON.
[[nodiscard]] std::string study_cells_csv(const StudyReport& report);
[[nodiscard]] std::string study_nmin_csv(const StudyReport& report);
[[nodiscard]] std::string study_json(const StudyReport& report);

/// Reads a StudyConfig from the JSON object form used under "config" in study_json.
/// Missing keys keep their defaults.
[[nodiscard]] StudyConfig study_config_from_json(std::string_view text);

// Tracks: CSV `t,h_hat` (empty h_hat for gaps) and a JSON variant with config and gap count.
[[nodiscard]] std::string track_csv(const ConvergenceTrack& track, EstimatorId method);
[[nodiscard]] std::string track_json(const ConvergenceTrack& track, const ConvergenceConfig& cfg);
[[nodiscard]] std::string track_json(const ConvergenceTrack& track, const WindowConfig& cfg);

}  // namespace hurst
