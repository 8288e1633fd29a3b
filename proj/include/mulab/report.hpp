#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

#include "mulab/experiment.hpp"

namespace mulab {

inline constexpr std::string_view kSchemaVersion = "mu-lab/1";

/// Column names shared by the CSV header and the JSON record objects.
inline constexpr std::array<std::string_view, 16> kRecordFields = {
    "trial_index",      "trial_seed",      "N",                   "m",
    "max_nonprincipal", "hayes_bound",     "bizu_violation",      "mu_heuristic",
    "main_bound",       "bbb_violation",   "kiltz_bound",         "conjecture_curve",
    "alon_bound",       "elapsed_ms_sample", "elapsed_ms_spectrum", "elapsed_ms_maximize",
};

/// Reals with 12 significant digits; an inapplicable alon_bound is an empty field.
void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
/// {"schema_version", "meta": config, "records": [...]}
void write_json(std::ostream& out, std::span<const ExperimentRecord> records, const ExperimentConfig& config);

/// Throws std::invalid_argument on an empty record list, std::runtime_error if the file cannot be written.
void emit_report(std::span<const ExperimentRecord> records, const ExperimentConfig& config, ReportFormat format,
                 const std::filesystem::path& destination);
void emit_report(std::span<const ExperimentRecord> records, const ExperimentConfig& config, ReportFormat format,
                 std::ostream& out);

nlohmann::json record_to_json(const ExperimentRecord& r);

}  // namespace mulab
