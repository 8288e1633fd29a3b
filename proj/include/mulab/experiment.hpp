#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mulab/group.hpp"

namespace mulab {

enum class ReportFormat { csv, json };

std::string to_string(ReportFormat f);
ReportFormat parse_report_format(const std::string& text);

struct ExperimentConfig {
    GroupSpec group{{2}};
    std::optional<std::uint64_t> m;
    std::optional<double> alpha;  // m = round(N^alpha); exactly one of m / alpha is set
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    bool replacement = false;
    std::uint64_t restarts = 20;
    std::uint64_t max_iters = 100;
    std::optional<std::uint64_t> k;  // defaults to m (capped at N)
    double epsilon = 1.0;
    double alon_constant = 1.0;
    std::optional<std::filesystem::path> output_path;
    ReportFormat output_format = ReportFormat::csv;
    /// Wall-clock phase timings; when false the elapsed_ms_* fields are written as 0 so
    /// that equal configs give byte-identical reports.
    bool timings = false;

    /// Throws std::invalid_argument on any violated precondition.
    void validate() const;
    std::uint64_t subset_size() const;
    std::uint64_t shore_size() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::filesystem::path& path);

struct ExperimentRecord {
    std::uint64_t trial_index = 0;
    std::uint64_t trial_seed = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double max_nonprincipal = 0.0;
    double hayes_bound = 0.0;
    bool bizu_violation = false;
    std::uint64_t mu_heuristic = 0;
    double main_bound = 0.0;
    bool bbb_violation = false;
    double kiltz_bound = 0.0;
    double conjecture_curve = 0.0;
    std::optional<double> alon_bound;
    double elapsed_ms_sample = 0.0;
    double elapsed_ms_spectrum = 0.0;
    double elapsed_ms_maximize = 0.0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// A failing trial aborts the run; the message and `trial_index` name it.
class TrialError : public std::runtime_error {
public:
    TrialError(std::uint64_t trial_index, const std::string& what);
    std::uint64_t trial_index;
};

struct RunOptions {
    /// 0 uses the OpenMP default; 1 runs the serial reference loop.
    int threads = 0;
};

/// One record per trial, ordered by trial index whatever the thread count.
std::vector<ExperimentRecord> run_trials(const ExperimentConfig& config, const RunOptions& opts = {});

/// Runs one trial; run_trials is this in a loop.
ExperimentRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index);

}  // namespace mulab
