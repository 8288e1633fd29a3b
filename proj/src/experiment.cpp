#include "mulab/experiment.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>

#include <omp.h>

#include "mulab/bounds.hpp"
#include "mulab/fourier.hpp"
#include "mulab/maximizer.hpp"
#include "mulab/sampler.hpp"

namespace mulab {

std::string to_string(ReportFormat f) { return f == ReportFormat::csv ? "csv" : "json"; }

ReportFormat parse_report_format(const std::string& text) {
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown report format '" + text + "' (expected csv or json)");
}

std::uint64_t ExperimentConfig::subset_size() const {
    if (m) return *m;
    if (alpha) {
        const double v = std::round(std::pow(static_cast<double>(group.order()), *alpha));
        return v < 1.0 ? 1 : static_cast<std::uint64_t>(v);
    }
    throw std::invalid_argument("experiment config needs m or alpha");
}

std::uint64_t ExperimentConfig::shore_size() const {
    if (k) return *k;
    return std::min(subset_size(), group.order());
}

void ExperimentConfig::validate() const {
    if (m.has_value() == alpha.has_value()) {
        throw std::invalid_argument("experiment config needs exactly one of m or alpha");
    }
    if (alpha && !(*alpha > 0.0 && *alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const auto size = subset_size();
    if (size < 1) throw std::invalid_argument("m must be at least 1");
    if (!replacement && size > group.order()) throw std::invalid_argument("m exceeds the group order");
    const auto shore = shore_size();
    if (shore < 1 || shore > group.order()) throw std::invalid_argument("k must lie in [1, N]");
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(alon_constant > 0.0)) throw std::invalid_argument("alon_constant must be positive");
    group.require_dense();
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    static const std::array<std::string_view, 13> known = {
        "group", "m", "alpha", "trials", "master_seed", "replacement", "restarts",
        "max_iters", "k", "epsilon", "alon_constant", "output", "timings"};
    for (const auto& [key, _] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("unknown experiment config field '" + key + "'");
        }
    }
    ExperimentConfig c;
    c.group = parse_group_spec(j.at("group").get<std::string>());
    if (j.contains("m") && !j["m"].is_null()) c.m = j["m"].get<std::uint64_t>();
    if (j.contains("alpha") && !j["alpha"].is_null()) c.alpha = j["alpha"].get<double>();
    c.trials = j.value("trials", c.trials);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.replacement = j.value("replacement", c.replacement);
    c.restarts = j.value("restarts", c.restarts);
    c.max_iters = j.value("max_iters", c.max_iters);
    if (j.contains("k") && !j["k"].is_null()) c.k = j["k"].get<std::uint64_t>();
    c.epsilon = j.value("epsilon", c.epsilon);
    c.alon_constant = j.value("alon_constant", c.alon_constant);
    c.timings = j.value("timings", c.timings);
    if (j.contains("output")) {
        const auto& out = j["output"];
        if (out.contains("path") && !out["path"].is_null()) c.output_path = out["path"].get<std::string>();
        if (out.contains("format")) c.output_format = parse_report_format(out["format"].get<std::string>());
    }
    return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["group"] = c.group.to_string();
    j["m"] = c.m ? nlohmann::json(*c.m) : nlohmann::json(nullptr);
    j["alpha"] = c.alpha ? nlohmann::json(*c.alpha) : nlohmann::json(nullptr);
    j["trials"] = c.trials;
    j["master_seed"] = c.master_seed;
    j["replacement"] = c.replacement;
    j["restarts"] = c.restarts;
    j["max_iters"] = c.max_iters;
    j["k"] = c.k ? nlohmann::json(*c.k) : nlohmann::json(nullptr);
    j["epsilon"] = c.epsilon;
    j["alon_constant"] = c.alon_constant;
    j["timings"] = c.timings;
    j["output"] = {{"path", c.output_path ? nlohmann::json(c.output_path->string()) : nlohmann::json(nullptr)},
                   {"format", to_string(c.output_format)}};
    return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open config file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

TrialError::TrialError(std::uint64_t index, const std::string& what)
    : std::runtime_error("trial " + std::to_string(index) + " failed: " + what), trial_index(index) {}

ExperimentRecord run_trial(const ExperimentConfig& config, std::uint64_t trial_index) {
    using clock = std::chrono::steady_clock;
    const auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    const GroupSpec& g = config.group;
    const std::uint64_t m = config.subset_size();
    const std::uint64_t k = config.shore_size();
    const double n = static_cast<double>(g.order());

    ExperimentRecord rec;
    rec.trial_index = trial_index;
    rec.trial_seed = derive_seed(config.master_seed, trial_index);
    rec.n = g.order();
    rec.m = m;

    auto t0 = clock::now();
    const Subset a = sample_subset(g, m, derive_seed(rec.trial_seed, 0), config.replacement);
    const double t_sample = ms_since(t0);

    t0 = clock::now();
    rec.max_nonprincipal = max_nonprincipal_coeff(a).value;
    const double t_spectrum = ms_since(t0);

    t0 = clock::now();
    AlternatingOptions opts;
    opts.restarts = config.restarts;
    opts.seed = derive_seed(rec.trial_seed, 1);
    opts.max_iters = config.max_iters;
    rec.mu_heuristic = alternating_maximize(a, k, opts).count;
    const double t_maximize = ms_since(t0);

    const double md = static_cast<double>(m);
    rec.hayes_bound = bounds::hayes_coeff_bound(n, md, config.epsilon);
    rec.bizu_violation = rec.max_nonprincipal > rec.hayes_bound;
    rec.main_bound = bounds::main_bound(n, md);
    rec.bbb_violation = static_cast<double>(rec.mu_heuristic) > rec.main_bound;
    rec.kiltz_bound = bounds::kiltz_bound(n, md).value;
    rec.conjecture_curve = bounds::conjecture_curve(n, md);
    rec.alon_bound = bounds::alon_bound(n, md, static_cast<double>(k), config.alon_constant);

    if (config.timings) {
        rec.elapsed_ms_sample = t_sample;
        rec.elapsed_ms_spectrum = t_spectrum;
        rec.elapsed_ms_maximize = t_maximize;
    }
    return rec;
}

std::vector<ExperimentRecord> run_trials(const ExperimentConfig& config, const RunOptions& opts) {
    config.validate();
    const auto trials = static_cast<std::int64_t>(config.trials);
    std::vector<ExperimentRecord> records(config.trials);
    std::vector<std::exception_ptr> errors(config.trials);

    auto one = [&](std::int64_t i) {
        const auto idx = static_cast<std::uint64_t>(i);
        try {
            records[idx] = run_trial(config, idx);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    };

    if (opts.threads == 1) {
        for (std::int64_t i = 0; i < trials; ++i) one(i);
    } else {
        const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::int64_t i = 0; i < trials; ++i) one(i);
    }

    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            throw TrialError(i, e.what());
        }
    }
    return records;
}

}  // namespace mulab
