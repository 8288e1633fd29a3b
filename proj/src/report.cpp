#include "mulab/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace mulab {

namespace {

std::string real12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

nlohmann::json record_to_json(const ExperimentRecord& r) {
    nlohmann::json j;
    j["trial_index"] = r.trial_index;
    j["trial_seed"] = r.trial_seed;
    j["N"] = r.n;
    j["m"] = r.m;
    j["max_nonprincipal"] = r.max_nonprincipal;
    j["hayes_bound"] = r.hayes_bound;
    j["bizu_violation"] = r.bizu_violation;
    j["mu_heuristic"] = r.mu_heuristic;
    j["main_bound"] = r.main_bound;
    j["bbb_violation"] = r.bbb_violation;
    j["kiltz_bound"] = r.kiltz_bound;
    j["conjecture_curve"] = r.conjecture_curve;
    j["alon_bound"] = r.alon_bound ? nlohmann::json(*r.alon_bound) : nlohmann::json(nullptr);
    j["elapsed_ms_sample"] = r.elapsed_ms_sample;
    j["elapsed_ms_spectrum"] = r.elapsed_ms_spectrum;
    j["elapsed_ms_maximize"] = r.elapsed_ms_maximize;
    return j;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
    for (std::size_t i = 0; i < kRecordFields.size(); ++i) out << (i ? "," : "") << kRecordFields[i];
    out << '\n';
    for (const auto& r : records) {
        out << r.trial_index << ',' << r.trial_seed << ',' << r.n << ',' << r.m << ',' << real12(r.max_nonprincipal)
            << ',' << real12(r.hayes_bound) << ',' << int{r.bizu_violation} << ',' << r.mu_heuristic << ','
            << real12(r.main_bound) << ',' << int{r.bbb_violation} << ',' << real12(r.kiltz_bound) << ','
            << real12(r.conjecture_curve) << ',' << (r.alon_bound ? real12(*r.alon_bound) : "") << ','
            << real12(r.elapsed_ms_sample) << ',' << real12(r.elapsed_ms_spectrum) << ','
            << real12(r.elapsed_ms_maximize) << '\n';
    }
}

void write_json(std::ostream& out, std::span<const ExperimentRecord> records, const ExperimentConfig& config) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["meta"] = config_to_json(config);
    doc["records"] = nlohmann::json::array();
    for (const auto& r : records) doc["records"].push_back(record_to_json(r));
    out << doc.dump(2) << '\n';
}

void emit_report(std::span<const ExperimentRecord> records, const ExperimentConfig& config, ReportFormat format,
                 std::ostream& out) {
    if (records.empty()) throw std::invalid_argument("cannot emit a report with no records");
    if (format == ReportFormat::csv) {
        write_csv(out, records);
    } else {
        write_json(out, records, config);
    }
}

void emit_report(std::span<const ExperimentRecord> records, const ExperimentConfig& config, ReportFormat format,
                 const std::filesystem::path& destination) {
    if (records.empty()) throw std::invalid_argument("cannot emit a report with no records");
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(destination.string() + ": cannot open report for writing");
    emit_report(records, config, format, out);
    out.flush();
    if (!out) throw std::runtime_error(destination.string() + ": write failed");
}

}  // namespace mulab
