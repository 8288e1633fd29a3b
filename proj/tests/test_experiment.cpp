#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mulab/bounds.hpp"
#include "mulab/experiment.hpp"
#include "mulab/fourier.hpp"
#include "mulab/maximizer.hpp"
#include "mulab/report.hpp"
#include "mulab/sampler.hpp"

using namespace mulab;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.group = parse_group_spec("Z2^8");
    c.m = 16;
    c.trials = 6;
    c.master_seed = 99;
    c.restarts = 4;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Config, Validation) {
    auto c = small_config();
    EXPECT_NO_THROW(c.validate());
    c.trials = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.alpha = 0.5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.m.reset();
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.subset_size(), 16U);
    c = small_config();
    c.m = 300;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.replacement = true;
    c.k = 10;
    EXPECT_NO_THROW(c.validate());
    EXPECT_THROW(run_trials(ExperimentConfig{.trials = 0}), std::invalid_argument);
}

TEST(Config, JsonRoundTrip) {
    auto c = small_config();
    c.output_path = "out.json";
    c.output_format = ReportFormat::json;
    c.epsilon = 0.5;
    c.k = 8;
    const auto back = config_from_json(config_to_json(c));
    EXPECT_EQ(config_to_json(back), config_to_json(c));
    EXPECT_THROW(config_from_json(nlohmann::json{{"group", "Z2^3"}, {"m", 2}, {"bogus", 1}}), std::invalid_argument);
    EXPECT_THROW(config_from_json(nlohmann::json{{"group", "Z(1)"}, {"m", 2}}), std::invalid_argument);
}

TEST(RunTrials, RecordsAreConsistent) {
    const auto c = small_config();
    const auto records = run_trials(c);
    ASSERT_EQ(records.size(), 6U);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        EXPECT_EQ(r.trial_index, i);
        EXPECT_EQ(r.trial_seed, derive_seed(c.master_seed, i));
        EXPECT_EQ(r.n, 256U);
        EXPECT_EQ(r.m, 16U);
        EXPECT_EQ(r.bizu_violation, r.max_nonprincipal > r.hayes_bound);
        EXPECT_EQ(r.bbb_violation, static_cast<double>(r.mu_heuristic) > r.main_bound);
        EXPECT_DOUBLE_EQ(r.hayes_bound, bounds::hayes_coeff_bound(256, 16, 1.0));
        EXPECT_DOUBLE_EQ(r.main_bound, bounds::main_bound(256, 16));
        EXPECT_GE(r.mu_heuristic, 16U);  // B = A, C containing 0 already gives |A|
        EXPECT_EQ(r.elapsed_ms_maximize, 0.0);
    }
}

TEST(RunTrials, TrialMatchesComponentsRunByHand) {
    const auto c = small_config();
    const auto rec = run_trial(c, 3);
    const auto seed = derive_seed(c.master_seed, 3);
    const auto a = sample_subset(c.group, 16, derive_seed(seed, 0), false);
    EXPECT_EQ(rec.max_nonprincipal, max_nonprincipal_coeff(a).value);
    AlternatingOptions opts;
    opts.restarts = c.restarts;
    opts.seed = derive_seed(seed, 1);
    EXPECT_EQ(rec.mu_heuristic, alternating_maximize(a, 16, opts).count);
}

TEST(RunTrials, DeterministicUnderAnyThreadCount) {
    const auto c = small_config();
    const auto serial = run_trials(c, RunOptions{1});
    EXPECT_EQ(run_trials(c, RunOptions{2}), serial);
    EXPECT_EQ(run_trials(c, RunOptions{4}), serial);
    EXPECT_EQ(run_trials(c, RunOptions{0}), serial);
}

TEST(RunTrials, ReplacementAndAlphaModes) {
    ExperimentConfig c;
    c.group = parse_group_spec("Z(3)xZ(9)");
    c.alpha = 0.5;
    c.trials = 3;
    c.replacement = true;
    c.restarts = 2;
    c.timings = true;
    const auto records = run_trials(c);
    for (const auto& r : records) {
        EXPECT_EQ(r.m, 5U);  // round(27^0.5)
        EXPECT_GE(r.elapsed_ms_maximize, 0.0);
    }
}

TEST(RunTrials, FullGroupWithoutIterations) {
    auto c = small_config();
    c.group = parse_group_spec("Z(2)xZ(3)");
    c.m = 6;
    c.max_iters = 0;
    for (const auto& r : run_trials(c)) EXPECT_EQ(r.mu_heuristic, 36U);
}

TEST(TrialError, NamesTheTrial) {
    TrialError e(4, "boom");
    EXPECT_EQ(e.trial_index, 4U);
    EXPECT_STREQ(e.what(), "trial 4 failed: boom");
}

TEST(Report, CsvLayout) {
    const auto c = small_config();
    auto records = run_trials(c);
    records.resize(1);
    std::ostringstream out;
    emit_report(records, c, ReportFormat::csv, out);
    const auto text = out.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
    const auto header = text.substr(0, text.find('\n'));
    EXPECT_EQ(header,
              "trial_index,trial_seed,N,m,max_nonprincipal,hayes_bound,bizu_violation,mu_heuristic,main_bound,"
              "bbb_violation,kiltz_bound,conjecture_curve,alon_bound,elapsed_ms_sample,elapsed_ms_spectrum,"
              "elapsed_ms_maximize");
    const auto row = text.substr(header.size() + 1);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
    EXPECT_EQ(static_cast<std::size_t>(std::count(header.begin(), header.end(), ',') + 1), kRecordFields.size());
    EXPECT_NE(row.find(",618.833931528,"), std::string::npos) << row;  // main_bound(256, 16), 12 digits
}

TEST(Report, JsonCarriesMetaAndMatchingFields) {
    auto c = small_config();
    c.output_format = ReportFormat::json;
    const auto records = run_trials(c);
    std::ostringstream out;
    emit_report(records, c, ReportFormat::json, out);
    const auto doc = nlohmann::json::parse(out.str());
    EXPECT_EQ(doc["schema_version"], "mu-lab/1");
    EXPECT_EQ(config_to_json(config_from_json(doc["meta"])), config_to_json(c));
    ASSERT_EQ(doc["records"].size(), records.size());
    for (const auto& rec : doc["records"]) {
        EXPECT_EQ(rec.size(), kRecordFields.size());
        for (auto f : kRecordFields) EXPECT_TRUE(rec.contains(std::string(f))) << f;
    }
    EXPECT_EQ(doc["records"][2]["mu_heuristic"].get<std::uint64_t>(), records[2].mu_heuristic);
}

TEST(Report, Errors) {
    const auto c = small_config();
    std::ostringstream out;
    EXPECT_THROW(emit_report({}, c, ReportFormat::csv, out), std::invalid_argument);
    const auto records = run_trials(c);
    EXPECT_THROW(emit_report(records, c, ReportFormat::csv, std::filesystem::path("/nonexistent/dir/x.csv")),
                 std::runtime_error);
}

TEST(Report, FilesAreByteIdenticalAcrossRuns) {
    const auto c = small_config();
    const auto dir = std::filesystem::temp_directory_path();
    const auto p1 = dir / "mulab_report_a.csv";
    const auto p2 = dir / "mulab_report_b.csv";
    emit_report(run_trials(c, RunOptions{1}), c, ReportFormat::csv, p1);
    emit_report(run_trials(c, RunOptions{3}), c, ReportFormat::csv, p2);
    EXPECT_EQ(slurp(p1), slurp(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}
