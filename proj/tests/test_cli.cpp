#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mulab");
    std::ostringstream out, err;
    const int code = mulab::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("mulab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const auto p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_F(CliTest, MuPrintsAllRoutes) {
    const auto a = file("a.txt", "0\n1\n");
    const auto r = run({"mu", "--group", "Z2^2", "--A", a, "--B", a, "--C", a});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("direct: 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("convolution: 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("fourier: 4\n"), std::string::npos);

    const auto j = run({"--format", "json", "mu", "--group", "Z2^2", "--A", a, "--B", a, "--C", a});
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["direct"], 4);
    EXPECT_EQ(doc["convolution"], 4);
    EXPECT_EQ(doc["fourier"], 4);
}

TEST_F(CliTest, MuRejectsOutOfRangeIndexWithFileAndLine) {
    const auto a = file("a.txt", "0\n1\n");
    const auto bad = file("bad.txt", "# comment\n2\n4\n");
    const auto r = run({"mu", "--group", "Z2^2", "--A", a, "--B", bad, "--C", a});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(bad + ":3:"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"bounds", "--group", "Z2^4"}).code, 1);
    EXPECT_EQ(run({"bounds", "--m", "3"}).code, 1);
    EXPECT_EQ(run({"bounds", "--group", "Z2^4", "--m", "3", "--bogus"}).code, 1);
    EXPECT_EQ(run({"bounds", "--group", "Z(1)", "--m", "3"}).code, 1);
    EXPECT_EQ(run({"bounds", "--group", "Z2^4", "--m", "17"}).code, 1);
    EXPECT_EQ(run({"--format", "xml", "bounds", "--group", "Z2^4", "--m", "3"}).code, 1);
    EXPECT_EQ(run({"sample", "--group", "Z2^2", "--m", "5"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, BoundsReport) {
    const auto r = run({"bounds", "--group", "Z2^16", "--m", "256"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("main_bound: 54818.2989968\n"), std::string::npos) << r.out;

    const auto j = run({"--format", "json", "bounds", "--group", "Z2^16", "--m", "256", "--mB", "16384", "--mC", "16384",
                        "--alon-constant", "2"});
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_TRUE(doc["alon_bound"].is_null());
    EXPECT_TRUE(doc["alon_constant_unknown"].get<bool>());
    EXPECT_EQ(doc["mC"], 16384);
}

TEST_F(CliTest, SpectrumReport) {
    const auto a = file("a.txt", "0\n1\n");
    const auto j = run({"--format", "json", "spectrum", "--group", "Z2^2", "--A", a});
    EXPECT_EQ(j.code, 0) << j.err;
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_DOUBLE_EQ(doc["max_nonprincipal"].get<double>(), 0.5);
    EXPECT_EQ(doc["argmax"], 2);
    EXPECT_TRUE(doc.contains("hayes_bound"));
}

TEST_F(CliTest, MaximizeAndOracle) {
    const auto a = file("a.txt", "0\n1\n");
    const auto h = run({"--format", "json", "--seed", "3", "maximize", "--group", "Z2^2", "--A", a, "--restarts", "4"});
    EXPECT_EQ(h.code, 0) << h.err;
    auto doc = nlohmann::json::parse(h.out);
    EXPECT_EQ(doc["count"], 4);
    EXPECT_FALSE(doc["exact"].get<bool>());
    EXPECT_EQ(doc["B"].size(), 2U);

    const auto o = run({"--format", "json", "oracle", "--group", "Z2^2", "--A", a, "--k", "2"});
    doc = nlohmann::json::parse(o.out);
    EXPECT_EQ(doc["count"], 4);
    EXPECT_TRUE(doc["exact"].get<bool>());

    const auto big = file("big.txt", "1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n");
    const auto refused = run({"oracle", "--group", "Z2^12", "--A", big});
    EXPECT_EQ(refused.code, 2);
    EXPECT_NE(refused.err.find("alternating_maximize"), std::string::npos);
}

TEST_F(CliTest, SampleWritesReadableSubsetFile) {
    const auto out = path("s.txt");
    const auto r = run({"--seed", "11", "--out", out, "sample", "--group", "Z(5)xZ(5)", "--m", "7"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const auto again = run({"--seed", "11", "sample", "--group", "Z(5)xZ(5)", "--m", "7"});
    EXPECT_EQ(slurp(out), again.out);
    const auto mu = run({"mu", "--group", "Z(5)xZ(5)", "--A", out, "--B", out, "--C", out});
    EXPECT_EQ(mu.code, 0) << mu.err;

    const auto rep = run({"--seed", "1", "sample", "--group", "Z(3)", "--m", "9", "--replacement"});
    EXPECT_EQ(rep.code, 0);
    EXPECT_EQ(std::count(rep.out.begin(), rep.out.end(), '\n'), 10);
}

TEST_F(CliTest, ExperimentCsvAndJson) {
    const auto cfg = file("cfg.json", R"({"group": "Z2^8", "m": 16, "trials": 3, "master_seed": 5, "restarts": 3})");
    const auto csv = run({"experiment", "--config", cfg});
    EXPECT_EQ(csv.code, 0) << csv.err;
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);

    const auto out = path("r.json");
    const auto js = run({"--format", "json", "--out", out, "experiment", "--config", cfg, "--threads", "2"});
    EXPECT_EQ(js.code, 0) << js.err;
    const auto doc = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(doc["schema_version"], "mu-lab/1");
    EXPECT_EQ(doc["meta"]["group"], "Z2^8");
    EXPECT_EQ(doc["records"].size(), 3U);

    const auto cfg_out = file("cfg2.json", R"({"group": "Z2^8", "m": 16, "trials": 2, "restarts": 2,
        "output": {"path": ")" + path("from_cfg.csv") + R"(", "format": "csv"}})");
    EXPECT_EQ(run({"experiment", "--config", cfg_out}).code, 0);
    EXPECT_TRUE(fs::exists(path("from_cfg.csv")));

    EXPECT_EQ(run({"experiment", "--config", file("bad.json", R"({"group": "Z2^8", "trials": 3})")}).code, 1);
    EXPECT_EQ(run({"experiment", "--config", file("bad2.json", "{not json")}).code, 2);
    EXPECT_EQ(run({"experiment", "--config", path("missing.json")}).code, 2);
}
