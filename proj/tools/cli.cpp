#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mulab/bounds.hpp"
#include "mulab/counting.hpp"
#include "mulab/experiment.hpp"
#include "mulab/fourier.hpp"
#include "mulab/maximizer.hpp"
#include "mulab/report.hpp"
#include "mulab/sampler.hpp"

namespace mulab::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutFormat { text, json, csv };

struct Globals {
    std::string group;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
};

struct Options {
    std::string a, b, c;
    bool multiset = false;
    std::uint64_t m = 0;
    std::optional<std::uint64_t> m_b, m_c, k;
    double epsilon = 1.0;
    double alon_constant = 1.0;
    std::optional<double> h;
    std::uint64_t restarts = 20;
    std::uint64_t max_iters = 100;
    bool replacement = false;
    std::string config;
    int threads = 0;
    std::uint64_t dense_cap = kDefaultDenseCap;
};

OutFormat out_format(const Globals& g) {
    if (g.format == "json") return OutFormat::json;
    if (g.format == "csv") return OutFormat::csv;
    return OutFormat::text;
}

GroupSpec require_group(const Globals& g) {
    if (g.group.empty()) throw UsageError("--group is required for this subcommand");
    try {
        return parse_group_spec(g.group);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Subset load(const std::string& path, const GroupSpec& g, bool multiset) {
    return read_subset_file(path, g, multiset ? SubsetMode::multiset : SubsetMode::set);
}

std::string real(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

void emit_kv(std::ostream& out, OutFormat fmt, const json& j) {
    if (fmt == OutFormat::json) {
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        out << key << ": ";
        if (value.is_number_float()) {
            out << real(value.get<double>());
        } else if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) out << (i ? " " : "") << value[i].dump();
        } else {
            out << value.dump();
        }
        out << '\n';
    }
}

json witnesses(const MaximizeResult& r) {
    json j;
    j["count"] = r.count;
    j["exact"] = r.exact;
    j["iterations"] = r.iterations;
    j["restarts_used"] = r.restarts_used;
    j["B"] = std::vector<std::uint64_t>(r.b.elements().begin(), r.b.elements().end());
    j["C"] = std::vector<std::uint64_t>(r.c.elements().begin(), r.c.elements().end());
    return j;
}

int run_mu(const Globals& gl, const Options& o, std::ostream& out) {
    const GroupSpec g = require_group(gl);
    const TransformOptions topts{o.dense_cap};
    const Subset a = load(o.a, g, o.multiset);
    const Subset b = load(o.b, g, o.multiset);
    const Subset c = load(o.c, g, o.multiset);
    const auto direct = mu_direct(a, b, c);
    const auto conv = mu_convolution(a, b, c, topts);
    const auto four = mu_fourier(a, b, c, topts);
    if (direct.count != conv.count || direct.count != four.count) {
        throw std::runtime_error("routes disagree: direct=" + std::to_string(direct.count) +
                                 " convolution=" + std::to_string(conv.count) +
                                 " fourier=" + std::to_string(four.count));
    }
    json j;
    j["direct"] = direct.count;
    j["convolution"] = conv.count;
    j["fourier"] = four.count;
    j["fourier_residual"] = four.residual;
    emit_kv(out, out_format(gl), j);
    return kExitOk;
}

int run_spectrum(const Globals& gl, const Options& o, std::ostream& out) {
    const GroupSpec g = require_group(gl);
    const Subset a = load(o.a, g, o.multiset);
    const auto mc = max_nonprincipal_coeff(a, TransformOptions{o.dense_cap});
    const double bound =
        bounds::hayes_coeff_bound(static_cast<double>(g.order()), static_cast<double>(a.size()), o.epsilon);
    json j;
    j["max_nonprincipal"] = mc.value;
    j["argmax"] = mc.argmax;
    j["hayes_bound"] = bound;
    j["ratio"] = bound > 0.0 ? json(mc.value / bound) : json(nullptr);
    j["within_bound"] = mc.value <= bound;
    emit_kv(out, out_format(gl), j);
    return kExitOk;
}

int run_bounds(const Globals& gl, const Options& o, std::ostream& out) {
    const GroupSpec g = require_group(gl);
    bounds::BoundInputs in;
    in.n = g.order();
    in.m_a = o.m;
    in.m_b = o.m_b.value_or(o.m);
    in.m_c = o.m_c.value_or(in.m_b);
    in.epsilon = o.epsilon;
    in.h = o.h;
    in.alon_constant = o.alon_constant;
    try {
        in.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto r = bounds::evaluate(in);
    json j;
    j["N"] = in.n;
    j["mA"] = in.m_a;
    j["mB"] = in.m_b;
    j["mC"] = in.m_c;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["constant"] = r.constant;
    j["main_bound"] = r.main_bound;
    j["general_bound"] = r.general_bound;
    j["hayes_coeff_bound"] = r.hayes_coeff_bound;
    j["kiltz_bound"] = r.kiltz_bound;
    j["kiltz_in_regime"] = r.kiltz_in_regime;
    j["alon_bound"] = r.alon_bound ? json(*r.alon_bound) : json(nullptr);
    j["alon_constant_unknown"] = r.alon_constant_unknown;
    j["conjecture_curve"] = r.conjecture_curve;
    j["cubic_term_dominates"] = r.cubic_term_dominates;
    emit_kv(out, out_format(gl), j);
    return kExitOk;
}

int run_maximize(const Globals& gl, const Options& o, std::ostream& out, bool exact) {
    const GroupSpec g = require_group(gl);
    const Subset a = load(o.a, g, o.multiset);
    const std::uint64_t k = o.k.value_or(std::min(a.size(), g.order()));
    if (k < 1 || k > g.order()) throw UsageError("--k must lie in [1, N]");
    MaximizeResult r = [&] {
        if (exact) return exact_maximize(a, k);
        AlternatingOptions opts;
        opts.restarts = o.restarts;
        opts.seed = gl.seed;
        opts.max_iters = o.max_iters;
        return alternating_maximize(a, k, opts);
    }();
    json j = witnesses(r);
    if (!exact) j["note"] = "heuristic value: a lower bound on the maximum";
    emit_kv(out, out_format(gl), j);
    return kExitOk;
}

int run_sample(const Globals& gl, const Options& o, std::ostream& out) {
    const GroupSpec g = require_group(gl);
    if (o.m < 1 || (!o.replacement && o.m > g.order())) throw UsageError("--m must lie in [1, N] without replacement");
    const Subset s = sample_subset(g, o.m, gl.seed, o.replacement);
    if (out_format(gl) == OutFormat::json) {
        out << json{{"group", g.to_string()}, {"seed", gl.seed}, {"replacement", o.replacement},
                    {"elements", s.expanded()}}
                   .dump(2)
            << '\n';
    } else {
        out << "# " << g.to_string() << " m=" << o.m << " seed=" << gl.seed
            << (o.replacement ? " with replacement" : "") << '\n';
        write_subset(out, s);
    }
    return kExitOk;
}

int run_experiment(const Globals& gl, const Options& o, std::ostream& out, bool have_out) {
    ExperimentConfig config = [&] {
        try {
            return load_config(o.config);
        } catch (const std::invalid_argument& e) {
            throw UsageError(o.config + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(o.config + ": " + e.what());
        }
    }();
    if (!gl.group.empty()) config.group = require_group(gl);
    if (gl.format == "csv" || gl.format == "json") config.output_format = parse_report_format(gl.format);
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(o.config + ": " + e.what());
    }
    const auto records = run_trials(config, RunOptions{o.threads});
    if (!have_out && config.output_path) {
        emit_report(records, config, config.output_format, *config.output_path);
    } else {
        emit_report(records, config, config.output_format, out);
    }
    return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sum-triple counts, Fourier spectra and bound experiments over finite abelian groups", "mulab"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals gl;
    Options o;
    app.add_option("--group", gl.group, "Group spec, e.g. Z2^16 or Z(2)xZ(4)");
    app.add_option("--seed", gl.seed, "Random seed");
    app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", gl.out, "Write output to this file instead of stdout");
    app.add_option("--dense-cap", o.dense_cap, "Largest group order for dense vectors");

    auto* mu = app.add_subcommand("mu", "Count triples a = b + c by all three routes");
    mu->add_option("--A", o.a, "Subset file for A")->required();
    mu->add_option("--B", o.b, "Subset file for B")->required();
    mu->add_option("--C", o.c, "Subset file for C")->required();
    mu->add_flag("--multiset", o.multiset, "Allow repeated indices, counted with multiplicity");

    auto* spectrum = app.add_subcommand("spectrum", "Largest non-principal Fourier coefficient of 1_A");
    spectrum->add_option("--A", o.a, "Subset file for A")->required();
    spectrum->add_option("--epsilon", o.epsilon, "Hayes epsilon")->check(CLI::PositiveNumber);
    spectrum->add_flag("--multiset", o.multiset, "Allow repeated indices");

    auto* bnd = app.add_subcommand("bounds", "Evaluate bound formulas");
    bnd->add_option("--m", o.m, "|A|")->required();
    bnd->add_option("--mB", o.m_b, "|B| (default |A|)");
    bnd->add_option("--mC", o.m_c, "|C| (default |B|)");
    bnd->add_option("--epsilon", o.epsilon, "Hayes epsilon");
    bnd->add_option("--alon-constant", o.alon_constant, "Stand-in for the unknown constant in the Alon et al. bound");
    bnd->add_option("--slack", o.h, "Use 2*sqrt(2) + slack as the leading constant");

    auto* maximize = app.add_subcommand("maximize", "Alternating best-response lower bound on max mu(A, B, C)");
    maximize->add_option("--A", o.a, "Subset file for A")->required();
    maximize->add_option("--k", o.k, "Shore size (default |A|)");
    maximize->add_option("--restarts", o.restarts, "Random restarts")->check(CLI::PositiveNumber);
    maximize->add_option("--max-iters", o.max_iters, "Rounds per restart");
    maximize->add_flag("--multiset", o.multiset, "Allow repeated indices");

    auto* oracle = app.add_subcommand("oracle", "Exact max mu(A, B, C) by exhaustive search (small groups only)");
    oracle->add_option("--A", o.a, "Subset file for A")->required();
    oracle->add_option("--k", o.k, "Shore size (default |A|)");
    oracle->add_flag("--multiset", o.multiset, "Allow repeated indices");

    auto* sample = app.add_subcommand("sample", "Draw a random subset and print it as a subset file");
    sample->add_option("--m", o.m, "Subset size")->required();
    sample->add_flag("--replacement", o.replacement, "Draw with replacement");

    auto* experiment = app.add_subcommand("experiment", "Run Monte Carlo trials from a JSON config");
    experiment->add_option("--config", o.config, "Experiment config file")->required();
    experiment->add_option("--threads", o.threads, "Worker threads (0 = OpenMP default, 1 = serial)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "mulab: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!gl.out.empty()) {
        file.open(gl.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "mulab: cannot open " << gl.out << " for writing\n";
            return kExitRuntime;
        }
        sink = &file;
    }

    try {
        if (*mu) return run_mu(gl, o, *sink);
        if (*spectrum) return run_spectrum(gl, o, *sink);
        if (*bnd) return run_bounds(gl, o, *sink);
        if (*maximize) return run_maximize(gl, o, *sink, false);
        if (*oracle) return run_maximize(gl, o, *sink, true);
        if (*sample) return run_sample(gl, o, *sink);
        if (*experiment) return run_experiment(gl, o, *sink, !gl.out.empty());
    } catch (const UsageError& e) {
        err << "mulab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "mulab: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace mulab::cli
