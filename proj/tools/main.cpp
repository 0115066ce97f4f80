#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsikit/barcode.hpp"
#include "tsikit/entropy.hpp"
#include "tsikit/harness.hpp"
#include "tsikit/incremental.hpp"
#include "tsikit/io.hpp"
#include "tsikit/metrics.hpp"
#include "tsikit/rips.hpp"
#include "tsikit/rng.hpp"
#include "tsikit/summaries.hpp"
#include "tsikit/summary_report.hpp"
#include "tsikit/synth.hpp"

namespace {

using namespace tsikit;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Picks the requested degree, or the only one present; errors name the options.
int pick_degree(const std::map<int, Barcode>& diagrams, std::optional<int> requested) {
    std::string present;
    for (const auto& [d, b] : diagrams) {
        if (!present.empty()) present += ", ";
        present += std::to_string(d);
    }
    if (requested) {
        if (diagrams.count(*requested)) return *requested;
        throw std::domain_error("degree " + std::to_string(*requested) +
                                " not present in file (present: " +
                                (present.empty() ? "none" : present) + ")");
    }
    if (diagrams.size() == 1) return diagrams.begin()->first;
    throw std::domain_error("file holds several degrees (" + present +
                            "); choose one with --degree");
}

// ---- stats ----------------------------------------------------------------

struct StatsOpts {
    std::string file;
    std::string out;
    int degree = -1;
    bool degree_set = false;
    int moments = 3;
    bool csv = false;
    bool log2 = false;
};

void run_stats(const StatsOpts& o) {
    const auto diagrams = load_diagram(o.file);
    std::vector<SummaryReport> reports;
    if (o.degree_set) {
        const int d = pick_degree(diagrams, o.degree);
        reports.push_back(summarize(diagrams.at(d), d, o.moments));
    } else {
        for (const auto& [d, b] : diagrams) reports.push_back(summarize(b, d, o.moments));
    }
    if (o.log2)
        for (auto& r : reports) r = in_bits(r);

    std::string text;
    if (o.csv) {
        text = report_csv_header(o.moments);
        for (const auto& r : reports) text += report_csv_row(r);
    } else if (o.degree_set) {
        text = report_json(reports.front());
    } else {
        text = report_json(reports);
    }
    write_output(o.out, text);
}

// ---- ph -------------------------------------------------------------------

struct PhOpts {
    std::string file;
    std::string out;
    int max_dim = 1;
    double max_radius = -1.0;  // negative means enclosing-radius default
};

void run_ph(const PhOpts& o) {
    const PointCloud cloud = load_point_cloud(o.file);
    std::optional<double> radius;
    if (o.max_radius >= 0.0) radius = o.max_radius;
    write_output(o.out, diagram_csv(rips_persistence(cloud, o.max_dim, radius)));
}

// ---- gen ------------------------------------------------------------------

struct GenCommon {
    std::string out;
    std::uint64_t seed = 0;
};

// ---- experiment -----------------------------------------------------------

struct ExperimentOpts {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void run_experiment_cmd(const ExperimentOpts& o) {
    ExperimentConfig cfg = ExperimentConfig::from_json(read_file(o.config));
    if (o.seed_set) cfg.seed = RngSeed{o.seed};
    const auto points = run_experiment(cfg);
    write_output(o.out, curve_csv(cfg.kind, points));
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
    std::vector<std::string> files;
    std::vector<std::uint64_t> random;  // {bars, trials}
    std::string bound;
    std::string out;
    std::uint64_t seed = 0;
    int degree = -1;
    bool degree_set = false;
};

const std::vector<std::string> kBoundNames = {
    "wasserstein_p2", "wasserstein_pinf", "popoviciu",  "bottleneck_equal_n",
    "cvtsi_stability", "tsi_insert",      "tsi_delete", "cvtsi_insert"};

struct VerifySink {
    std::string filter;
    std::string text;
    bool all_hold = true;

    bool wants(const std::string& name) const { return filter.empty() || filter == name; }

    void record(const std::string& name, double lhs, double rhs, bool holds) {
        nlohmann::ordered_json j;
        j["bound"] = name;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["holds"] = holds;
        text += j.dump();
        text.push_back('\n');
        all_hold = all_hold && holds;
    }

    void record(const std::string& name, const BoundCheck& c) {
        record(name, c.lhs, c.rhs, c.holds);
    }
};

void check_single(VerifySink& sink, const Barcode& b) {
    if (sink.wants("wasserstein_p2"))
        sink.record("wasserstein_p2", check_tsi_empty_bound(b, 2.0));
    if (sink.wants("wasserstein_pinf"))
        sink.record("wasserstein_pinf",
                    check_tsi_empty_bound(b, std::numeric_limits<double>::infinity()));
    if (sink.wants("popoviciu")) sink.record("popoviciu", check_popoviciu_bound(b));
}

void check_pair(VerifySink& sink, const Barcode& b1, const Barcode& b2) {
    if (sink.wants("bottleneck_equal_n"))
        sink.record("bottleneck_equal_n", check_equal_cardinality_bound(b1, b2));
    if (sink.wants("cvtsi_stability"))
        sink.record("cvtsi_stability", check_cvtsi_stability_bound(b1, b2));
}

// Formula checks compare the one-step update against from-scratch recomputation;
// a record holds when the gap stays within 1e-10 relative.
void check_incremental(VerifySink& sink, const std::vector<double>& lifetimes,
                       CounterRng& rng) {
    const RunningStats stats = RunningStats::from_lifetimes(lifetimes);
    const double ell = 2.0 * rng.next_open();
    const auto tol = [](double exact) { return 1e-10 * std::max(1.0, std::fabs(exact)); };

    if (sink.wants("tsi_insert")) {
        std::vector<double> grown = lifetimes;
        grown.push_back(ell);
        const double exact = tsi(Barcode::from_lifetimes(grown));
        const double gap = std::fabs(tsi_after_insert(stats, ell) - exact);
        sink.record("tsi_insert", gap, tol(exact), gap <= tol(exact));
    }
    if (sink.wants("tsi_delete")) {
        const std::size_t j =
            static_cast<std::size_t>(rng.next_unit() * static_cast<double>(lifetimes.size()));
        std::vector<double> shrunk = lifetimes;
        shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(j));
        const double exact = tsi(Barcode::from_lifetimes(shrunk));
        const double gap = std::fabs(tsi_after_delete(stats, lifetimes[j]) - exact);
        sink.record("tsi_delete", gap, tol(exact), gap <= tol(exact));
    }
    if (sink.wants("cvtsi_insert")) {
        std::vector<double> grown = lifetimes;
        grown.push_back(ell);
        const double exact = cvtsi(Barcode::from_lifetimes(grown));
        const double gap = std::fabs(cvtsi_after_insert(stats, ell) - exact);
        sink.record("cvtsi_insert", gap, tol(exact), gap <= tol(exact));
    }
}

int run_verify(const VerifyOpts& o) {
    if (!o.bound.empty() &&
        std::find(kBoundNames.begin(), kBoundNames.end(), o.bound) == kBoundNames.end()) {
        std::string known;
        for (const auto& n : kBoundNames) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        throw std::invalid_argument("unknown bound '" + o.bound + "' (known: " + known + ")");
    }

    VerifySink sink;
    sink.filter = o.bound;

    if (!o.random.empty()) {
        if (o.random.size() != 2)
            throw std::invalid_argument("--random takes two values: bars and trials");
        const std::uint64_t bars = o.random[0];
        const std::uint64_t trials = o.random[1];
        if (bars < 2) throw std::invalid_argument("--random needs at least 2 bars");
        if (trials < 1) throw std::invalid_argument("--random needs at least 1 trial");

        const RngSeed root = RngSeed{o.seed}.derive(100);
        for (std::uint64_t t = 0; t < trials; ++t) {
            CounterRng rng(root.derive(t));
            std::vector<double> l1(bars);
            std::vector<double> l2(bars);
            for (auto& v : l1) v = 2.0 * rng.next_open();
            // Nearby second diagram keeps the pair bounds in their tight regime.
            for (std::uint64_t i = 0; i < bars; ++i)
                l2[i] = l1[i] * (0.95 + 0.1 * rng.next_unit());
            const Barcode b1 = Barcode::from_lifetimes(l1);
            const Barcode b2 = Barcode::from_lifetimes(l2);
            check_single(sink, b1);
            check_pair(sink, b1, b2);
            check_incremental(sink, l1, rng);
        }
    } else if (!o.files.empty()) {
        std::optional<int> degree;
        if (o.degree_set) degree = o.degree;
        const auto d1 = load_diagram(o.files[0]);
        const Barcode& b1 = d1.at(pick_degree(d1, degree));
        check_single(sink, b1);
        if (o.files.size() == 2) {
            const auto d2 = load_diagram(o.files[1]);
            const Barcode& b2 = d2.at(pick_degree(d2, degree));
            check_pair(sink, b1, b2);
        }
    } else {
        throw std::invalid_argument("verify needs a diagram file or --random");
    }

    write_output(o.out, sink.text);
    return sink.all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistence barcode summary statistics"};
    app.require_subcommand(1);
    int exit_code = 0;

    // stats
    StatsOpts stats_opts;
    auto* stats_cmd = app.add_subcommand("stats", "Summary statistics of a diagram file");
    stats_cmd->add_option("file", stats_opts.file, "Diagram CSV")->required();
    auto* degree_opt =
        stats_cmd->add_option("--degree", stats_opts.degree, "Homology degree to report");
    stats_cmd->add_option("--moments", stats_opts.moments, "Number of moments M_1..M_K")
        ->check(CLI::PositiveNumber);
    stats_cmd->add_flag("--csv", stats_opts.csv, "CSV output instead of JSON");
    stats_cmd->add_flag("--log2", stats_opts.log2, "Entropies in bits instead of nats");
    stats_cmd->add_option("-o,--output", stats_opts.out, "Output path (default stdout)");
    stats_cmd->callback([&] {
        stats_opts.degree_set = degree_opt->count() > 0;
        run_stats(stats_opts);
    });

    // ph
    PhOpts ph_opts;
    auto* ph_cmd = app.add_subcommand("ph", "Vietoris-Rips persistence of a point cloud");
    ph_cmd->add_option("file", ph_opts.file, "Point cloud CSV")->required();
    ph_cmd->add_option("--max-dim", ph_opts.max_dim, "Top homology degree (0 or 1)")
        ->check(CLI::Range(0, 1));
    ph_cmd->add_option("--max-radius", ph_opts.max_radius,
                       "Filtration cutoff (default: enclosing radius)")
        ->check(CLI::NonNegativeNumber);
    ph_cmd->add_option("-o,--output", ph_opts.out, "Output path (default stdout)");
    ph_cmd->callback([&] { run_ph(ph_opts); });

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Synthetic point clouds and series");
    gen_cmd->require_subcommand(1);

    struct CircleOpts : GenCommon {
        std::size_t n = 100;
        double radius = 1.0;
        double cx = 0.0;
        double cy = 0.0;
        bool uniform = false;
    } circle_opts;
    auto* circle_cmd = gen_cmd->add_subcommand("circle", "Points on a circle");
    circle_cmd->add_option("--n", circle_opts.n, "Point count")->required();
    circle_cmd->add_option("--radius", circle_opts.radius, "Radius");
    circle_cmd->add_option("--cx", circle_opts.cx, "Center x");
    circle_cmd->add_option("--cy", circle_opts.cy, "Center y");
    circle_cmd->add_flag("--uniform", circle_opts.uniform,
                         "Uniform random angles instead of equidistant");
    circle_cmd->add_option("--seed", circle_opts.seed, "RNG seed (uniform mode)");
    circle_cmd->add_option("-o,--output", circle_opts.out, "Output path (default stdout)");
    circle_cmd->callback([&] {
        const std::array<double, 2> center = {circle_opts.cx, circle_opts.cy};
        const PointCloud pc =
            circle_opts.uniform
                ? circle_uniform(circle_opts.radius, circle_opts.n, center,
                                 RngSeed{circle_opts.seed})
                : circle_equidistant(circle_opts.radius, circle_opts.n, center);
        write_output(circle_opts.out, point_cloud_csv(pc));
    });

    struct PairOpts : GenCommon {
        std::size_t n = 96;
        bool uniform = false;
    } disjoint_opts, intertwined_opts;
    auto* disjoint_cmd =
        gen_cmd->add_subcommand("disjoint-circles", "Far circle pair, radii 1 and 1/4, 4:1 points");
    disjoint_cmd->add_option("--n", disjoint_opts.n, "Points on the large circle");
    disjoint_cmd->add_flag("--uniform", disjoint_opts.uniform, "Uniform random angles");
    disjoint_cmd->add_option("--seed", disjoint_opts.seed, "RNG seed (uniform mode)");
    disjoint_cmd->add_option("-o,--output", disjoint_opts.out, "Output path (default stdout)");
    disjoint_cmd->callback([&] {
        const PointCloud pc =
            disjoint_opts.uniform
                ? disjoint_circles_uniform(disjoint_opts.n, RngSeed{disjoint_opts.seed})
                : disjoint_circles_equidistant(disjoint_opts.n);
        write_output(disjoint_opts.out, point_cloud_csv(pc));
    });

    intertwined_opts.n = 100;
    auto* intertwined_cmd =
        gen_cmd->add_subcommand("intertwined-circles", "Overlapping unit circle pair");
    intertwined_cmd->add_option("--n", intertwined_opts.n, "Points per circle");
    intertwined_cmd->add_flag("--uniform", intertwined_opts.uniform, "Uniform random angles");
    intertwined_cmd->add_option("--seed", intertwined_opts.seed, "RNG seed (uniform mode)");
    intertwined_cmd->add_option("-o,--output", intertwined_opts.out,
                                "Output path (default stdout)");
    intertwined_cmd->callback([&] {
        const PointCloud pc = intertwined_opts.uniform
                                  ? intertwined_circles_uniform(intertwined_opts.n,
                                                                RngSeed{intertwined_opts.seed})
                                  : intertwined_circles_equidistant(intertwined_opts.n);
        write_output(intertwined_opts.out, point_cloud_csv(pc));
    });

    struct NoiseOpts : GenCommon {
        std::string input;
        double sigma = 0.0;
    } noise_opts;
    auto* noise_cmd = gen_cmd->add_subcommand("noise", "Gaussian perturbation of a cloud");
    noise_cmd->add_option("--input", noise_opts.input, "Point cloud CSV")->required();
    noise_cmd->add_option("--sigma", noise_opts.sigma, "Noise standard deviation")
        ->required()
        ->check(CLI::NonNegativeNumber);
    noise_cmd->add_option("--seed", noise_opts.seed, "RNG seed");
    noise_cmd->add_option("-o,--output", noise_opts.out, "Output path (default stdout)");
    noise_cmd->callback([&] {
        const PointCloud pc = load_point_cloud(noise_opts.input);
        write_output(noise_opts.out, point_cloud_csv(add_gaussian_noise(
                                         pc, noise_opts.sigma, RngSeed{noise_opts.seed})));
    });

    struct OutlierOpts : GenCommon {
        std::string input;
        double intensity = 0.0;
        std::size_t base_n = 100;
    } outlier_opts;
    auto* outlier_cmd =
        gen_cmd->add_subcommand("outliers", "Uniform outliers on the bounding rectangle");
    outlier_cmd->add_option("--input", outlier_opts.input, "Point cloud CSV")->required();
    outlier_cmd->add_option("--intensity", outlier_opts.intensity, "Intensity r in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    outlier_cmd->add_option("--base-n", outlier_opts.base_n,
                            "Outlier count is round(base_n * r)");
    outlier_cmd->add_option("--seed", outlier_opts.seed, "RNG seed");
    outlier_cmd->add_option("-o,--output", outlier_opts.out, "Output path (default stdout)");
    outlier_cmd->callback([&] {
        const PointCloud pc = load_point_cloud(outlier_opts.input);
        write_output(outlier_opts.out,
                     point_cloud_csv(add_uniform_outliers(pc, outlier_opts.intensity,
                                                          outlier_opts.base_n,
                                                          RngSeed{outlier_opts.seed})));
    });

    struct GbmOpts : GenCommon {
        GbmParams params;
    } gbm_opts;
    auto* gbm_cmd = gen_cmd->add_subcommand("gbm", "Geometric Brownian motion path");
    gbm_cmd->add_option("--mu", gbm_opts.params.mu, "Drift per unit time");
    gbm_cmd->add_option("--sigma", gbm_opts.params.sigma, "Volatility")
        ->check(CLI::NonNegativeNumber);
    gbm_cmd->add_option("--s0", gbm_opts.params.s0, "Start value")->check(CLI::PositiveNumber);
    gbm_cmd->add_option("--dt", gbm_opts.params.dt, "Time step")->check(CLI::PositiveNumber);
    gbm_cmd->add_option("--steps", gbm_opts.params.steps, "Step count");
    gbm_cmd->add_option("--seed", gbm_opts.seed, "RNG seed");
    gbm_cmd->add_option("-o,--output", gbm_opts.out, "Output path (default stdout)");
    gbm_cmd->callback([&] {
        write_output(gbm_opts.out, series_csv(gbm_path(gbm_opts.params, RngSeed{gbm_opts.seed})));
    });

    struct TakensOpts : GenCommon {
        std::string input;
        std::size_t dim = 3;
        std::size_t tau = 3;
    } takens_opts;
    auto* takens_cmd = gen_cmd->add_subcommand("takens", "Delay embedding of a series");
    takens_cmd->add_option("--input", takens_opts.input, "Series CSV")->required();
    takens_cmd->add_option("--dim", takens_opts.dim, "Embedding dimension");
    takens_cmd->add_option("--tau", takens_opts.tau, "Delay");
    takens_cmd->add_option("-o,--output", takens_opts.out, "Output path (default stdout)");
    takens_cmd->callback([&] {
        const auto series = load_series(takens_opts.input);
        write_output(takens_opts.out,
                     point_cloud_csv(takens_embed(series, takens_opts.dim, takens_opts.tau)));
    });

    // experiment
    ExperimentOpts exp_opts;
    auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo curve experiment");
    exp_cmd->add_option("config", exp_opts.config, "JSON config")->required();
    auto* exp_seed = exp_cmd->add_option("--seed", exp_opts.seed, "Seed override");
    exp_cmd->add_option("-o,--output", exp_opts.out, "Output path (default stdout)");
    exp_cmd->callback([&] {
        exp_opts.seed_set = exp_seed->count() > 0;
        run_experiment_cmd(exp_opts);
    });

    // verify
    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Bound and formula checks, JSONL output");
    verify_cmd->add_option("files", verify_opts.files, "One or two diagram CSVs")
        ->expected(0, 2);
    verify_cmd->add_option("--random", verify_opts.random,
                           "Random mode: bars per diagram, trial count")
        ->expected(2);
    verify_cmd->add_option("--bound", verify_opts.bound, "Check only this bound");
    verify_cmd->add_option("--seed", verify_opts.seed, "RNG seed (random mode)");
    auto* verify_degree =
        verify_cmd->add_option("--degree", verify_opts.degree, "Degree to read from files");
    verify_cmd->add_option("-o,--output", verify_opts.out, "Output path (default stdout)");
    verify_cmd->callback([&] {
        verify_opts.degree_set = verify_degree->count() > 0;
        exit_code = run_verify(verify_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
