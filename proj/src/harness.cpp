#include "tsikit/harness.hpp"

#include <array>
#include <cmath>
#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>

#include "tsikit/barcode.hpp"
#include "tsikit/io.hpp"
#include "tsikit/numeric.hpp"
#include "tsikit/rips.hpp"
#include "tsikit/summary_report.hpp"
#include "tsikit/synth.hpp"

namespace tsikit {

namespace {

const std::array<std::string, 5> kStatNames = {"tsi", "tsigi", "entropy", "cvtsi",
                                               "cvtsi_over_n"};
const std::array<std::string, 7> kKindNames = {
    "disjoint_circles", "intertwined_circles", "sampled_circles", "gaussian_noise",
    "uniform_noise",    "gbm_volatility",      "gbm_drift"};

// Role salts for per-trial substreams.
constexpr std::uint64_t kSampleStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
constexpr std::uint64_t kOutlierStream = 3;
constexpr std::uint64_t kPathStream = 4;

std::size_t grid_count(double v, const char* what) {
    if (!(v > 0.0) || v != std::floor(v))
        throw std::invalid_argument(std::string(what) + ": grid values must be positive integers");
    return static_cast<std::size_t>(v);
}

PointCloud trial_cloud(const ExperimentConfig& cfg, double v, RngSeed trial_seed,
                       std::optional<double>& max_radius) {
    switch (cfg.kind) {
        case ExperimentKind::DisjointCircles:
            max_radius = kDisjointMaxRadius;
            return disjoint_circles_equidistant(grid_count(v, "disjoint_circles"));
        case ExperimentKind::SampledCircles:
            max_radius = kDisjointMaxRadius;
            return disjoint_circles_uniform(grid_count(v, "sampled_circles"),
                                            trial_seed.derive(kSampleStream));
        case ExperimentKind::IntertwinedCircles:
            return intertwined_circles_equidistant(grid_count(v, "intertwined_circles"));
        case ExperimentKind::GaussianNoise: {
            PointCloud base =
                intertwined_circles_uniform(100, trial_seed.derive(kSampleStream));
            return add_gaussian_noise(base, v, trial_seed.derive(kNoiseStream));
        }
        case ExperimentKind::UniformNoise: {
            PointCloud base =
                intertwined_circles_uniform(50, trial_seed.derive(kSampleStream));
            return add_uniform_outliers(base, v, 100, trial_seed.derive(kOutlierStream));
        }
        case ExperimentKind::GbmVolatility: {
            GbmParams params;
            params.sigma = v;
            return takens_embed(gbm_path(params, trial_seed.derive(kPathStream)), 3, 3);
        }
        case ExperimentKind::GbmDrift: {
            GbmParams params;
            params.mu = v;
            return takens_embed(gbm_path(params, trial_seed.derive(kPathStream)), 3, 3);
        }
    }
    throw std::logic_error("trial_cloud: unreachable");
}

std::optional<double> extract(const SummaryReport& r, Statistic s) {
    switch (s) {
        case Statistic::Tsi: return r.tsi;
        case Statistic::Tsigi: return r.tsigi;
        case Statistic::Entropy: return r.entropy;
        case Statistic::Cvtsi: return r.cvtsi;
        case Statistic::CvtsiOverN: return r.cvtsi_over_n;
    }
    throw std::logic_error("extract: unreachable");
}

}  // namespace

const std::string& statistic_name(Statistic s) {
    return kStatNames[static_cast<std::size_t>(s)];
}

Statistic parse_statistic(const std::string& name) {
    for (std::size_t i = 0; i < kStatNames.size(); ++i)
        if (kStatNames[i] == name) return static_cast<Statistic>(i);
    throw std::invalid_argument("unknown statistic: " + name);
}

const std::string& experiment_name(ExperimentKind k) {
    return kKindNames[static_cast<std::size_t>(k)];
}

ExperimentKind parse_experiment(const std::string& name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name) return static_cast<ExperimentKind>(i);
    throw std::invalid_argument("unknown experiment: " + name);
}

std::vector<double> default_grid(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::DisjointCircles:
        case ExperimentKind::IntertwinedCircles:
        case ExperimentKind::SampledCircles:
            return {24, 48, 96};
        case ExperimentKind::GaussianNoise:
            return {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
        case ExperimentKind::UniformNoise:
            return {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
        case ExperimentKind::GbmVolatility:
            return {0.05, 0.1, 0.2, 0.4, 0.8};
        case ExperimentKind::GbmDrift:
            return {-0.2, -0.1, 0.0, 0.1, 0.2};
    }
    throw std::logic_error("default_grid: unreachable");
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
    if (!j.contains("name")) throw std::invalid_argument("experiment config needs a name");

    ExperimentConfig cfg;
    cfg.kind = parse_experiment(j.at("name").get<std::string>());
    if (j.contains("parameter_grid"))
        cfg.grid = j.at("parameter_grid").get<std::vector<double>>();
    else
        cfg.grid = default_grid(cfg.kind);
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("seed")) cfg.seed = RngSeed{j.at("seed").get<std::uint64_t>()};
    if (j.contains("statistics")) {
        for (const auto& s : j.at("statistics"))
            cfg.statistics.push_back(parse_statistic(s.get<std::string>()));
    }
    if (j.contains("degree")) cfg.degree = j.at("degree").get<int>();

    if (cfg.grid.empty()) throw std::invalid_argument("experiment grid must be nonempty");
    if (cfg.trials < 1) throw std::invalid_argument("experiment trials must be >= 1");
    if (cfg.degree < 0 || cfg.degree > 1)
        throw std::invalid_argument("experiment degree must be 0 or 1");
    return cfg;
}

Aggregate aggregate(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("aggregate: empty input");
    KahanAccumulator sum;
    for (double v : values) sum.add(v);
    const double mean = sum.value() / static_cast<double>(values.size());
    double sq = 0.0;
    if (values.size() >= 2) {
        KahanAccumulator dev;
        for (double v : values) dev.add((v - mean) * (v - mean));
        sq = std::sqrt(dev.value() / static_cast<double>(values.size() - 1));
    }
    return {mean, sq, values.size()};
}

std::vector<CurvePoint> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.grid.empty()) throw std::invalid_argument("experiment grid must be nonempty");
    if (cfg.trials < 1) throw std::invalid_argument("experiment trials must be >= 1");
    if (cfg.degree < 0 || cfg.degree > 1)
        throw std::invalid_argument("experiment degree must be 0 or 1");

    std::vector<Statistic> stats = cfg.statistics;
    if (stats.empty())
        stats = {Statistic::Tsi, Statistic::Tsigi, Statistic::Entropy, Statistic::Cvtsi,
                 Statistic::CvtsiOverN};

    const RngSeed kind_seed = cfg.seed.derive(static_cast<std::uint64_t>(cfg.kind));

    std::vector<CurvePoint> out;
    for (double v : cfg.grid) {
        std::vector<std::vector<double>> samples(stats.size());
        for (int t = 0; t < cfg.trials; ++t) {
            const RngSeed trial_seed = kind_seed.derive(static_cast<std::uint64_t>(t));
            std::optional<double> max_radius;
            const PointCloud cloud = trial_cloud(cfg, v, trial_seed, max_radius);
            auto diagram = rips_persistence(cloud, cfg.degree >= 1 ? 1 : 0, max_radius);
            const SummaryReport report = summarize(diagram.at(cfg.degree), cfg.degree, 1);
            for (std::size_t s = 0; s < stats.size(); ++s)
                if (const auto value = extract(report, stats[s])) samples[s].push_back(*value);
        }
        for (std::size_t s = 0; s < stats.size(); ++s) {
            CurvePoint point;
            point.parameter = v;
            point.statistic = stats[s];
            point.skipped = cfg.trials - static_cast<int>(samples[s].size());
            if (!samples[s].empty()) {
                const Aggregate agg = aggregate(samples[s]);
                point.mean = agg.mean;
                point.stddev = agg.stddev;
                point.trials = static_cast<int>(agg.count);
            }
            out.push_back(point);
        }
    }
    return out;
}

std::string curve_csv(ExperimentKind kind, std::span<const CurvePoint> points) {
    std::string csv = "experiment,parameter,statistic,mean,std,trials,skipped\n";
    for (const CurvePoint& p : points) {
        csv += experiment_name(kind);
        csv.push_back(',');
        csv += format_double(p.parameter);
        csv.push_back(',');
        csv += statistic_name(p.statistic);
        csv.push_back(',');
        if (p.trials > 0) {
            csv += format_double(p.mean);
            csv.push_back(',');
            csv += format_double(p.stddev);
        } else {
            csv.push_back(',');
        }
        csv.push_back(',');
        csv += std::to_string(p.trials);
        csv.push_back(',');
        csv += std::to_string(p.skipped);
        csv.push_back('\n');
    }
    return csv;
}

}  // namespace tsikit
