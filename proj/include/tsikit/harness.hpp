#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsikit/rng.hpp"

namespace tsikit {

enum class Statistic { Tsi, Tsigi, Entropy, Cvtsi, CvtsiOverN };

enum class ExperimentKind {
    DisjointCircles,
    IntertwinedCircles,
    SampledCircles,
    GaussianNoise,
    UniformNoise,
    GbmVolatility,
    GbmDrift,
};

const std::string& statistic_name(Statistic s);
Statistic parse_statistic(const std::string& name);
const std::string& experiment_name(ExperimentKind k);
ExperimentKind parse_experiment(const std::string& name);

std::vector<double> default_grid(ExperimentKind k);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::DisjointCircles;
    std::vector<double> grid;
    int trials = 100;
    RngSeed seed{0};
    std::vector<Statistic> statistics;  // all five by default
    int degree = 1;

    // JSON object with fields name (required), parameter_grid, trials, seed,
    // statistics, degree; absent fields take the defaults above.
    static ExperimentConfig from_json(const std::string& text);
};

struct CurvePoint {
    double parameter = 0.0;
    Statistic statistic = Statistic::Tsi;
    double mean = 0.0;
    double stddev = 0.0;
    int trials = 0;   // trials that produced a defined value
    int skipped = 0;  // trials where the statistic was undefined
};

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;  // (n-1)-normalized, 0 for a single value
    std::size_t count = 0;
};

Aggregate aggregate(std::span<const double> values);  // requires count >= 1

// Runs trials sequentially in trial-index order; per-trial substreams come from
// seed.derive(kind).derive(trial), shared across grid values so curves compare
// the same draws (common random numbers). Undefined statistics are skipped and
// counted, never imputed.
std::vector<CurvePoint> run_experiment(const ExperimentConfig& cfg);

// Columns: experiment,parameter,statistic,mean,std,trials,skipped.
// All-skipped points leave mean/std empty.
std::string curve_csv(ExperimentKind kind, std::span<const CurvePoint> points);

}  // namespace tsikit
