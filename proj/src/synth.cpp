#include "tsikit/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace tsikit {

namespace {

constexpr double kTwoPi = 6.283185307179586;

void append_circle_point(PointCloud& pc, double r, std::array<double, 2> center,
                         double angle) {
    const double xy[2] = {center[0] + r * std::cos(angle), center[1] + r * std::sin(angle)};
    pc.push_back(xy);
}

std::size_t quarter(std::size_t n) {
    return static_cast<std::size_t>(std::llround(static_cast<double>(n) / 4.0));
}

}  // namespace

PointCloud circle_equidistant(double r, std::size_t n, std::array<double, 2> center) {
    if (!(r > 0.0)) throw std::invalid_argument("circle_equidistant: radius must be positive");
    if (n < 3) throw std::invalid_argument("circle_equidistant: need at least 3 points");
    PointCloud pc(2);
    for (std::size_t k = 0; k < n; ++k)
        append_circle_point(pc, r, center, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    return pc;
}

PointCloud circle_uniform(double r, std::size_t n, std::array<double, 2> center,
                          RngSeed seed) {
    if (!(r > 0.0)) throw std::invalid_argument("circle_uniform: radius must be positive");
    if (n < 1) throw std::invalid_argument("circle_uniform: need at least 1 point");
    CounterRng rng(seed);
    PointCloud pc(2);
    for (std::size_t k = 0; k < n; ++k) append_circle_point(pc, r, center, kTwoPi * rng.next_unit());
    return pc;
}

PointCloud add_gaussian_noise(const PointCloud& pc, double sigma, RngSeed seed) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("add_gaussian_noise: sigma must be nonnegative");
    CounterRng rng(seed);
    PointCloud out(pc.dim());
    std::vector<double> xy(pc.dim());
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto p = pc.point(i);
        for (std::size_t k = 0; k < pc.dim(); ++k) xy[k] = p[k] + sigma * rng.next_normal();
        out.push_back(xy);
    }
    return out;
}

PointCloud add_uniform_outliers(const PointCloud& pc, double r, std::size_t base_n,
                                RngSeed seed) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("add_uniform_outliers: intensity must lie in [0, 1]");
    if (pc.dim() != 2)
        throw std::invalid_argument("add_uniform_outliers: expects a planar cloud");
    CounterRng rng(seed);
    PointCloud out = pc;
    const auto count =
        static_cast<std::size_t>(std::llround(static_cast<double>(base_n) * r));
    for (std::size_t k = 0; k < count; ++k) {
        const double xy[2] = {
            kOutlierXMin + (kOutlierXMax - kOutlierXMin) * rng.next_unit(),
            kOutlierYMin + (kOutlierYMax - kOutlierYMin) * rng.next_unit()};
        out.push_back(xy);
    }
    return out;
}

std::vector<double> gbm_path(const GbmParams& params, RngSeed seed) {
    if (!(params.sigma >= 0.0)) throw std::invalid_argument("gbm_path: sigma must be nonnegative");
    if (!(params.dt > 0.0)) throw std::invalid_argument("gbm_path: dt must be positive");
    if (!(params.s0 > 0.0)) throw std::invalid_argument("gbm_path: s0 must be positive");
    if (params.steps < 1) throw std::invalid_argument("gbm_path: steps must be positive");
    CounterRng rng(seed);
    const double drift = (params.mu - 0.5 * params.sigma * params.sigma) * params.dt;
    const double vol = params.sigma * std::sqrt(params.dt);
    std::vector<double> s;
    s.reserve(params.steps + 1);
    s.push_back(params.s0);
    for (std::size_t t = 0; t < params.steps; ++t)
        s.push_back(s.back() * std::exp(drift + vol * rng.next_normal()));
    return s;
}

PointCloud takens_embed(const std::vector<double>& series, std::size_t dim,
                        std::size_t tau) {
    if (dim < 2) throw std::invalid_argument("takens_embed: dimension must be at least 2");
    if (tau < 1) throw std::invalid_argument("takens_embed: delay must be at least 1");
    const std::size_t window = (dim - 1) * tau;
    if (series.size() < window + 1)
        throw std::invalid_argument("takens_embed: series shorter than one embedding window");
    PointCloud pc(dim);
    std::vector<double> xy(dim);
    for (std::size_t i = 0; i + window < series.size(); ++i) {
        for (std::size_t k = 0; k < dim; ++k) xy[k] = series[i + k * tau];
        pc.push_back(xy);
    }
    return pc;
}

PointCloud disjoint_circles_equidistant(std::size_t n_large) {
    PointCloud pc = circle_equidistant(kDisjointLargeRadius, n_large, kDisjointLargeCenter);
    const PointCloud small =
        circle_equidistant(kDisjointSmallRadius, quarter(n_large), kDisjointSmallCenter);
    for (std::size_t i = 0; i < small.size(); ++i) pc.push_back(small.point(i));
    return pc;
}

PointCloud disjoint_circles_uniform(std::size_t n_large, RngSeed seed) {
    PointCloud pc =
        circle_uniform(kDisjointLargeRadius, n_large, kDisjointLargeCenter, seed.derive(1));
    const PointCloud small = circle_uniform(kDisjointSmallRadius, quarter(n_large),
                                            kDisjointSmallCenter, seed.derive(2));
    for (std::size_t i = 0; i < small.size(); ++i) pc.push_back(small.point(i));
    return pc;
}

PointCloud intertwined_circles_equidistant(std::size_t per_circle) {
    PointCloud pc = circle_equidistant(kIntertwinedRadius, per_circle, kIntertwinedLeftCenter);
    const PointCloud right =
        circle_equidistant(kIntertwinedRadius, per_circle, kIntertwinedRightCenter);
    for (std::size_t i = 0; i < right.size(); ++i) pc.push_back(right.point(i));
    return pc;
}

PointCloud intertwined_circles_uniform(std::size_t per_circle, RngSeed seed) {
    PointCloud pc =
        circle_uniform(kIntertwinedRadius, per_circle, kIntertwinedLeftCenter, seed.derive(1));
    const PointCloud right = circle_uniform(kIntertwinedRadius, per_circle,
                                            kIntertwinedRightCenter, seed.derive(2));
    for (std::size_t i = 0; i < right.size(); ++i) pc.push_back(right.point(i));
    return pc;
}

}  // namespace tsikit
