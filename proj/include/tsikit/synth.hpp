#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tsikit/barcode.hpp"
#include "tsikit/rng.hpp"

namespace tsikit {

// Outlier bounding box; the intertwined configuration fills it exactly.
inline constexpr double kOutlierXMin = -1.75;
inline constexpr double kOutlierXMax = 1.75;
inline constexpr double kOutlierYMin = -1.0;
inline constexpr double kOutlierYMax = 1.0;

// Disjoint pair: radii 1 and 1/4, sampled 4:1, far enough apart that no edge
// bridges them below the 2.0 connectivity cap.
inline constexpr double kDisjointLargeRadius = 1.0;
inline constexpr double kDisjointSmallRadius = 0.25;
inline constexpr std::array<double, 2> kDisjointLargeCenter = {-2.0, 0.0};
inline constexpr std::array<double, 2> kDisjointSmallCenter = {2.0, 0.0};
inline constexpr double kDisjointMaxRadius = 2.0;

// Intertwined pair: equal unit radii, overlapping, so a third cycle appears at
// the intersection.
inline constexpr double kIntertwinedRadius = 1.0;
inline constexpr std::array<double, 2> kIntertwinedLeftCenter = {-0.75, 0.0};
inline constexpr std::array<double, 2> kIntertwinedRightCenter = {0.75, 0.0};

PointCloud circle_equidistant(double r, std::size_t n,
                              std::array<double, 2> center = {0.0, 0.0});

PointCloud circle_uniform(double r, std::size_t n, std::array<double, 2> center,
                          RngSeed seed);

// Per-coordinate centered normal perturbation with standard deviation sigma.
PointCloud add_gaussian_noise(const PointCloud& pc, double sigma, RngSeed seed);

// Appends round(base_n * r) points uniform on the outlier rectangle.
PointCloud add_uniform_outliers(const PointCloud& pc, double r, std::size_t base_n,
                                RngSeed seed);

struct GbmParams {
    double mu = 0.0;
    double sigma = 0.1;
    double s0 = 1.0;
    double dt = 1.0 / 2500.0;
    std::size_t steps = 250;
};

// Exact log-Euler scheme: distributionally exact at grid points, always positive.
// Returns steps + 1 values starting at s0.
std::vector<double> gbm_path(const GbmParams& params, RngSeed seed);

// Delay embedding: point i = (s_i, s_{i+tau}, ..., s_{i+(dim-1)tau}).
PointCloud takens_embed(const std::vector<double>& series, std::size_t dim,
                        std::size_t tau);

// n_large equidistant points on the large circle, round(n_large / 4) on the small.
PointCloud disjoint_circles_equidistant(std::size_t n_large);
PointCloud disjoint_circles_uniform(std::size_t n_large, RngSeed seed);

// per_circle points on each of the two intersecting unit circles.
PointCloud intertwined_circles_equidistant(std::size_t per_circle);
PointCloud intertwined_circles_uniform(std::size_t per_circle, RngSeed seed);

}  // namespace tsikit
