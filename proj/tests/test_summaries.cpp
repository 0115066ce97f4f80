#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "tsikit/barcode.hpp"
#include "tsikit/summaries.hpp"

using namespace tsikit;

namespace {
constexpr double kTight = 1e-12;

Barcode bc(const std::vector<double>& lifetimes) { return Barcode::from_lifetimes(lifetimes); }
}  // namespace

TEST_CASE("tsi hand values") {
    CHECK(tsi(bc({1.0, 1.0, 1.0, 1.0})) == 0.0);
    CHECK(tsi(bc({0.0, 0.0, 0.0, 4.0})) == 4.0);
    CHECK(tsi(bc({1.0, 2.0})) == 0.5);
    CHECK(tsi(bc({1.0, 2.0, 3.0})) == 1.0);
    CHECK(tsi(bc({})) == 0.0);
    CHECK(tsi(bc({7.0})) == 0.0);
}

TEST_CASE("all-equal detection tolerates lifetime round-off") {
    CHECK(all_lifetimes_equal(bc({1.0, 1.0 + 1e-13})));
    CHECK_FALSE(all_lifetimes_equal(bc({1.0, 1.0 + 1e-11})));
    CHECK(tsi(bc({1.0, 1.0 + 1e-13})) == 0.0);  // clipped to the exact extremal value
    // Tolerance scales with the mean: at mean ~1e6 a 1e-8 spread is still round-off.
    CHECK(all_lifetimes_equal(bc({1e6, 1e6 + 1e-8})));
}

TEST_CASE("tsi matches Welford on random multisets") {
    std::mt19937_64 rng(7101);
    std::uniform_int_distribution<std::size_t> size_dist(2, 40);
    for (int trial = 0; trial < 500; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, size_dist(rng));
        const double expected = oracles::welford_variance(ls);
        CHECK(tsi(bc(ls)) == doctest::Approx(expected).epsilon(kTight));
    }
}

TEST_CASE("tsi stays inside its attainable range") {
    std::mt19937_64 rng(7102);
    std::uniform_int_distribution<std::size_t> size_dist(2, 30);
    for (int trial = 0; trial < 500; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, size_dist(rng));
        const Barcode b = bc(ls);
        const auto [lo, hi] = tsi_bounds(b.n(), b.total_persistence());
        CHECK(lo == 0.0);
        const double v = tsi(b);
        CHECK(v >= 0.0);
        CHECK(v <= hi + kTight * std::max(1.0, hi));
    }
}

TEST_CASE("range endpoints are attained exactly") {
    // Uniform multiset: tsi == 0. Single spike {L,0,...,0}: tsi == L^2/n.
    for (std::size_t n : {2u, 3u, 5u, 17u}) {
        const double L = 3.0 * static_cast<double>(n);  // integral mean keeps sums exact
        std::vector<double> uniform(n, L / static_cast<double>(n));
        CHECK(tsi(bc(uniform)) == 0.0);

        std::vector<double> spike(n, 0.0);
        spike[0] = L;
        const auto [lo, hi] = tsi_bounds(n, L);
        CHECK(tsi(bc(spike)) == hi);
        CHECK(hi == L * L / static_cast<double>(n));
        CHECK(lo == 0.0);
    }
}

TEST_CASE("tsi_bounds rejects degenerate inputs") {
    CHECK_THROWS_AS(tsi_bounds(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tsi_bounds(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tsi_bounds(3, -1.0), std::invalid_argument);
    const auto [lo, hi] = tsi_bounds(4, 0.0);
    CHECK(lo == 0.0);
    CHECK(hi == 0.0);
}

TEST_CASE("scaling law tsi(c*b) == c^2 tsi(b)") {
    std::mt19937_64 rng(7103);
    std::uniform_real_distribution<double> c_dist(0.1, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, 12);
        const double c = c_dist(rng);
        const Barcode b = bc(ls);
        CHECK(tsi(scale(b, c)) == doctest::Approx(c * c * tsi(b)).epsilon(kTight));
    }
    const Barcode b = bc({1.0, 2.0});
    CHECK(tsi(scale(b, 0.0)) == 0.0);
    CHECK(scale(b, 2.0).bars()[0].death == 2.0);
    CHECK_THROWS_AS(scale(b, -1.0), std::invalid_argument);
}

TEST_CASE("shift law tsi(b + c) == tsi(b)") {
    std::mt19937_64 rng(7104);
    std::uniform_real_distribution<double> c_dist(-0.05, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, 9, 0.1, 2.0);
        const double c = c_dist(rng);
        const Barcode b = bc(ls);
        CHECK(tsi(shift_deaths(b, c)) == doctest::Approx(tsi(b)).epsilon(kTight));
    }
    // The shift must not push any death below its birth.
    const Barcode b = bc({1.0, 2.0});
    CHECK_THROWS_AS(shift_deaths(b, -1.5), std::invalid_argument);
    CHECK_NOTHROW(shift_deaths(b, -0.5));
}

TEST_CASE("tsigi hand values and rejections") {
    CHECK(tsigi(bc({1.0, 2.0})) == doctest::Approx(5.0 / 3.0).epsilon(kTight));
    CHECK(tsigi(bc({2.0, 2.0})) == doctest::Approx(2.0).epsilon(kTight));
    CHECK_THROWS_AS(tsigi(bc({})), std::domain_error);
    CHECK_THROWS_AS(tsigi(bc({0.0, 0.0})), std::domain_error);
}

TEST_CASE("tsigi is squared-lifetime mass over total persistence") {
    std::mt19937_64 rng(7105);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, 8, 0.01, 3.0);
        double s1 = 0.0;
        double s2 = 0.0;
        for (double l : ls) {
            s1 += l;
            s2 += l * l;
        }
        CHECK(tsigi(bc(ls)) == doctest::Approx(s2 / s1).epsilon(kTight));
    }
}

TEST_CASE("moment hierarchy") {
    const Barcode b = bc({1.0, 2.0, 4.0});
    CHECK(moment(b, 1) == b.mean_lifetime());
    CHECK(moment(b, 2) == doctest::Approx(tsigi(b)).epsilon(kTight));
    // S3/S2 = (1 + 8 + 64)/(1 + 4 + 16) = 73/21.
    CHECK(moment(b, 3) == doctest::Approx(73.0 / 21.0).epsilon(kTight));

    // Nondecreasing in k, converging to the max lifetime.
    double prev = moment(b, 1);
    for (int k = 2; k <= 40; ++k) {
        const double cur = moment(b, k);
        CHECK(cur >= prev - kTight);
        prev = cur;
    }
    CHECK(moment(b, 200) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("moments survive huge lifetimes via max factoring") {
    const Barcode b = bc({1e150, 2e150, 3e150});
    for (int k = 1; k <= 10; ++k) {
        const double m = moment(b, k);
        CHECK(std::isfinite(m));
        CHECK(m >= 1e150);
        CHECK(m <= 3e150);
    }
}

TEST_CASE("moment rejections") {
    CHECK_THROWS_AS(moment(bc({1.0}), 0), std::invalid_argument);
    CHECK_THROWS_AS(moment(bc({1.0}), -2), std::invalid_argument);
    CHECK_THROWS_AS(moment(bc({}), 1), std::domain_error);
    CHECK(moment(bc({0.0, 0.0}), 1) == 0.0);  // mean of all-zero lifetimes is fine
    CHECK_THROWS_AS(moment(bc({0.0, 0.0}), 2), std::domain_error);
}
