#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "tsikit/barcode.hpp"
#include "tsikit/entropy.hpp"
#include "tsikit/summaries.hpp"

using namespace tsikit;

namespace {
constexpr double kTight = 1e-12;
constexpr double kRoundTrip = 1e-10;

Barcode bc(const std::vector<double>& lifetimes) { return Barcode::from_lifetimes(lifetimes); }
}  // namespace

TEST_CASE("weight vector sums to one and keeps proportions") {
    std::mt19937_64 rng(7201);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, 11, 0.01, 2.0);
        const auto w = weight_vector(bc(ls));
        REQUIRE(w.size() == ls.size());
        double total = 0.0;
        for (double p : w) {
            CHECK(p > 0.0);
            total += p;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(kTight));
        CHECK(w[1] / w[0] == doctest::Approx(ls[1] / ls[0]).epsilon(kTight));
    }
}

TEST_CASE("entropy hand values") {
    CHECK(persistent_entropy(bc({5.0})) == 0.0);  // exactly, including the sign
    CHECK(persistent_entropy(bc({1.0, 1.0})) ==
          doctest::Approx(std::log(2.0)).epsilon(kTight));
    const double expected = std::log(3.0) - (2.0 / 3.0) * std::log(2.0);
    CHECK(persistent_entropy(bc({1.0, 2.0})) == doctest::Approx(expected).epsilon(kTight));
    CHECK_THROWS_AS(persistent_entropy(bc({})), std::domain_error);
    CHECK_THROWS_AS(persistent_entropy(bc({0.0, 0.0})), std::domain_error);
}

TEST_CASE("uniform multisets maximize entropy at ln n") {
    for (std::size_t n : {2u, 5u, 64u}) {
        const std::vector<double> ls(n, 0.7);
        CHECK(persistent_entropy(bc(ls)) ==
              doctest::Approx(std::log(static_cast<double>(n))).epsilon(kTight));
        CHECK(renyi_entropy(bc(ls), 2.0) ==
              doctest::Approx(std::log(static_cast<double>(n))).epsilon(kTight));
    }
    std::mt19937_64 rng(7202);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, 13, 0.01, 2.0);
        CHECK(persistent_entropy(bc(ls)) <= std::log(13.0) + kTight);
    }
}

TEST_CASE("entropy is scale invariant") {
    std::mt19937_64 rng(7203);
    std::uniform_real_distribution<double> c_dist(0.1, 20.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ls = oracles::random_lifetimes(rng, 9, 0.01, 2.0);
        const Barcode b = bc(ls);
        const double c = c_dist(rng);
        CHECK(persistent_entropy(scale(b, c)) ==
              doctest::Approx(persistent_entropy(b)).epsilon(kTight));
        CHECK(cvtsi(scale(b, c)) == doctest::Approx(cvtsi(b)).epsilon(kTight));
    }
}

TEST_CASE("renyi entropy order validation and alpha = 2 meaning") {
    const Barcode b = bc({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(renyi_entropy(b, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(renyi_entropy(b, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(renyi_entropy(b, -2.0), std::invalid_argument);
    CHECK(renyi_entropy(b, 2.0) ==
          doctest::Approx(-std::log(collision_probability(b))).epsilon(kTight));
}

TEST_CASE("shannon dominates collision entropy") {
    std::mt19937_64 rng(7204);
    std::uniform_int_distribution<std::size_t> size_dist(2, 25);
    for (int trial = 0; trial < 1000; ++trial) {
        const Barcode b = bc(oracles::random_lifetimes(rng, size_dist(rng), 0.01, 2.0));
        CHECK(persistent_entropy(b) >= renyi_entropy(b, 2.0) - kTight);
    }
}

TEST_CASE("collision identity links sum of squares to cvtsi") {
    std::mt19937_64 rng(7205);
    std::uniform_int_distribution<std::size_t> size_dist(2, 25);
    for (int trial = 0; trial < 1000; ++trial) {
        const Barcode b = bc(oracles::random_lifetimes(rng, size_dist(rng), 0.01, 2.0));
        const double n = static_cast<double>(b.n());
        const double expected = 1.0 / n + ((n - 1.0) / (n * n)) * cvtsi(b);
        CHECK(collision_probability(b) == doctest::Approx(expected).epsilon(kTight));
    }
    // Hand value: lifetimes {1,2} give p = (1/3, 2/3), sum of squares 5/9.
    CHECK(collision_probability(bc({1.0, 2.0})) ==
          doctest::Approx(5.0 / 9.0).epsilon(kTight));
}

TEST_CASE("cvtsi range and endpoint multisets") {
    CHECK(cvtsi(bc({1.0, 2.0})) == doctest::Approx(2.0 / 9.0).epsilon(kTight));
    for (std::size_t n : {2u, 3u, 10u}) {
        const std::vector<double> uniform(n, 2.0);
        CHECK(cvtsi(bc(uniform)) == 0.0);
        std::vector<double> spike(n, 0.0);
        spike[0] = 3.0 * static_cast<double>(n);
        CHECK(cvtsi(bc(spike)) ==
              doctest::Approx(static_cast<double>(n)).epsilon(kTight));
    }
    std::mt19937_64 rng(7206);
    for (int trial = 0; trial < 500; ++trial) {
        const Barcode b = bc(oracles::random_lifetimes(rng, 7, 0.0, 2.0));
        const double v = cvtsi(b);
        CHECK(v >= 0.0);
        CHECK(v <= 7.0 + kTight);
    }
    CHECK_THROWS_AS(cvtsi(bc({1.0})), std::domain_error);
    CHECK_THROWS_AS(cvtsi(bc({0.0, 0.0})), std::domain_error);
}

TEST_CASE("cvtsi and renyi2 are inverse reparametrizations") {
    std::mt19937_64 rng(7207);
    std::uniform_int_distribution<std::size_t> size_dist(2, 25);
    for (int trial = 0; trial < 1000; ++trial) {
        const Barcode b = bc(oracles::random_lifetimes(rng, size_dist(rng), 0.01, 2.0));
        const double back = cvtsi_from_renyi2(b.n(), renyi_entropy(b, 2.0));
        CHECK(back == doctest::Approx(cvtsi(b)).epsilon(kRoundTrip));
    }
}

TEST_CASE("cvtsi_from_renyi2 clamps round-off and rejects real violations") {
    // h2 slightly below 0 or slightly above ln n is round-off: clamp to the endpoint.
    CHECK(cvtsi_from_renyi2(4, -1e-12) == doctest::Approx(4.0).epsilon(kTight));
    CHECK(cvtsi_from_renyi2(4, 0.0) == doctest::Approx(4.0).epsilon(kTight));
    CHECK(cvtsi_from_renyi2(4, std::log(4.0) + 1e-12) == 0.0);
    CHECK(cvtsi_from_renyi2(4, std::log(4.0)) == doctest::Approx(0.0).epsilon(kTight));

    CHECK_THROWS_AS(cvtsi_from_renyi2(4, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(cvtsi_from_renyi2(4, std::log(4.0) + 0.1), std::invalid_argument);
    CHECK_THROWS_AS(cvtsi_from_renyi2(4, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(cvtsi_from_renyi2(1, 0.0), std::invalid_argument);
}

TEST_CASE("distance to uniform carries the cvtsi normalization") {
    std::mt19937_64 rng(7208);
    for (int trial = 0; trial < 300; ++trial) {
        const Barcode b = bc(oracles::random_lifetimes(rng, 9, 0.01, 2.0));
        const double n = 9.0;
        CHECK(cvtsi(b) == doctest::Approx((n * n / (n - 1.0)) *
                                          distance_to_uniform_sq(b)).epsilon(kTight));
    }
    CHECK(distance_to_uniform_sq(bc({1.0, 1.0, 1.0})) ==
          doctest::Approx(0.0).epsilon(kTight));
}

TEST_CASE("entropy expansion residual is higher order near uniform") {
    // Two bars with weights 1/2 +- e: cvtsi = 8 e^2 and the quadratic model
    // ln 2 - 2 e^2 misses by O(e^4), so halving e shrinks the residual by ~16.
    const auto residual_at = [](double e) {
        const Barcode b = bc({0.5 + e, 0.5 - e});
        CHECK(cvtsi(b) == doctest::Approx(8.0 * e * e).epsilon(1e-9));
        return std::fabs(entropy_expansion_residual(b));
    };
    const double r1 = residual_at(0.1);
    const double r2 = residual_at(0.05);
    const double r3 = residual_at(0.025);
    CHECK(r1 / r2 >= 8.0);
    CHECK(r2 / r3 >= 8.0);
    CHECK(r1 / r2 <= 32.0);  // the decay is quartic, not faster
    CHECK(r2 / r3 <= 32.0);

    // Residual definition: entropy minus the quadratic model.
    const Barcode b = bc({0.6, 0.4});
    const double model = std::log(2.0) - (1.0 / 4.0) * cvtsi(b);
    CHECK(entropy_expansion_residual(b) ==
          doctest::Approx(persistent_entropy(b) - model).epsilon(kTight));
}
