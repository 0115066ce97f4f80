#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "tsikit/barcode.hpp"
#include "tsikit/rips.hpp"

using namespace tsikit;

namespace {
constexpr double kTight = 1e-12;

PointCloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t dim = 2) {
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    PointCloud pc(dim);
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (double& x : p) x = dist(rng);
        pc.push_back(p);
    }
    return pc;
}

PointCloud regular_polygon(std::size_t n, double radius = 1.0) {
    PointCloud pc(2);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(n);
        const std::vector<double> p{radius * std::cos(angle), radius * std::sin(angle)};
        pc.push_back(p);
    }
    return pc;
}

std::size_t infinite_count(const Barcode& b) {
    std::size_t count = 0;
    for (const Bar& bar : b.bars())
        if (bar.is_infinite()) ++count;
    return count;
}
}  // namespace

TEST_CASE("distance matrix and enclosing radius") {
    const PointCloud square =
        PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    const DistanceMatrix dm(square);
    CHECK(dm.size() == 4);
    CHECK(dm(0, 0) == 0.0);
    CHECK(dm(0, 1) == 1.0);
    CHECK(dm(0, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(kTight));
    CHECK(dm(2, 0) == dm(0, 2));
    CHECK(dm.enclosing_radius() == doctest::Approx(std::sqrt(2.0)).epsilon(kTight));

    CHECK(DistanceMatrix(PointCloud()).enclosing_radius() == 0.0);
    const PointCloud lone = PointCloud::from_rows({{5.0, 5.0}});
    CHECK(DistanceMatrix(lone).enclosing_radius() == 0.0);

    // Off-center point: the best center wins, not the diameter.
    const PointCloud line = PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
    CHECK(DistanceMatrix(line).enclosing_radius() == 1.0);
}

TEST_CASE("argument validation") {
    const PointCloud pc = PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(rips_persistence(pc, 2), std::invalid_argument);
    CHECK_THROWS_AS(rips_persistence(pc, -1), std::invalid_argument);
    CHECK_THROWS_AS(rips_persistence(pc, 1, -0.5), std::invalid_argument);
}

TEST_CASE("degenerate clouds") {
    const auto empty = rips_persistence(PointCloud(), 1);
    CHECK(empty.at(0).bars().empty());
    CHECK(empty.at(1).bars().empty());

    const auto lone = rips_persistence(PointCloud::from_rows({{1.0, 2.0}}), 1);
    REQUIRE(lone.at(0).bars().size() == 1);
    CHECK(lone.at(0).bars()[0].is_infinite());
    CHECK(lone.at(1).bars().empty());

    // Coincident points merge at weight 0; the pairing has no persistence to report.
    const auto dup = rips_persistence(PointCloud::from_rows({{1.0, 1.0}, {1.0, 1.0}}), 1);
    REQUIRE(dup.at(0).bars().size() == 1);
    CHECK(dup.at(0).bars()[0].is_infinite());
}

TEST_CASE("degree-0 deaths are the positive MST edge weights") {
    std::mt19937_64 rng(7501);
    for (int trial = 0; trial < 40; ++trial) {
        const PointCloud pc = random_cloud(rng, 3 + trial % 18, 2 + trial % 3);
        const auto diagram = rips_persistence(pc, 0);
        const auto expected = oracles::mst_edge_weights(pc);

        std::vector<double> deaths;
        for (const Bar& bar : diagram.at(0).bars()) {
            CHECK(bar.degree == 0);
            CHECK(bar.birth == 0.0);
            if (!bar.is_infinite()) deaths.push_back(bar.death);
        }
        std::sort(deaths.begin(), deaths.end());
        CHECK(infinite_count(diagram.at(0)) == 1);
        REQUIRE(deaths.size() == expected.size());
        for (std::size_t i = 0; i < deaths.size(); ++i)
            CHECK(deaths[i] == doctest::Approx(expected[i]).epsilon(kTight));
    }
}

TEST_CASE("a cap below the gap separates components") {
    const PointCloud pc = PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}});
    const auto split = rips_persistence(pc, 1, 0.5);
    CHECK(split.at(0).bars().size() == 2);
    CHECK(infinite_count(split.at(0)) == 2);

    const auto joined = rips_persistence(pc, 1, 1.0);
    CHECK(infinite_count(joined.at(0)) == 1);
}

TEST_CASE("equilateral triangle carries no persistent cycle") {
    const auto diagram = rips_persistence(regular_polygon(3), 1);
    CHECK(diagram.at(1).bars().empty());
}

TEST_CASE("unit square cycle lives from side to diagonal") {
    const PointCloud square =
        PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    const auto diagram = rips_persistence(square, 1);
    REQUIRE(diagram.at(1).bars().size() == 1);
    const Bar bar = diagram.at(1).bars()[0];
    CHECK(bar.degree == 1);
    CHECK(bar.birth == doctest::Approx(1.0).epsilon(kTight));
    CHECK(bar.death == doctest::Approx(std::sqrt(2.0)).epsilon(kTight));
}

TEST_CASE("regular 12-gon cycle is born at the side and dies at sqrt 3") {
    const auto diagram = rips_persistence(regular_polygon(12), 1);
    REQUIRE(diagram.at(1).bars().size() == 1);
    const Bar bar = diagram.at(1).bars()[0];
    const double side = 2.0 * std::sin(std::numbers::pi / 12.0);
    CHECK(std::fabs(bar.birth - side) <= 1e-9);
    CHECK(std::fabs(bar.death - std::sqrt(3.0)) <= 1e-9);
}

TEST_CASE("no cycle survives the enclosing-radius cap") {
    std::mt19937_64 rng(7502);
    for (int trial = 0; trial < 20; ++trial) {
        const PointCloud pc = random_cloud(rng, 16);
        const auto diagram = rips_persistence(pc, 1);
        CHECK(infinite_count(diagram.at(1)) == 0);
        CHECK(infinite_count(diagram.at(0)) == 1);
        for (const Bar& bar : diagram.at(1).bars()) {
            CHECK(bar.degree == 1);
            CHECK(bar.birth > 0.0);
            CHECK(bar.death > bar.birth);
        }
    }
}

TEST_CASE("diagram matches rank computation on small clouds") {
    std::mt19937_64 rng(7503);
    for (int trial = 0; trial < 60; ++trial) {
        const PointCloud pc = random_cloud(rng, 4 + trial % 5, 2 + trial % 2);
        CHECK(oracles::diagram_matches_rank_oracle(pc));
    }
}

TEST_CASE("diagram is invariant under point relabeling") {
    std::mt19937_64 rng(7504);
    for (int trial = 0; trial < 20; ++trial) {
        const PointCloud pc = random_cloud(rng, 12);
        auto rows = pc.rows();
        std::shuffle(rows.begin(), rows.end(), rng);
        const PointCloud shuffled = PointCloud::from_rows(rows);

        const auto a = rips_persistence(pc, 1);
        const auto b = rips_persistence(shuffled, 1);
        for (int degree : {0, 1}) {
            const auto& bars_a = a.at(degree).bars();
            const auto& bars_b = b.at(degree).bars();
            REQUIRE(bars_a.size() == bars_b.size());
            for (std::size_t i = 0; i < bars_a.size(); ++i) {
                CHECK(bars_a[i].birth == doctest::Approx(bars_b[i].birth).epsilon(kTight));
                if (std::isinf(bars_a[i].death)) {
                    CHECK(std::isinf(bars_b[i].death));
                } else {
                    CHECK(bars_a[i].death ==
                          doctest::Approx(bars_b[i].death).epsilon(kTight));
                }
            }
        }
    }
}

TEST_CASE("max_dim 0 skips degree 1") {
    const PointCloud pc = regular_polygon(6);
    const auto diagram = rips_persistence(pc, 0);
    CHECK(diagram.count(0) == 1);
    CHECK(diagram.count(1) == 0);
}

TEST_CASE("a generous explicit cap exposes the essential cycle") {
    // Capping below the kill radius leaves the 12-gon cycle unpaired.
    const auto diagram = rips_persistence(regular_polygon(12), 1, 1.2);
    REQUIRE(diagram.at(1).bars().size() == 1);
    CHECK(diagram.at(1).bars()[0].is_infinite());
    CHECK(diagram.at(1).n() == 0);  // infinite bars stay out of the lifetime multiset
}
