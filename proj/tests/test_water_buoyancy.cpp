#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hullborne/buoyancy.hpp"
#include "hullborne/water.hpp"

using namespace hullborne;

namespace {

SubmergedRegion region_of(double volume, Vec3 centroid) {
    SubmergedRegion r;
    r.volume = volume;
    r.centroid_eq5 = r.centroid_volumetric = centroid;
    r.centroid_defined = true;
    return r;
}

}  // namespace

TEST_CASE("water level: still, crest, disabled") {
    auto s = WaterSurface::waves(2.0, 0.3, 0.5);
    CHECK(s.level_at(0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.level_at(0.5) == doctest::Approx(2.3).epsilon(1e-12));  // sin(pi/2) = 1
    auto still = WaterSurface::still(2.0);
    for (double t : {0.0, 0.37, 12.5}) CHECK(still.level_at(t) == 2.0);
}

TEST_CASE("water level periodicity and zero mean over a period") {
    auto s = WaterSurface::waves(1.0, 0.3, 0.5, 0.7);
    for (double t : {0.0, 0.123, 1.9})
        CHECK(s.level_at(t) == doctest::Approx(s.level_at(t + 2.0)).epsilon(1e-12));
    // Trapezoid quadrature at 10^4 points over one period.
    const int n = 10000;
    double sum = 0.5 * (s.level_at(0.0) + s.level_at(2.0));
    for (int i = 1; i < n; ++i) sum += s.level_at(2.0 * i / n);
    CHECK(sum / n == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bounded by amplitude") {
    auto s = WaterSurface::waves(0.0, 0.3, 0.5);
    for (int i = 0; i < 1000; ++i) CHECK(std::abs(s.level_at(0.013 * i)) <= 0.3 + 1e-12);
}

TEST_CASE("buoyant force magnitude") {
    FluidParams fresh;
    CHECK(buoyant_force_magnitude(fresh, 0.0) == 0.0);
    CHECK(buoyant_force_magnitude(fresh, 0.001) == doctest::Approx(9.81).epsilon(1e-12));
    FluidParams sea{1025.0, 9.81};
    CHECK(buoyant_force_magnitude(sea, 0.5) == doctest::Approx(5027.625).epsilon(1e-12));
    CHECK_THROWS_AS(buoyant_force_magnitude(fresh, -1.0), std::invalid_argument);
}

TEST_CASE("assembly: symmetric two-mesh split") {
    FluidParams fluid;
    auto report = assembly_buoyancy({{"a", region_of(0.5, {-1, 0, 0})},
                                    {"b", region_of(0.5, {1, 0, 0})}},
                                   fluid);
    CHECK(report.total_force.z == doctest::Approx(9810.0).epsilon(1e-12));
    CHECK(report.total_force.x == 0.0);
    CHECK(report.total_force.y == 0.0);
    CHECK(report.application_point.x == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("assembly: 0.75 / 0.25 split") {
    FluidParams fluid;
    auto report = assembly_buoyancy(
        {{"a", region_of(0.75, {0, 0, 0})}, {"b", region_of(0.25, {1, 0, 0})}}, fluid);
    CHECK(report.application_point.x == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("assembly: single mesh reduces to Archimedes") {
    FluidParams fluid;
    auto report = assembly_buoyancy({{"only", region_of(0.001, {0.1, 0.2, -0.3})}}, fluid);
    CHECK(report.total_force.z == doctest::Approx(9.81).epsilon(1e-12));
    CHECK(report.application_point.x == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(report.per_mesh.size() == 1);
}

TEST_CASE("assembly: all-zero-volume yields zero force, undefined point") {
    FluidParams fluid;
    auto report = assembly_buoyancy({{"a", region_of(0.0, {5, 5, 5})}}, fluid);
    CHECK(report.total_force.z == 0.0);
    CHECK_FALSE(report.application_point_defined);
}

TEST_CASE("linearity: scaling volumes scales force, fixes the application point") {
    FluidParams fluid;
    std::vector<std::pair<std::string, SubmergedRegion>> regions = {
        {"a", region_of(0.2, {0, 1, -2})}, {"b", region_of(0.5, {3, -1, 0})},
        {"c", region_of(0.1, {-2, 2, 1})}};
    auto base = assembly_buoyancy(regions, fluid);
    for (auto& [id, r] : regions) r.volume *= 3.5;
    auto scaled = assembly_buoyancy(regions, fluid);
    CHECK(scaled.total_force.z == doctest::Approx(base.total_force.z * 3.5).epsilon(1e-12));
    CHECK(scaled.application_point.x ==
          doctest::Approx(base.application_point.x).epsilon(1e-12));
    CHECK(scaled.application_point.z ==
          doctest::Approx(base.application_point.z).epsilon(1e-12));
}

TEST_CASE("permutation invariance of input order") {
    FluidParams fluid;
    std::vector<std::pair<std::string, SubmergedRegion>> regions = {
        {"a", region_of(0.2, {0, 1, -2})}, {"b", region_of(0.5, {3, -1, 0})},
        {"c", region_of(0.1, {-2, 2, 1})}};
    auto base = assembly_buoyancy(regions, fluid);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(regions.begin(), regions.end(), rng);
        auto shuffled = assembly_buoyancy(regions, fluid);
        CHECK(shuffled.total_force.z == doctest::Approx(base.total_force.z).epsilon(1e-12));
        CHECK(shuffled.application_point.x ==
              doctest::Approx(base.application_point.x).epsilon(1e-12));
    }
}

TEST_CASE("additivity: splitting a region preserves the report") {
    FluidParams fluid;
    auto whole = assembly_buoyancy({{"w", region_of(0.6, {1.0, 0, -1})}}, fluid);
    // Same total volume and volume-weighted centroid, split in two.
    auto split = assembly_buoyancy(
        {{"p", region_of(0.2, {2.5, 0, -1})}, {"q", region_of(0.4, {0.25, 0, -1})}}, fluid);
    CHECK(split.total_force.z == doctest::Approx(whole.total_force.z).epsilon(1e-12));
    CHECK(split.application_point.x ==
          doctest::Approx(whole.application_point.x).epsilon(1e-12));
}

TEST_CASE("total force z equals the sum of per-mesh magnitudes") {
    FluidParams fluid;
    auto report = assembly_buoyancy(
        {{"a", region_of(0.31, {0, 0, 0})}, {"b", region_of(0.07, {1, 1, 1})}}, fluid);
    double sum = 0.0;
    for (const auto& m : report.per_mesh) sum += m.force_magnitude;
    CHECK(report.total_force.z == doctest::Approx(sum).epsilon(1e-12));
}
