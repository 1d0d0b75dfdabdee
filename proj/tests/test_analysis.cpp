#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "buoyancy/analysis.hpp"
#include "buoyancy/reference_tables.hpp"

using namespace buoyancy;

namespace {

double closed_form(double a2) {
    const double s = std::numbers::pi * std::numbers::pi + a2;
    return s * s * s / a2;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("calibration picks the tabulated truncation") {
    const auto& cal = frozen_calibration();
    CHECK(cal.chebyshev == Truncation::InclusiveUpper);
    CHECK(cal.legendre == Truncation::PolynomialCount);
    CHECK(relative(cal.chebyshev_anchor, 657.512) < 1e-4);
    CHECK(relative(cal.legendre_anchor, 675.058) < 1e-5);
    CHECK(&frozen_calibration() == &cal);
}

TEST_CASE("table rows") {
    const auto& cal = frozen_calibration();
    SUBCASE("linear, eps = 0.33, a2 = 4.92") {
        const auto rows = reproduce_table(ProfileFamily::Linear, 4, cal);
        REQUIRE(rows.size() == 9);
        CHECK(rows[3].epsilon == 0.33);
        CHECK(relative(rows[3].r2_scp, 787.363) < 5e-3);
        CHECK(relative(rows[3].r2_slp, 808.303) < 5e-3);
    }
    SUBCASE("quadratic, eps = 0.75, a2 = 10") {
        const auto rows = reproduce_table(ProfileFamily::Quadratic, 4, cal);
        CHECK(rows[8].a2 == 10.0);
        CHECK(relative(rows[8].r2_scp, 993.51) < 5e-3);
        CHECK(relative(rows[8].r2_slp, 1016.20) < 5e-3);
    }
    SUBCASE("mixed, eps = 0.01, a2 = 4.92") {
        const auto rows = reproduce_table(ProfileFamily::Mixed, 4, cal);
        CHECK(rows[1].epsilon == 0.01);
        CHECK(relative(rows[1].r2_scp, 662.29) < 5e-3);
        CHECK(relative(rows[1].r2_slp, 679.91) < 5e-3);
    }
    CHECK_THROWS_AS((void)reproduce_table(ProfileFamily::Linear, 1, cal), std::invalid_argument);
}

TEST_CASE("row order follows the reference tables") {
    for (auto family : kProfileFamilies) {
        const auto rows = reproduce_table(family, 4, frozen_calibration());
        const auto& ref = reference_table(family);
        REQUIRE(rows.size() == ref.size());
        for (std::size_t j = 0; j < rows.size(); ++j) {
            CHECK(rows[j].epsilon == ref[j].epsilon);
            CHECK(rows[j].a2 == ref[j].a2);
        }
    }
}

TEST_CASE("serial and parallel sweeps are bitwise identical") {
    const auto& cal = frozen_calibration();
    for (auto family : kProfileFamilies) {
        const auto serial = reproduce_table(family, 6, cal, Execution::Serial);
        const auto parallel = reproduce_table(family, 6, cal, Execution::Parallel);
        for (std::size_t j = 0; j < serial.size(); ++j) {
            CHECK(same_bits(serial[j].r2_scp, parallel[j].r2_scp));
            CHECK(same_bits(serial[j].r2_slp, parallel[j].r2_slp));
        }
    }
    const SolverConfig config{Method::Legendre, 10};
    const auto grid = uniform_grid(2.0, 20.0, 37);
    const auto profile = bundled_profile(ProfileFamily::Mixed, 0.4);
    const auto a = neutral_curve(config, profile, grid, Execution::Serial);
    const auto b = neutral_curve(config, profile, grid, Execution::Parallel);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].a2 == b[j].a2);
        CHECK(same_bits(a[j].r2, b[j].r2));
    }
}

TEST_CASE("neutral curve, uniform gravity") {
    const auto flat = bundled_profile(ProfileFamily::Quadratic, 0.0);
    const auto grid = uniform_grid(2.0, 20.0, 41);
    for (auto method : {Method::Chebyshev, Method::Legendre}) {
        const auto curve = neutral_curve(SolverConfig{method, 8}, flat, grid);
        REQUIRE(curve.size() == grid.size());
        for (const auto& p : curve) {
            CHECK(!p.error);
            CHECK(relative(p.r2, closed_form(p.a2)) < 5e-3);
        }
        for (std::size_t j = 1; j + 1 < curve.size(); ++j) {
            CHECK(curve[j - 1].r2 - 2.0 * curve[j].r2 + curve[j + 1].r2 >= 0.0);
        }
    }
}

TEST_CASE("neutral curve, decreasing linear gravity") {
    const auto profile = bundled_profile(ProfileFamily::Linear, 0.2);
    const auto curve = neutral_curve(SolverConfig{Method::Chebyshev, 16}, profile, {5.0, 9.0});
    CHECK(curve[1].r2 > curve[0].r2);
    CHECK(relative(curve[0].r2, 730.459) < 1e-2);
    CHECK(relative(curve[1].r2, 829.44) < 1e-2);
}

TEST_CASE("neutral curve input checks and per-point errors") {
    const auto profile = bundled_profile(ProfileFamily::Linear, 0.0);
    const SolverConfig config{Method::Legendre, 6};
    CHECK_THROWS_AS((void)neutral_curve(config, profile, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)neutral_curve(config, profile, {2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)neutral_curve(config, profile, {0.0, 1.0}), std::invalid_argument);

    // Gravity reverses everywhere: every point fails, the sweep still completes.
    const auto reversed = custom_profile({-3.0}, 1.0);
    const auto curve = neutral_curve(SolverConfig{Method::FiniteDifference, 4, Truncation::FunctionCount,
                                                  ChebyshevInnerProduct::Weighted, 40},
                                     reversed, {1.0, 2.0, 3.0});
    REQUIRE(curve.size() == 3);
    for (const auto& p : curve) {
        CHECK(p.error.has_value());
        CHECK(std::isnan(p.r2));
    }
}

TEST_CASE("uniform grid") {
    CHECK(uniform_grid(3.0, 7.0, 1) == std::vector<double>{3.0});
    const auto g = uniform_grid(7.0, 10.0, 4);
    CHECK(g == std::vector<double>{7.0, 8.0, 9.0, 10.0});
    CHECK_THROWS_AS((void)uniform_grid(1.0, 2.0, 0), std::invalid_argument);
}

TEST_CASE("critical point, uniform gravity") {
    const double a2_exact = std::numbers::pi * std::numbers::pi / 2.0;
    const double r2_exact = 27.0 * std::pow(std::numbers::pi, 4) / 4.0;
    for (auto family : kProfileFamilies) {
        const auto cp = critical_point(SolverConfig{Method::Legendre, 10}, bundled_profile(family, 0.0), 1.0, 20.0);
        CHECK(std::abs(cp.a2_crit - a2_exact) < 1e-3);
        CHECK(relative(cp.r2_crit, r2_exact) < 1e-6);
        CHECK(cp.method == Method::Legendre);
    }
}

TEST_CASE("critical point, decreasing gravity") {
    const SolverConfig config{Method::Chebyshev, 10};
    const auto profile = bundled_profile(ProfileFamily::Linear, 0.33);
    const auto cp = critical_point(config, profile, 1.0, 20.0);

    for (int points : {50, 200}) {
        const auto grid = uniform_grid(1.0, 20.0, points);
        const auto curve = neutral_curve(config, profile, grid);
        std::size_t best = 0;
        for (std::size_t j = 0; j < curve.size(); ++j) {
            CHECK(cp.r2_crit <= curve[j].r2);
            if (curve[j].r2 < curve[best].r2) best = j;
        }
        const double spacing = grid[1] - grid[0];
        CHECK(std::abs(cp.a2_crit - curve[best].a2) <= spacing);
    }

    const auto flat = critical_point(config, bundled_profile(ProfileFamily::Linear, 0.0), 1.0, 20.0);
    CHECK(cp.r2_crit > flat.r2_crit);
}

TEST_CASE("critical point bracket errors") {
    const SolverConfig config{Method::Legendre, 8};
    const auto flat = bundled_profile(ProfileFamily::Linear, 0.0);
    CHECK_THROWS_AS((void)critical_point(config, flat, 1.0, 2.0), BracketError);
    CHECK_THROWS_AS((void)critical_point(config, flat, 8.0, 20.0), BracketError);
    CHECK_THROWS_AS((void)critical_point(config, flat, 3.0, 3.0), BracketError);
}

TEST_CASE("method names") {
    for (auto m : {Method::Chebyshev, Method::Legendre, Method::FiniteDifference}) {
        CHECK(parse_method(to_string(m)) == m);
    }
    CHECK_THROWS_AS((void)parse_method("spectral"), std::invalid_argument);
}
