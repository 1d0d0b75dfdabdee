#include "buoyancy/analysis.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "buoyancy/fd_oracle.hpp"
#include "buoyancy/reference_tables.hpp"

namespace buoyancy {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Chebyshev: return "scp";
        case Method::Legendre: return "slp";
        case Method::FiniteDifference: return "fd";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "scp") return Method::Chebyshev;
    if (name == "slp") return Method::Legendre;
    if (name == "fd") return Method::FiniteDifference;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

NeutralResult solve_neutral(const SolverConfig& config, const GravityProfile& profile, double a2) {
    switch (config.method) {
        case Method::Chebyshev:
            return smallest_rayleigh(
                build_pencil(assemble(chebyshev_basis(config.n, config.truncation), a2, profile, config.inner)));
        case Method::Legendre:
            return smallest_rayleigh(build_pencil(assemble(legendre_basis(config.n, config.truncation), a2, profile)));
        case Method::FiniteDifference: return fd_smallest_rayleigh(FdGrid{config.fd_m}, a2, profile);
    }
    throw std::invalid_argument("unknown method");
}

Calibration calibrate() {
    constexpr std::array candidates{Truncation::FunctionCount, Truncation::InclusiveUpper,
                                    Truncation::PolynomialCount};
    const auto& anchor = reference_table(ProfileFamily::Linear).front();
    const auto profile = bundled_profile(ProfileFamily::Linear, anchor.epsilon);

    auto pick = [&](Method method, double target, Truncation& rule, double& value) {
        double best = INFINITY;
        for (auto candidate : candidates) {
            const SolverConfig config{method, kTableTruncation, candidate};
            const double r2 = solve_neutral(config, profile, anchor.a2).rayleigh_sq;
            if (std::abs(r2 - target) < best) {
                best = std::abs(r2 - target);
                rule = candidate;
                value = r2;
            }
        }
    };

    Calibration out;
    pick(Method::Chebyshev, anchor.r2_scp, out.chebyshev, out.chebyshev_anchor);
    pick(Method::Legendre, anchor.r2_slp, out.legendre, out.legendre_anchor);
    return out;
}

const Calibration& frozen_calibration() {
    static const Calibration calibration = calibrate();
    return calibration;
}

std::vector<TableRow> reproduce_table(ProfileFamily family, int n, const Calibration& calibration, Execution exec) {
    if (n < 2) throw std::invalid_argument("table reproduction needs n >= 2");
    const auto& reference = reference_table(family);
    return sweep<TableRow>(
        reference.size(),
        [&](std::size_t j) {
            const auto& ref = reference[j];
            const auto profile = bundled_profile(family, ref.epsilon);
            try {
                TableRow row{ref.epsilon, ref.a2, 0.0, 0.0};
                row.r2_scp = solve_neutral({Method::Chebyshev, n, calibration.chebyshev}, profile, ref.a2).rayleigh_sq;
                row.r2_slp = solve_neutral({Method::Legendre, n, calibration.legendre}, profile, ref.a2).rayleigh_sq;
                return row;
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << to_string(family) << " table row " << j + 1 << " (epsilon = " << ref.epsilon
                    << ", a2 = " << ref.a2 << "): " << e.what();
                throw std::runtime_error(msg.str());
            }
        },
        exec);
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    if (points == 1) return {lo};
    std::vector<double> grid(points);
    for (int j = 0; j < points; ++j) grid[j] = lo + (hi - lo) * j / (points - 1);
    return grid;
}

std::vector<CurvePoint> neutral_curve(const SolverConfig& config, const GravityProfile& profile,
                                      const std::vector<double>& a2_grid, Execution exec) {
    for (std::size_t j = 0; j < a2_grid.size(); ++j) {
        if (!(a2_grid[j] > 0.0)) throw std::invalid_argument("a2 grid values must be > 0");
        if (j > 0 && !(a2_grid[j] > a2_grid[j - 1])) {
            throw std::invalid_argument("a2 grid must be strictly increasing");
        }
    }
    return sweep<CurvePoint>(
        a2_grid.size(),
        [&](std::size_t j) {
            CurvePoint point{a2_grid[j], 0.0, std::nullopt};
            try {
                point.r2 = solve_neutral(config, profile, a2_grid[j]).rayleigh_sq;
            } catch (const std::exception& e) {
                point.r2 = NAN;
                point.error = e.what();
            }
            return point;
        },
        exec);
}

CriticalPoint critical_point(const SolverConfig& config, const GravityProfile& profile, double a2_lo,
                             double a2_hi) {
    if (!(a2_lo > 0.0 && a2_lo < a2_hi)) throw BracketError("critical point search needs 0 < a2_lo < a2_hi");
    auto r2 = [&](double a2) { return solve_neutral(config, profile, a2).rayleigh_sq; };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = a2_lo;
    double hi = a2_hi;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = r2(c);
    double fd = r2(d);
    while (hi - lo >= kCriticalTolerance) {
        // On ties keep the left interval.
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = r2(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = r2(d);
        }
    }
    const double a2 = fc <= fd ? c : d;
    const double value = std::min(fc, fd);

    if (a2 - a2_lo < kCriticalTolerance || a2_hi - a2 < kCriticalTolerance || value >= r2(a2_lo) ||
        value >= r2(a2_hi)) {
        std::ostringstream msg;
        msg << "no interior minimum of R^2(a2) in [" << a2_lo << ", " << a2_hi << "]";
        throw BracketError(msg.str());
    }
    return {a2, value, profile, config.method};
}

}  // namespace buoyancy
