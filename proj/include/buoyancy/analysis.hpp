#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "buoyancy/assembly.hpp"
#include "buoyancy/gravity.hpp"
#include "buoyancy/parallel.hpp"
#include "buoyancy/pencil.hpp"

namespace buoyancy {

enum class Method { Chebyshev, Legendre, FiniteDifference };

[[nodiscard]] std::string_view to_string(Method method);  // "scp", "slp", "fd"
[[nodiscard]] Method parse_method(std::string_view name);

struct SolverConfig {
    Method method = Method::Chebyshev;
    int n = 4;
    Truncation truncation = Truncation::FunctionCount;
    ChebyshevInnerProduct inner = ChebyshevInnerProduct::Weighted;
    int fd_m = 400;
};

/// One neutral value R^2 for the configured discretization.
[[nodiscard]] NeutralResult solve_neutral(const SolverConfig& config, const GravityProfile& profile, double a2);

/// Truncation level at which the tabulated values were produced.
inline constexpr int kTableTruncation = 4;

/// Truncation rule per basis, chosen once by matching the first row of the
/// linear-profile table (epsilon = 0, a2 = 4.92) at n = kTableTruncation.
struct Calibration {
    Truncation chebyshev = Truncation::InclusiveUpper;
    Truncation legendre = Truncation::FunctionCount;
    double chebyshev_anchor = 0.0;  ///< R^2 the chosen Chebyshev rule gives on the anchor row
    double legendre_anchor = 0.0;
};

[[nodiscard]] Calibration calibrate();
/// calibrate(), computed once per process.
[[nodiscard]] const Calibration& frozen_calibration();

struct TableRow {
    double epsilon = 0.0;
    double a2 = 0.0;
    double r2_scp = 0.0;
    double r2_slp = 0.0;
};

/// SCP and SLP values for the nine (epsilon, a2) pairs of the family's table, in table order.
[[nodiscard]] std::vector<TableRow> reproduce_table(ProfileFamily family, int n, const Calibration& calibration,
                                                    Execution exec = Execution::Parallel);

struct CurvePoint {
    double a2 = 0.0;
    double r2 = 0.0;
    std::optional<std::string> error;
};

[[nodiscard]] std::vector<CurvePoint> neutral_curve(const SolverConfig& config, const GravityProfile& profile,
                                                    const std::vector<double>& a2_grid,
                                                    Execution exec = Execution::Parallel);

/// `points` evenly spaced values over [lo, hi]; a single point yields {lo}.
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, int points);

struct CriticalPoint {
    double a2_crit = 0.0;
    double r2_crit = 0.0;
    GravityProfile profile;
    Method method = Method::Chebyshev;
};

class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kCriticalTolerance = 1e-4;

/// Golden-section minimum of R^2(a2) over [a2_lo, a2_hi] to |delta a2| < kCriticalTolerance.
[[nodiscard]] CriticalPoint critical_point(const SolverConfig& config, const GravityProfile& profile,
                                           double a2_lo, double a2_hi);

}  // namespace buoyancy
