#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "buoyancy/assembly.hpp"

namespace buoyancy {

/// Linear pencil A + R B acting on (W, Psi, Theta):
///   A = [[K, -M, 0], [0, K, 0], [0, 0, K]],  B = [[0, 0, 0], [0, 0, -a2 G], [M, 0, 0]].
struct PencilProblem {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::Index n = 0;
    double a2 = 0.0;
};

struct NeutralResult {
    double rayleigh_sq = 0.0;  ///< R^2
    double r_signed = 0.0;     ///< pencil eigenvalue R
    double r_imag = 0.0;       ///< imaginary part of the selected eigenvalue
    Eigen::VectorXd eigvec;    ///< (W_k, Psi_k, Theta_k), unit norm
    double residual = 0.0;     ///< |(A + R B) x| / |x|
    bool spectrum_real = true; ///< every finite eigenvalue passed the reality test
};

inline constexpr double kInfiniteEigenvalue = 1e12;
inline constexpr double kRealityTolerance = 1e-6;
inline constexpr double kResidualTolerance = 1e-8;

class NoNeutralValue : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
    [[nodiscard]] double residual() const { return residual_; }

private:
    double residual_;
};

[[nodiscard]] PencilProblem build_pencil(const GalerkinMatrices& mats);
[[nodiscard]] PencilProblem build_pencil(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M,
                                         const Eigen::MatrixXd& G, double a2);

/// True when |imag| <= kRealityTolerance * (1 + |real|).
[[nodiscard]] bool is_effectively_real(std::complex<double> r);

/// Finite eigenvalues R of det(A + R B) = 0, spurious (infinite) ones removed.
[[nodiscard]] std::vector<std::complex<double>> finite_eigenvalues(const PencilProblem& pencil);

/// Smallest positive real eigenvalue of the pencil and its null vector.
[[nodiscard]] NeutralResult smallest_rayleigh(const PencilProblem& pencil);

/// Null vector of A + R B (smallest right singular vector) and |(A + R B) x|.
struct NullVector {
    Eigen::VectorXd vector;
    double residual = 0.0;
};
[[nodiscard]] NullVector null_vector(const PencilProblem& pencil, double r);

struct LogDeterminant {
    double log_abs = 0.0;
    int sign = 0;
};
[[nodiscard]] LogDeterminant log_determinant(const PencilProblem& pencil, double r);

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Sign changes of det(A + R B) on a uniform grid of `steps` points over [r_min, r_max].
[[nodiscard]] std::vector<Bracket> determinant_scan(const PencilProblem& pencil, double r_min, double r_max,
                                                    int steps);

/// Bisection inside a sign-change bracket down to relative width `rel_width`.
[[nodiscard]] double refine_root(const PencilProblem& pencil, Bracket bracket, double rel_width = 1e-10);

}  // namespace buoyancy
