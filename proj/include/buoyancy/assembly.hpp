#pragma once

#include <stdexcept>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "buoyancy/bases.hpp"
#include "buoyancy/gravity.hpp"

namespace buoyancy {

/// Inner product used to project the Chebyshev residuals. Weighted is the
/// Chebyshev weight 1/sqrt(z(1-z)); Unweighted is plain L2 on [0,1].
enum class ChebyshevInnerProduct { Weighted, Unweighted };

/// How a truncation level n maps onto a concrete set of trial functions.
enum class Truncation {
    FunctionCount,    ///< n functions: Phi*_0..Phi*_{n-1}, phi_1..phi_n
    InclusiveUpper,   ///< n+1 functions: Phi*_0..Phi*_n, phi_1..phi_{n+1}
    PolynomialCount,  ///< functions spanned by the first n polynomials: n-2 of them
};

[[nodiscard]] ChebBasisSpec chebyshev_basis(int n, Truncation rule);
[[nodiscard]] LegBasisSpec legendre_basis(int n, Truncation rule);
[[nodiscard]] std::string_view to_string(Truncation rule);
[[nodiscard]] Truncation parse_truncation(std::string_view name);

using BasisSpec = std::variant<ChebBasisSpec, LegBasisSpec>;

/// K = ((D^2 - a^2) chi_k, chi_i), M = (chi_k, chi_i), G = ((1 + eps h) chi_k, chi_i).
/// Row index is the test function i, column index the trial function k.
struct GalerkinMatrices {
    BasisSpec basis;
    double a2 = 0.0;
    Eigen::MatrixXd K;
    Eigen::MatrixXd M;
    Eigen::MatrixXd G;

    [[nodiscard]] Eigen::Index size() const { return K.rows(); }
};

class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] GalerkinMatrices assemble(const ChebBasisSpec& basis, double a2, const GravityProfile& profile,
                                        ChebyshevInnerProduct inner = ChebyshevInnerProduct::Weighted);
[[nodiscard]] GalerkinMatrices assemble(const LegBasisSpec& basis, double a2, const GravityProfile& profile);

/// sum_n (pi/2) c_n f_n g_n with c_0 = 2, c_n = 1 otherwise.
[[nodiscard]] double weighted_inner_product(const PolyCoeffs& f, const PolyCoeffs& g);

/// Shifted-Chebyshev expansion of (1 + eps h(z)) Phi*_k(z).
[[nodiscard]] PolyCoeffs gravity_product_coeffs(const GravityProfile& profile, int k);

}  // namespace buoyancy
