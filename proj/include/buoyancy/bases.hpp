#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace buoyancy {

using Rational = boost::rational<std::int64_t>;

enum class PolyKind { ShiftedChebyshev, ShiftedLegendre };

/// Polynomial on [0,1] in coefficient form: sum_k coeffs[k] * P*_k(z), where
/// P*_k is T*_k (shifted Chebyshev) or Q_k (shifted Legendre).
struct PolyCoeffs {
    PolyKind kind = PolyKind::ShiftedChebyshev;
    std::vector<double> coeffs;

    [[nodiscard]] double operator()(double z) const;
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Same as PolyCoeffs with exact rational coefficients.
struct ExactCoeffs {
    PolyKind kind = PolyKind::ShiftedChebyshev;
    std::vector<Rational> coeffs;

    [[nodiscard]] PolyCoeffs to_double() const;
};

/// Chebyshev expansion set Phi*_k = T*_k - T*_{k+2}, k = first .. first + count - 1.
struct ChebBasisSpec {
    int count = 4;
    int first = 0;

    [[nodiscard]] int index(int slot) const { return first + slot; }
    void validate() const;
};

/// Legendre expansion set phi_i = (Q_{i+1} - Q_{i-1}) / (2(2i+1)), i = 1 .. count.
struct LegBasisSpec {
    int count = 4;

    [[nodiscard]] int index(int slot) const { return slot + 1; }
    void validate() const;
};

// Pointwise evaluation. All of these throw std::domain_error for z outside [0,1]
// and std::invalid_argument for negative degrees.
[[nodiscard]] double shifted_chebyshev(int k, double z);
[[nodiscard]] double shifted_legendre(int k, double z);
/// d/dz Q_k(z), via 2(2i+1) Q_i = Q'_{i+1} - Q'_{i-1}.
[[nodiscard]] double shifted_legendre_derivative(int k, double z);

[[nodiscard]] double cheb_trial(int k, double z);
/// phi_i(z) = int_0^z Q_i(t) dt. Requires i >= 1.
[[nodiscard]] double leg_trial(int i, double z);

/// Coefficients of Phi*_k in the T*_r basis.
[[nodiscard]] ExactCoeffs cheb_trial_coeffs(int k);

/// (Phi*_k)' in the T*_r basis. Built from the odd-parity sums of the classical
/// derivative formula; the r = 0 coefficient of each sum is halved.
[[nodiscard]] ExactCoeffs cheb_first_derivative(int k);

/// (Phi*_k)'' in the T*_r basis, from the even-parity sums
/// (k-r) k (k+r) and (k+2-r)(k+2)(k+2+r); r = 0 coefficients halved.
[[nodiscard]] ExactCoeffs cheb_second_derivative(int k);

/// x^r T_s(x) = 2^{-r} sum_i C(r,i) T_{s-r+2i}(x) on [-1,1], with T_{-m} folded
/// onto T_m. Entry j of the result is the coefficient of T_j.
[[nodiscard]] std::vector<Rational> monomial_times_cheb(int r, int s);

/// Monomial coefficients (powers of z) of T*_k and Q_k. Used by exactness checks.
[[nodiscard]] std::vector<Rational> shifted_chebyshev_monomial(int k);
[[nodiscard]] std::vector<Rational> shifted_legendre_monomial(int k);

/// Converts an exact shifted expansion to monomial coefficients in z.
[[nodiscard]] std::vector<Rational> to_monomial(const ExactCoeffs& f);

}  // namespace buoyancy
