#include "buoyancy/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "buoyancy/quadrature.hpp"

namespace buoyancy {

namespace {

int truncated_count(int n, Truncation rule) {
    switch (rule) {
        case Truncation::FunctionCount: return n;
        case Truncation::InclusiveUpper: return n + 1;
        case Truncation::PolynomialCount: return n - 2;
    }
    return n;
}

void check_a2(double a2) {
    if (!(a2 > 0.0) || !std::isfinite(a2)) {
        throw std::invalid_argument("squared wavenumber a2 must be finite and > 0");
    }
}

void check_mass(const GalerkinMatrices& mats) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mats.M);
    const auto& s = svd.singularValues();
    const double rcond = s(s.size() - 1) / s(0);
    if (!(rcond > 1e-14)) {
        throw AssemblyError("singular mass matrix (n = " + std::to_string(mats.size()) +
                            ", sigma_min = " + std::to_string(s(s.size() - 1)) +
                            ", sigma_max = " + std::to_string(s(0)) + ")");
    }
}

// L2 inner product on [0,1] of two shifted-Chebyshev expansions, exact by quadrature.
double l2_inner_product(const PolyCoeffs& f, const PolyCoeffs& g) {
    const auto rule = gauss_legendre(exact_node_count(f.degree() + g.degree()));
    double sum = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) sum += rule.weights[j] * f(rule.nodes[j]) * g(rule.nodes[j]);
    return sum;
}

}  // namespace

ChebBasisSpec chebyshev_basis(int n, Truncation rule) {
    ChebBasisSpec spec{truncated_count(n, rule), 0};
    spec.validate();
    return spec;
}

LegBasisSpec legendre_basis(int n, Truncation rule) {
    LegBasisSpec spec{truncated_count(n, rule)};
    spec.validate();
    return spec;
}

std::string_view to_string(Truncation rule) {
    switch (rule) {
        case Truncation::FunctionCount: return "functions";
        case Truncation::InclusiveUpper: return "inclusive";
        case Truncation::PolynomialCount: return "polynomials";
    }
    return "unknown";
}

Truncation parse_truncation(std::string_view name) {
    if (name == "functions") return Truncation::FunctionCount;
    if (name == "inclusive") return Truncation::InclusiveUpper;
    if (name == "polynomials") return Truncation::PolynomialCount;
    throw std::invalid_argument("unknown truncation rule '" + std::string(name) + "'");
}

double weighted_inner_product(const PolyCoeffs& f, const PolyCoeffs& g) {
    if (f.kind != PolyKind::ShiftedChebyshev || g.kind != PolyKind::ShiftedChebyshev) {
        throw std::invalid_argument("weighted inner product needs shifted-Chebyshev operands");
    }
    const std::size_t len = std::min(f.coeffs.size(), g.coeffs.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        const double c = j == 0 ? 2.0 : 1.0;
        sum += c * f.coeffs[j] * g.coeffs[j];
    }
    return 0.5 * std::numbers::pi * sum;
}

PolyCoeffs gravity_product_coeffs(const GravityProfile& profile, int k) {
    profile.validate();
    // 1 + eps h(z) as a polynomial in x = 2z - 1, using z^j = 2^-j sum_m C(j,m) x^m.
    const int deg = profile.degree();
    std::vector<double> in_x(deg + 1, 0.0);
    in_x[0] = 1.0;
    for (int j = 0; j <= deg && j < static_cast<int>(profile.coeffs.size()); ++j) {
        const double c = profile.epsilon * profile.coeffs[j];
        if (c == 0.0) continue;
        double binom = 1.0;
        for (int m = 0; m <= j; ++m) {
            in_x[m] += c * binom / std::ldexp(1.0, j);
            binom = binom * (j - m) / (m + 1);
        }
    }

    const auto trial = cheb_trial_coeffs(k);
    std::vector<double> out(trial.coeffs.size() + deg, 0.0);
    for (int m = 0; m <= deg; ++m) {
        if (in_x[m] == 0.0) continue;
        for (std::size_t s = 0; s < trial.coeffs.size(); ++s) {
            if (trial.coeffs[s] == Rational(0)) continue;
            const double ts = boost::rational_cast<double>(trial.coeffs[s]);
            const auto prod = monomial_times_cheb(m, static_cast<int>(s));
            for (std::size_t j = 0; j < prod.size(); ++j) {
                out[j] += in_x[m] * ts * boost::rational_cast<double>(prod[j]);
            }
        }
    }
    return {PolyKind::ShiftedChebyshev, std::move(out)};
}

GalerkinMatrices assemble(const ChebBasisSpec& basis, double a2, const GravityProfile& profile,
                          ChebyshevInnerProduct inner) {
    basis.validate();
    check_a2(a2);
    profile.validate();
    const int n = basis.count;

    std::vector<PolyCoeffs> trial, second, weighted;
    for (int slot = 0; slot < n; ++slot) {
        const int k = basis.index(slot);
        trial.push_back(cheb_trial_coeffs(k).to_double());
        second.push_back(cheb_second_derivative(k).to_double());
        weighted.push_back(gravity_product_coeffs(profile, k));
    }

    const auto product = inner == ChebyshevInnerProduct::Weighted ? weighted_inner_product : l2_inner_product;
    GalerkinMatrices mats{basis, a2, Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            mats.M(i, k) = product(trial[k], trial[i]);
            mats.K(i, k) = product(second[k], trial[i]) - a2 * mats.M(i, k);
            mats.G(i, k) = product(weighted[k], trial[i]);
        }
    }
    check_mass(mats);
    return mats;
}

GalerkinMatrices assemble(const LegBasisSpec& basis, double a2, const GravityProfile& profile) {
    basis.validate();
    check_a2(a2);
    profile.validate();
    const int n = basis.count;

    // Largest integrand is H * phi_n * phi_n: degree 2(n+1) + deg h.
    const auto rule = gauss_legendre(exact_node_count(2 * (n + 1) + profile.degree()));
    const auto nodes = static_cast<Eigen::Index>(rule.nodes.size());
    Eigen::MatrixXd phi(nodes, n), phi2(nodes, n);
    Eigen::VectorXd w(nodes), wh(nodes);
    for (Eigen::Index q = 0; q < nodes; ++q) {
        const double z = rule.nodes[q];
        w(q) = rule.weights[q];
        wh(q) = rule.weights[q] * profile.factor(z);
        for (int slot = 0; slot < n; ++slot) {
            const int i = basis.index(slot);
            phi(q, slot) = leg_trial(i, z);
            phi2(q, slot) = shifted_legendre_derivative(i, z);  // phi_i'' = Q_i'
        }
    }

    GalerkinMatrices mats{basis, a2, {}, {}, {}};
    mats.M = phi.transpose() * w.asDiagonal() * phi;
    mats.K = phi.transpose() * w.asDiagonal() * phi2 - a2 * mats.M;
    mats.G = phi.transpose() * wh.asDiagonal() * phi;
    check_mass(mats);
    return mats;
}

}  // namespace buoyancy
