#include "buoyancy/bases.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace buoyancy {

namespace {

void check_unit_interval(double z) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw std::domain_error("z = " + std::to_string(z) + " lies outside [0, 1]");
    }
}

void check_degree(int k) {
    if (k < 0) throw std::invalid_argument("negative polynomial degree " + std::to_string(k));
}

// Adds weight(r) * T*_r for r = 0..upper with (top - r) of the given parity.
// A sum that starts at r = 0 contributes only half of its r = 0 term.
template <typename Weight>
void add_parity_sum(std::vector<Rational>& out, int upper, int top, int parity, Weight weight) {
    for (int r = 0; r <= upper; ++r) {
        if (((top - r) % 2 + 2) % 2 != parity) continue;
        Rational term = weight(r);
        if (r == 0) term /= 2;
        out[r] += term;
    }
}

std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, Rational c0, Rational c1) {
    // p(z) * (c0 + c1 z)
    std::vector<Rational> out(p.size() + 1, Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j] += c0 * p[j];
        out[j + 1] += c1 * p[j];
    }
    return out;
}

std::vector<Rational> poly_axpy(const std::vector<Rational>& x, Rational a, const std::vector<Rational>& y) {
    // a*x + y
    std::vector<Rational> out(std::max(x.size(), y.size()), Rational(0));
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += a * x[j];
    for (std::size_t j = 0; j < y.size(); ++j) out[j] += y[j];
    return out;
}

}  // namespace

double shifted_chebyshev(int k, double z) {
    check_degree(k);
    check_unit_interval(z);
    const double x = 2.0 * z - 1.0;
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int n = 2; n <= k; ++n) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double shifted_legendre(int k, double z) {
    check_degree(k);
    check_unit_interval(z);
    const double x = 2.0 * z - 1.0;
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int n = 1; n < k; ++n) {
        const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double shifted_legendre_derivative(int k, double z) {
    check_degree(k);
    check_unit_interval(z);
    if (k == 0) return 0.0;
    // Q'_{i+1} = Q'_{i-1} + 2(2i+1) Q_i, with Q'_0 = 0 and Q'_1 = 2.
    double d_prev = 0.0;
    double d_cur = 2.0;
    for (int i = 1; i < k; ++i) {
        const double d_next = d_prev + 2.0 * (2.0 * i + 1.0) * shifted_legendre(i, z);
        d_prev = d_cur;
        d_cur = d_next;
    }
    return d_cur;
}

double cheb_trial(int k, double z) {
    return shifted_chebyshev(k, z) - shifted_chebyshev(k + 2, z);
}

double leg_trial(int i, double z) {
    if (i < 1) throw std::invalid_argument("Legendre trial index must be >= 1, got " + std::to_string(i));
    return (shifted_legendre(i + 1, z) - shifted_legendre(i - 1, z)) / (2.0 * (2.0 * i + 1.0));
}

double PolyCoeffs::operator()(double z) const {
    check_unit_interval(z);
    if (coeffs.empty()) return 0.0;
    const double x = 2.0 * z - 1.0;
    if (kind == PolyKind::ShiftedChebyshev) {
        // Clenshaw
        double b1 = 0.0;
        double b2 = 0.0;
        for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
            const double b0 = coeffs[j] + 2.0 * x * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        return coeffs[0] + x * b1 - b2;
    }
    double sum = coeffs[0];
    double prev = 1.0;
    double cur = x;
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        sum += coeffs[n] * cur;
        const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return sum;
}

PolyCoeffs ExactCoeffs::to_double() const {
    PolyCoeffs out{kind, {}};
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) out.coeffs.push_back(boost::rational_cast<double>(c));
    return out;
}

void ChebBasisSpec::validate() const {
    if (count < 1) throw std::invalid_argument("Chebyshev basis needs at least one function");
    if (first < 0 || first > 1) throw std::invalid_argument("Chebyshev basis must start at index 0 or 1");
}

void LegBasisSpec::validate() const {
    if (count < 1) throw std::invalid_argument("Legendre basis needs at least one function");
}

ExactCoeffs cheb_trial_coeffs(int k) {
    check_degree(k);
    ExactCoeffs out{PolyKind::ShiftedChebyshev, std::vector<Rational>(k + 3, Rational(0))};
    out.coeffs[k] = 1;
    out.coeffs[k + 2] = -1;
    return out;
}

ExactCoeffs cheb_first_derivative(int k) {
    check_degree(k);
    ExactCoeffs out{PolyKind::ShiftedChebyshev, std::vector<Rational>(k + 2, Rational(0))};
    // The outer factor 2 is the chain rule for z -> 2z - 1.
    const std::int64_t kk = k;
    add_parity_sum(out.coeffs, k - 1, k, 1, [&](int) { return Rational(2 * 2 * kk); });
    add_parity_sum(out.coeffs, k + 1, k + 2, 1, [&](int) { return Rational(-2 * 2 * (kk + 2)); });
    return out;
}

ExactCoeffs cheb_second_derivative(int k) {
    check_degree(k);
    ExactCoeffs out{PolyKind::ShiftedChebyshev, std::vector<Rational>(k + 1, Rational(0))};
    const std::int64_t kk = k;
    add_parity_sum(out.coeffs, k - 2, k, 0,
                   [&](int r) { return Rational(4 * (kk - r) * kk * (kk + r)); });
    add_parity_sum(out.coeffs, k, k + 2, 0,
                   [&](int r) { return Rational(-4 * (kk + 2 - r) * (kk + 2) * (kk + 2 + r)); });
    return out;
}

std::vector<Rational> monomial_times_cheb(int r, int s) {
    check_degree(r);
    check_degree(s);
    std::vector<Rational> out(static_cast<std::size_t>(r + s + 1), Rational(0));
    const Rational scale(1, std::int64_t{1} << r);
    std::int64_t binom = 1;  // C(r, i)
    for (int i = 0; i <= r; ++i) {
        const int idx = std::abs(s - r + 2 * i);
        out[idx] += scale * binom;
        binom = binom * (r - i) / (i + 1);
    }
    while (out.size() > 1 && out.back() == Rational(0)) out.pop_back();
    return out;
}

std::vector<Rational> shifted_chebyshev_monomial(int k) {
    check_degree(k);
    std::vector<Rational> prev{Rational(1)};
    if (k == 0) return prev;
    std::vector<Rational> cur{Rational(-1), Rational(2)};
    for (int n = 2; n <= k; ++n) {
        auto next = poly_axpy(poly_mul_linear(cur, -2, 4), 1, [&] {
            auto neg = prev;
            for (auto& c : neg) c = -c;
            return neg;
        }());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> shifted_legendre_monomial(int k) {
    check_degree(k);
    std::vector<Rational> prev{Rational(1)};
    if (k == 0) return prev;
    std::vector<Rational> cur{Rational(-1), Rational(2)};
    for (int n = 1; n < k; ++n) {
        const Rational a(2 * n + 1, n + 1);
        const Rational b(-n, n + 1);
        auto next = poly_axpy(prev, b, poly_mul_linear(cur, -a, 2 * a));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> to_monomial(const ExactCoeffs& f) {
    std::vector<Rational> out(f.coeffs.size(), Rational(0));
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
        if (f.coeffs[j] == Rational(0)) continue;
        const auto basis = f.kind == PolyKind::ShiftedChebyshev
                               ? shifted_chebyshev_monomial(static_cast<int>(j))
                               : shifted_legendre_monomial(static_cast<int>(j));
        for (std::size_t p = 0; p < basis.size(); ++p) out[p] += f.coeffs[j] * basis[p];
    }
    return out;
}

}  // namespace buoyancy
