#include <doctest.h>

#include <cmath>
#include <numbers>

#include "buoyancy/analysis.hpp"
#include "buoyancy/fd_oracle.hpp"
#include "buoyancy/pencil.hpp"

using namespace buoyancy;

namespace {

double closed_form(double a2) {
    const double s = std::numbers::pi * std::numbers::pi + a2;
    return s * s * s / a2;
}

PencilProblem cheb_pencil(int count, double a2, const GravityProfile& profile) {
    return build_pencil(assemble(ChebBasisSpec{count, 0}, a2, profile));
}

}  // namespace

TEST_CASE("pencil block layout") {
    const auto mats = assemble(LegBasisSpec{3}, 4.92, bundled_profile(ProfileFamily::Mixed, 0.5));
    const auto p = build_pencil(mats);
    REQUIRE(p.A.rows() == 9);
    REQUIRE(p.B.cols() == 9);
    CHECK(p.A.block(0, 0, 3, 3) == mats.K);
    CHECK(p.A.block(0, 3, 3, 3) == -mats.M);
    CHECK(p.A.block(3, 3, 3, 3) == mats.K);
    CHECK(p.A.block(6, 6, 3, 3) == mats.K);
    CHECK(p.A.block(3, 0, 3, 3).isZero(0.0));
    CHECK(p.A.block(0, 6, 3, 3).isZero(0.0));
    CHECK(p.B.block(0, 0, 3, 9).isZero(0.0));
    CHECK(p.B.block(3, 6, 3, 3) == -4.92 * mats.G);
    CHECK(p.B.block(6, 0, 3, 3) == mats.M);

    // First block row restates (D^2 - a^2) W = Psi.
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(9, 0.3, 1.7);
    const Eigen::VectorXd row = (p.A + 2.5 * p.B) * x;
    CHECK((row.head(3) - (mats.K * x.head(3) - mats.M * x.segment(3, 3))).norm() < 1e-12);
}

TEST_CASE("determinant at R = 0 is det(K)^3") {
    const auto mats = assemble(ChebBasisSpec{4, 0}, 4.92, bundled_profile(ProfileFamily::Linear, 0.2));
    const auto det = log_determinant(build_pencil(mats), 0.0);
    const double det_k = mats.K.determinant();
    CHECK(det.log_abs == doctest::Approx(3.0 * std::log(std::abs(det_k))).epsilon(1e-10));
    CHECK(det.sign == (det_k > 0 ? 1 : -1));
}

TEST_CASE("single-function Legendre pencil reduces to a scalar cubic") {
    for (double eps : {0.0, 0.3, 0.75}) {
        for (double a2 : {2.0, 4.92, 9.0}) {
            const auto profile = bundled_profile(ProfileFamily::Quadratic, eps);
            const auto mats = assemble(LegBasisSpec{1}, a2, profile);
            const double k = mats.K(0, 0);
            const double m = mats.M(0, 0);
            const double g = mats.G(0, 0);
            // det = K^3 + R^2 a2 M^2 G
            const double expected = -k * k * k / (a2 * m * m * g);
            const auto res = smallest_rayleigh(build_pencil(mats));
            CHECK(res.rayleigh_sq == doctest::Approx(expected).epsilon(1e-10));
            CHECK(res.residual < kResidualTolerance);
        }
    }
}

TEST_CASE("build_pencil rejects mismatched blocks") {
    const Eigen::MatrixXd k3 = -Eigen::MatrixXd::Identity(3, 3);
    const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS((void)build_pencil(k3, i2, k3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_pencil(k3, k3, i2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_pencil(Eigen::MatrixXd::Zero(2, 3), i2, i2, 1.0), std::invalid_argument);
}

TEST_CASE("uniform gravity, four-term Chebyshev expansion") {
    const auto res = smallest_rayleigh(cheb_pencil(5, 4.92, bundled_profile(ProfileFamily::Linear, 0.0)));
    CHECK(res.rayleigh_sq == doctest::Approx(657.5169).epsilon(1e-6));
    CHECK(std::abs(res.rayleigh_sq - 657.512) / 657.512 < 1e-4);
    CHECK(res.residual < kResidualTolerance);
    CHECK(res.spectrum_real);
    CHECK(std::abs(res.eigvec.norm() - 1.0) < 1e-12);
}

TEST_CASE("uniform gravity closed form") {
    const double a2 = std::numbers::pi * std::numbers::pi / 2.0;
    const double exact = 27.0 * std::pow(std::numbers::pi, 4) / 4.0;
    for (int n = 8; n <= 16; n += 4) {
        const auto cheb = smallest_rayleigh(cheb_pencil(n, a2, bundled_profile(ProfileFamily::Linear, 0.0)));
        CHECK(std::abs(cheb.rayleigh_sq - exact) / exact < 1e-3);
        const auto leg = smallest_rayleigh(build_pencil(assemble(LegBasisSpec{n}, a2, bundled_profile(ProfileFamily::Linear, 0.0))));
        CHECK(std::abs(leg.rayleigh_sq - exact) / exact < 1e-3);
    }
    for (double a2 : {1.0, 3.0, 4.92, 8.0, 10.0}) {
        const auto leg = smallest_rayleigh(build_pencil(assemble(LegBasisSpec{12}, a2, bundled_profile(ProfileFamily::Linear, 0.0))));
        CHECK(leg.rayleigh_sq == doctest::Approx(closed_form(a2)).epsilon(1e-9));
    }
}

TEST_CASE("Galerkin and finite differences agree on a varying profile") {
    const auto profile = bundled_profile(ProfileFamily::Mixed, 0.5);
    const double galerkin = smallest_rayleigh(cheb_pencil(16, 9.0, profile)).rayleigh_sq;
    const double fd = fd_smallest_rayleigh(FdGrid{400}, 9.0, profile).rayleigh_sq;
    CHECK(std::abs(galerkin - fd) / fd < 1e-3);
}

TEST_CASE("determinant scan brackets the eigensolve root") {
    const auto pencil = cheb_pencil(5, 4.92, bundled_profile(ProfileFamily::Linear, 0.0));
    const auto eig = smallest_rayleigh(pencil);

    const auto brackets = determinant_scan(pencil, 1.0, 40.0, 400);
    REQUIRE(!brackets.empty());
    CHECK(brackets.front().lo < 25.64);
    CHECK(brackets.front().hi > 25.64);
    const double root = refine_root(pencil, brackets.front());
    CHECK(std::abs(root - eig.r_signed) / eig.r_signed < 1e-6);

    CHECK(determinant_scan(pencil, 0.001, 1.0, 200).empty());

    CHECK_THROWS_AS((void)determinant_scan(pencil, 0.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)determinant_scan(pencil, 2.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)determinant_scan(pencil, 1.0, 2.0, 1), std::invalid_argument);
}

TEST_CASE("eigenvalues come in +-R pairs") {
    const auto pencil = cheb_pencil(6, 7.0, bundled_profile(ProfileFamily::Quadratic, 0.3));
    const auto values = finite_eigenvalues(pencil);
    const auto res = smallest_rayleigh(pencil);
    bool found_negative = false;
    for (const auto& v : values) {
        if (std::abs(v.real() + res.r_signed) < 1e-6 * res.r_signed && std::abs(v.imag()) < 1e-6 * res.r_signed) {
            found_negative = true;
        }
    }
    CHECK(found_negative);
    const auto flipped = null_vector(pencil, -res.r_signed);
    CHECK(flipped.residual < 1e-8);
}

TEST_CASE("reality test") {
    CHECK(is_effectively_real({3.0, 0.0}));
    CHECK(is_effectively_real({1000.0, 1e-4}));
    CHECK_FALSE(is_effectively_real({1.0, 1e-3}));
}

TEST_CASE("no positive real root without buoyancy") {
    const auto mats = assemble(LegBasisSpec{4}, 4.92, bundled_profile(ProfileFamily::Linear, 0.0));
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(4, 4);
    CHECK_THROWS_AS((void)smallest_rayleigh(build_pencil(mats.K, mats.M, zero, 4.92)), NoNeutralValue);
}
