#include "buoyancy/fd_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace buoyancy {

namespace {

// Symmetric tridiagonal operator with constant diagonal and off-diagonal.
struct Tridiagonal {
    double diag;
    double off;

    [[nodiscard]] Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
        const Eigen::Index m = x.size();
        Eigen::VectorXd y = diag * x;
        y.head(m - 1) += off * x.tail(m - 1);
        y.tail(m - 1) += off * x.head(m - 1);
        return y;
    }

    // Thomas algorithm; K is strictly diagonally dominant so no pivoting is needed.
    [[nodiscard]] Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
        const Eigen::Index m = rhs.size();
        Eigen::VectorXd c(m), d(m);
        c(0) = off / diag;
        d(0) = rhs(0) / diag;
        for (Eigen::Index j = 1; j < m; ++j) {
            const double denom = diag - off * c(j - 1);
            c(j) = off / denom;
            d(j) = (rhs(j) - off * d(j - 1)) / denom;
        }
        Eigen::VectorXd x(m);
        x(m - 1) = d(m - 1);
        for (Eigen::Index j = m - 2; j >= 0; --j) x(j) = d(j) - c(j) * x(j + 1);
        return x;
    }
};

Tridiagonal stiffness(const FdGrid& grid, double a2) {
    const double h = grid.spacing();
    return {(-2.0 - a2 * h * h) / (h * h), 1.0 / (h * h)};
}

Eigen::VectorXd gravity_diagonal(const FdGrid& grid, const GravityProfile& profile) {
    Eigen::VectorXd g(grid.m);
    for (int j = 0; j < grid.m; ++j) g(j) = profile.factor(grid.node(j + 1));
    return g;
}

void check_inputs(const FdGrid& grid, double a2, const GravityProfile& profile) {
    grid.validate();
    if (!(a2 > 0.0) || !std::isfinite(a2)) throw std::invalid_argument("squared wavenumber a2 must be > 0");
    profile.validate();
}

}  // namespace

void FdGrid::validate() const {
    if (m < 8) throw std::invalid_argument("finite-difference grid needs m >= 8, got " + std::to_string(m));
}

PencilProblem fd_pencil(const FdGrid& grid, double a2, const GravityProfile& profile) {
    check_inputs(grid, a2, profile);
    const auto op = stiffness(grid, a2);
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(grid.m, grid.m);
    for (int j = 0; j < grid.m; ++j) {
        K(j, j) = op.diag;
        if (j + 1 < grid.m) K(j, j + 1) = K(j + 1, j) = op.off;
    }
    const Eigen::MatrixXd M = Eigen::MatrixXd::Identity(grid.m, grid.m);
    const Eigen::MatrixXd G = gravity_diagonal(grid, profile).asDiagonal();
    return build_pencil(K, M, G, a2);
}

NeutralResult fd_smallest_rayleigh(const FdGrid& grid, double a2, const GravityProfile& profile) {
    check_inputs(grid, a2, profile);
    const auto K = stiffness(grid, a2);
    const Eigen::VectorXd g = gravity_diagonal(grid, profile);
    if (g.minCoeff() <= 0.0) {
        throw NoNeutralValue("no neutral value in range: gravity factor is not positive on the grid");
    }

    // Iterate on Psi through the cyclic chain W = K^-1 Psi, Theta = -R K^-1 W,
    // Psi = R a2 K^-1 G Theta. Every block of the final vector then comes out of a
    // tridiagonal solve, which keeps rough grid modes out of the residual.
    Eigen::VectorXd psi(grid.m);
    for (int j = 0; j < grid.m; ++j) psi(j) = std::sin(std::numbers::pi * grid.node(j + 1));
    psi.normalize();

    Eigen::VectorXd w = K.solve(psi);
    Eigen::VectorXd v = K.solve(w);
    // Rayleigh quotient of -K^3 v = R^2 a2 G v with K v = w, K w = psi.
    auto quotient = [&] { return -w.dot(psi) / (a2 * v.dot(g.cwiseProduct(v))); };
    double lambda = quotient();
    // The quotient settles long before the vector does; iterate on the vector.
    for (int iter = 0; iter < 500; ++iter) {
        Eigen::VectorXd next = -K.solve(a2 * g.cwiseProduct(v));
        next.normalize();
        const double change = (next - psi).norm();
        psi = std::move(next);
        w = K.solve(psi);
        v = K.solve(w);
        lambda = quotient();
        if (change < 1e-14) break;
    }

    NeutralResult result;
    result.rayleigh_sq = lambda;
    result.r_signed = std::sqrt(lambda);
    const double r = result.r_signed;

    const Eigen::Index m = grid.m;
    result.eigvec.resize(3 * m);
    result.eigvec << w, psi, -r * v;
    result.eigvec /= result.eigvec.norm();

    const auto x_w = result.eigvec.segment(0, m);
    const auto x_psi = result.eigvec.segment(m, m);
    const auto x_theta = result.eigvec.segment(2 * m, m);
    Eigen::VectorXd res(3 * m);
    res << K.apply(x_w) - x_psi,                            //
        K.apply(x_psi) - r * a2 * g.cwiseProduct(x_theta),  //
        K.apply(x_theta) + r * x_w;
    result.residual = res.norm();
    if (!(result.residual < kResidualTolerance)) {
        throw NumericalFailure("finite-difference residual " + std::to_string(result.residual) +
                                   " exceeds tolerance",
                               result.residual);
    }
    return result;
}

double fd_extrapolated_rayleigh(const FdGrid& grid, double a2, const GravityProfile& profile) {
    const FdGrid coarse{(grid.m - 1) / 2};
    const double fine_r2 = fd_smallest_rayleigh(grid, a2, profile).rayleigh_sq;
    const double coarse_r2 = fd_smallest_rayleigh(coarse, a2, profile).rayleigh_sq;
    const double hf2 = grid.spacing() * grid.spacing();
    const double hc2 = coarse.spacing() * coarse.spacing();
    return (fine_r2 * hc2 - coarse_r2 * hf2) / (hc2 - hf2);
}

}  // namespace buoyancy
