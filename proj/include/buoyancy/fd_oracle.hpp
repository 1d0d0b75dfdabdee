#pragma once

#include "buoyancy/gravity.hpp"
#include "buoyancy/pencil.hpp"

namespace buoyancy {

/// Uniform interior grid z_j = j h, j = 1..m, h = 1/(m+1); Dirichlet values at 0 and 1.
struct FdGrid {
    int m = 400;

    [[nodiscard]] double spacing() const { return 1.0 / (m + 1); }
    [[nodiscard]] double node(int j) const { return j * spacing(); }
    void validate() const;
};

/// Second-order central-difference blocks: K = tridiag(1, -2 - a2 h^2, 1) / h^2, M = I,
/// G = diag(1 + eps h(z_j)). Dense; meant for small grids and cross-checks.
[[nodiscard]] PencilProblem fd_pencil(const FdGrid& grid, double a2, const GravityProfile& profile);

/// Smallest positive neutral value of the finite-difference pencil.
///
/// With M = I the pencil collapses to -K^3 v = R^2 a2 G v, a symmetric-definite
/// problem whose eigenvalues are exactly the squares of the pencil eigenvalues.
/// Its lowest mode is found by inverse iteration with tridiagonal solves; the
/// residual is measured on the full 3m x 3m pencil.
[[nodiscard]] NeutralResult fd_smallest_rayleigh(const FdGrid& grid, double a2, const GravityProfile& profile);

/// Richardson extrapolation of R^2 from grids m and (m - 1) / 2 (second order in h).
[[nodiscard]] double fd_extrapolated_rayleigh(const FdGrid& grid, double a2, const GravityProfile& profile);

}  // namespace buoyancy
