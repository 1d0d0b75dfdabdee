#pragma once

#include <functional>
#include <vector>

namespace buoyancy {

/// Nodes and weights on [0, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] double integrate(const std::function<double(double)>& f) const;
};

/// Gauss-Legendre rule for int_0^1 f(z) dz; exact for polynomials of degree <= 2*count - 1.
[[nodiscard]] QuadratureRule gauss_legendre(int count);

/// Gauss-Chebyshev rule for int_0^1 f(z) / sqrt(z(1-z)) dz; exact to degree 2*count - 1.
[[nodiscard]] QuadratureRule gauss_chebyshev(int count);

/// Smallest Gauss node count that integrates a polynomial of the given degree exactly.
[[nodiscard]] constexpr int exact_node_count(int degree) { return degree / 2 + 1; }

}  // namespace buoyancy
