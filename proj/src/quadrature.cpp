#include "buoyancy/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace buoyancy {

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += weights[j] * f(nodes[j]);
    return sum;
}

QuadratureRule gauss_legendre(int count) {
    if (count < 1) throw std::invalid_argument("quadrature needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    const int half = (count + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int n = 1; n < count; ++n) {
                const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Map [-1,1] -> [0,1]; the Jacobian 1/2 goes into the weights.
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[count - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = w;
        rule.weights[count - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_chebyshev(int count) {
    if (count < 1) throw std::invalid_argument("quadrature needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(count);
    rule.weights.assign(count, std::numbers::pi / count);
    for (int j = 0; j < count; ++j) {
        const double x = std::cos(std::numbers::pi * (2.0 * j + 1.0) / (2.0 * count));
        rule.nodes[j] = 0.5 * (1.0 + x);
    }
    return rule;
}

}  // namespace buoyancy
