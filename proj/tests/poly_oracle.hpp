#pragma once

// Test-only helpers working on monomial coefficient lists (powers of z).

#include <vector>

#include "buoyancy/bases.hpp"

namespace buoyancy::testing {

inline std::vector<Rational> differentiate(const std::vector<Rational>& p) {
    if (p.size() <= 1) return {Rational(0)};
    std::vector<Rational> out(p.size() - 1, Rational(0));
    for (std::size_t j = 1; j < p.size(); ++j) out[j - 1] = p[j] * static_cast<std::int64_t>(j);
    return out;
}

inline std::vector<Rational> trimmed(std::vector<Rational> p) {
    while (p.size() > 1 && p.back() == Rational(0)) p.pop_back();
    return p;
}

// Extended precision: monomial forms of degree ~10 cancel heavily on [0,1].
inline double horner(const std::vector<Rational>& p, double z) {
    long double sum = 0.0L;
    for (auto it = p.rbegin(); it != p.rend(); ++it) sum = sum * z + boost::rational_cast<long double>(*it);
    return static_cast<double>(sum);
}

}  // namespace buoyancy::testing
