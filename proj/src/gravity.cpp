#include "buoyancy/gravity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace buoyancy {

int GravityProfile::degree() const {
    for (int j = static_cast<int>(coeffs.size()) - 1; j > 0; --j) {
        if (coeffs[j] != 0.0) return j;
    }
    return 0;
}

double GravityProfile::h(double z) const {
    double sum = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * z + *it;
    return sum;
}

void GravityProfile::validate() const {
    if (!std::isfinite(epsilon) || epsilon < 0.0) {
        throw std::invalid_argument("gravity scale epsilon must be finite and >= 0");
    }
    for (double c : coeffs) {
        if (!std::isfinite(c)) throw std::invalid_argument("gravity profile coefficients must be finite");
    }
    if (degree() > kMaxDegree) {
        throw std::invalid_argument("gravity profile degree " + std::to_string(degree()) +
                                    " exceeds the supported maximum of 8");
    }
}

double GravityProfile::min_factor(int samples) const {
    double lowest = factor(0.0);
    for (int j = 1; j < samples; ++j) {
        lowest = std::min(lowest, factor(static_cast<double>(j) / (samples - 1)));
    }
    return lowest;
}

GravityProfile GravityProfile::with_epsilon(double eps) const {
    GravityProfile out = *this;
    out.epsilon = eps;
    return out;
}

GravityProfile bundled_profile(ProfileFamily family, double epsilon) {
    switch (family) {
        case ProfileFamily::Linear: return {"linear", {0.0, -1.0}, epsilon};
        case ProfileFamily::Quadratic: return {"quadratic", {0.0, 0.0, -1.0}, epsilon};
        case ProfileFamily::Mixed: return {"mixed", {0.0, -2.0, 1.0}, epsilon};
    }
    throw std::invalid_argument("unknown profile family");
}

GravityProfile custom_profile(std::vector<double> powers_from_one, double epsilon) {
    GravityProfile out{"custom", {0.0}, epsilon};
    out.coeffs.insert(out.coeffs.end(), powers_from_one.begin(), powers_from_one.end());
    out.validate();
    return out;
}

std::string_view to_string(ProfileFamily family) {
    switch (family) {
        case ProfileFamily::Linear: return "linear";
        case ProfileFamily::Quadratic: return "quadratic";
        case ProfileFamily::Mixed: return "mixed";
    }
    return "unknown";
}

ProfileFamily parse_profile_family(std::string_view name) {
    if (name == "linear") return ProfileFamily::Linear;
    if (name == "quadratic") return ProfileFamily::Quadratic;
    if (name == "mixed") return ProfileFamily::Mixed;
    throw std::invalid_argument("unknown profile family '" + std::string(name) + "'");
}

}  // namespace buoyancy
