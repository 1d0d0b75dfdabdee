#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace buoyancy {

/// The three gravity fields tabulated in the reference tables.
enum class ProfileFamily { Linear, Quadratic, Mixed };

/// Gravity factor H(z) = 1 + epsilon * h(z), h(z) = sum_j coeffs[j] z^j.
struct GravityProfile {
    std::string name;
    std::vector<double> coeffs;  // coeffs[j] multiplies z^j
    double epsilon = 0.0;

    static constexpr int kMaxDegree = 8;

    [[nodiscard]] int degree() const;
    [[nodiscard]] double h(double z) const;
    [[nodiscard]] double factor(double z) const { return 1.0 + epsilon * h(z); }

    /// Throws std::invalid_argument on a negative or non-finite epsilon,
    /// non-finite coefficients, or degree above kMaxDegree.
    void validate() const;

    /// Smallest sampled value of H on [0,1].
    [[nodiscard]] double min_factor(int samples = 1001) const;

    [[nodiscard]] GravityProfile with_epsilon(double eps) const;
};

/// h(z) = -z, -z^2 and z^2 - 2z respectively.
[[nodiscard]] GravityProfile bundled_profile(ProfileFamily family, double epsilon = 0.0);

/// Profile from a list of coefficients of z, z^2, ... (no constant term).
[[nodiscard]] GravityProfile custom_profile(std::vector<double> powers_from_one, double epsilon = 0.0);

[[nodiscard]] std::string_view to_string(ProfileFamily family);
[[nodiscard]] ProfileFamily parse_profile_family(std::string_view name);

}  // namespace buoyancy
