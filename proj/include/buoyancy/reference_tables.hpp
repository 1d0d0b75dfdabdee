#pragma once

#include <array>

#include "buoyancy/gravity.hpp"

namespace buoyancy {

/// Published neutral Rayleigh numbers R^2 for one gravity field, with the number
/// of decimals each value was printed with.
struct ReferenceRow {
    double epsilon;
    double a2;
    double r2_scp;
    double r2_slp;
    int scp_decimals;
    int slp_decimals;
};

using ReferenceTable = std::array<ReferenceRow, 9>;

// clang-format off
inline constexpr ReferenceTable kLinearTable{{
    {0.0,  4.92, 657.512,  675.05,  3, 2},
    {0.01, 4.92, 660.747,  678.45,  3, 2},
    {0.03, 4.92, 667.653,  685.33,  3, 2},
    {0.33, 4.92, 787.363,  808.303, 3, 3},
    {0.2,  5.00, 730.459,  749.95,  3, 2},
    {0.2,  9.00, 829.44,   846.70,  2, 2},
    {0.5,  7.5,  930.982,  952.07,  3, 2},
    {0.5,  9.00, 994.393,  1015.27, 3, 2},
    {0.75, 10.0, 1251.178, 1276.05, 3, 2},
}};

inline constexpr ReferenceTable kQuadraticTable{{
    {0.0,  4.92, 657.512, 675.05,  3, 2},
    {0.01, 4.92, 659.41,  676.99,  2, 2},
    {0.03, 4.92, 663.17,  680.90,  2, 2},
    {0.33, 4.92, 725.06,  745.21,  2, 2},
    {0.2,  5.00, 696.80,  715.87,  2, 2},
    {0.2,  9.00, 791.24,  808.22,  2, 2},
    {0.5,  7.5,  813.28,  833.21,  2, 2},
    {0.5,  9.00, 868.72,  888.54,  2, 2},
    {0.75, 10.0, 993.51,  1016.20, 2, 2},
}};

inline constexpr ReferenceTable kMixedTable{{
    {0.0,  4.92, 657.512, 675.05,  3, 2},
    {0.01, 4.92, 662.29,  679.91,  2, 2},
    {0.03, 4.92, 671.95,  689.83,  2, 2},
    {0.33, 4.92, 861.25,  882.05,  2, 2},
    {0.2,  5.00, 767.40,  787.44,  2, 2},
    {0.2,  9.00, 871.37,  889.03,  2, 2},
    {0.5,  7.5,  1088.2,  1110.46, 1, 2},
    {0.5,  9.00, 1162.4,  1184.11, 1, 2},
    {0.75, 10.0, 1687.8,  1713.45, 1, 2},
}};
// clang-format on

[[nodiscard]] constexpr const ReferenceTable& reference_table(ProfileFamily family) {
    switch (family) {
        case ProfileFamily::Quadratic: return kQuadraticTable;
        case ProfileFamily::Mixed: return kMixedTable;
        case ProfileFamily::Linear: break;
    }
    return kLinearTable;
}

inline constexpr std::array<ProfileFamily, 3> kProfileFamilies{ProfileFamily::Linear, ProfileFamily::Quadratic,
                                                              ProfileFamily::Mixed};

}  // namespace buoyancy
