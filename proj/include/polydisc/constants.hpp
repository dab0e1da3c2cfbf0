#pragma once

#include <string>

namespace polydisc::constants {

// Catalan's constant, sum_{k>=0} (-1)^k/(2k+1)^2.
inline constexpr double catalan = 0.9159655941772190;

// Euler-Mascheroni constant, lim (H_n - log n).
inline constexpr double euler_gamma = 0.5772156649015329;

// sqrt(2*pi/catalan), the prefactor of the Erdos-Turan-Ganelius
// discrepancy bound.
inline constexpr double ganelius_factor = 2.6190895861472393;

/// A named constant together with a description of the independent
/// computation that certifies its stored value (the oracle itself runs
/// in the test suite).
struct CertifiedConstant {
    std::string name;
    double value;
    std::string oracle;
};

/// Look up a constant by name: "catalan", "euler_gamma" or
/// "ganelius_factor". Throws std::invalid_argument for unknown names.
const CertifiedConstant& get(const std::string& name);

}  // namespace polydisc::constants
