#include "polydisc/constants.hpp"

#include <array>
#include <stdexcept>

namespace polydisc::constants {

namespace {

const std::array<CertifiedConstant, 3> table = {{
    {"catalan", catalan,
     "alternating series sum (-1)^k/(2k+1)^2, 10^6 terms, consecutive "
     "partial sums averaged to accelerate the tail"},
    {"euler_gamma", euler_gamma,
     "Richardson extrapolation of H_n - log n over n = 10^5 * 2^k"},
    {"ganelius_factor", ganelius_factor,
     "sqrt(2*pi/catalan); certified via ganelius_factor^2 * catalan == 2*pi"},
}};

}  // namespace

const CertifiedConstant& get(const std::string& name) {
    for (const auto& c : table) {
        if (c.name == name) return c;
    }
    throw std::invalid_argument("unknown constant: " + name);
}

}  // namespace polydisc::constants
