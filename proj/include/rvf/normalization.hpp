#pragma once

#include <array>
#include <string>

#include "rvf/rational.hpp"

namespace rvf {

/// Which coordinates solve the vector field: Scaled means the solution is
/// (a_1 E_2, a_2 E_4, a_3 E_6) with a = (-1/12, 1/12, -1/216); Classical
/// means (E_2, E_4, E_6).
enum class Normalization { Scaled, Classical };

inline std::array<BigRational, 3> eisenstein_scales(Normalization n) {
    if (n == Normalization::Scaled) {
        return {BigRational(-1, 12), BigRational(1, 12), BigRational(-1, 216)};
    }
    return {BigRational(1), BigRational(1), BigRational(1)};
}

inline std::string to_string(Normalization n) {
    return n == Normalization::Scaled ? "scaled" : "classical";
}

}  // namespace rvf
