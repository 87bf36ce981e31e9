#pragma once

#include <array>
#include <vector>

#include "tridec/common.hpp"

namespace tridec {

enum class Group2 { SO2, O2 };

// Linear representation of (theta, reflection) in O(2) on the coefficient
// vector (a0, a1, a2, a3) of a 2x2x2 trilinear tensor.
std::array<std::array<double, 4>, 4> rep_matrix(double theta, bool reflected);

struct MolienSeries {
    std::vector<long long> coefficients;  // rounded; index = degree
    std::vector<double> raw;              // pre-rounding quadrature values
    int max_degree = 0;
};

// Numeric Molien/Hilbert series: trapezoid average over the circle of the
// reciprocal characteristic polynomial det(1 - lambda L)^{-1}, truncated at
// max_degree.  Requires max_degree <= 40 and quadrature_points >= 4*max_degree
// (spectral exactness bound for the trigonometric integrands).
MolienSeries molien_series(Group2 group, int max_degree, int quadrature_points = 0);

}  // namespace tridec
