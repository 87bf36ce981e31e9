#include "tridec/molien.hpp"

#include <cmath>

namespace tridec {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

using M4 = std::array<std::array<double, 4>, 4>;

// Coefficients c[0..4] of det(1 - lambda M) for a 4x4 matrix, via the
// elementary symmetric functions of M (principal minors).
std::array<double, 5> char_poly_rev(const M4& m) {
    double t1 = 0;
    for (int i = 0; i < 4; ++i) t1 += m[i][i];
    double t2 = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) t2 += m[i][i] * m[j][j] - m[i][j] * m[j][i];
    double t3 = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                t3 += m[i][i] * (m[j][j] * m[k][k] - m[j][k] * m[k][j]) -
                      m[i][j] * (m[j][i] * m[k][k] - m[j][k] * m[k][i]) +
                      m[i][k] * (m[j][i] * m[k][j] - m[j][j] * m[k][i]);
            }
    // det by cofactor expansion along the first row
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    double t4 = m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
                m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
    return {1.0, -t1, t2, -t3, t4};
}

// Truncated power series of 1/c(lambda) with c(0) = 1, via the linear
// recurrence s_m = -sum_{j=1..4} c_j s_{m-j}.
void accumulate_reciprocal(const std::array<double, 5>& c, std::vector<double>& acc) {
    const int d = int(acc.size()) - 1;
    std::vector<double> s(d + 1, 0.0);
    s[0] = 1.0;
    for (int m = 1; m <= d; ++m) {
        double v = 0;
        for (int j = 1; j <= 4 && j <= m; ++j) v -= c[j] * s[m - j];
        s[m] = v;
    }
    for (int m = 0; m <= d; ++m) acc[m] += s[m];
}

}  // namespace

std::array<std::array<double, 4>, 4> rep_matrix(double theta, bool reflected) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double c2 = c * c, c3 = c2 * c, s2 = s * s, s3 = s2 * s;
    M4 m = {{{c3, 3 * s * c2, 3 * s2 * c, s3},
             {-s * c2, c3 - 2 * s2 * c, 2 * s * c2 - s3, s2 * c},
             {s2 * c, s3 - 2 * s * c2, c3 - 2 * s2 * c, s * c2},
             {-s3, 3 * s2 * c, -3 * s * c2, c3}}};
    if (!reflected) return m;
    // reflection N maps (a0,a1,a2,a3) -> (a3,a2,a1,a0); L_(theta,1) = N L_theta
    M4 r;
    for (int i = 0; i < 4; ++i) r[i] = m[3 - i];
    return r;
}

MolienSeries molien_series(Group2 group, int max_degree, int quadrature_points) {
    if (max_degree < 0 || max_degree > 40)
        throw std::invalid_argument("molien_series: max_degree must be in [0, 40]");
    if (quadrature_points == 0) quadrature_points = std::max(4 * max_degree + 8, 64);
    if (quadrature_points < 4 * max_degree)
        throw std::invalid_argument("molien_series: need quadrature_points >= 4*max_degree");

    std::vector<double> rot(max_degree + 1, 0.0);
    std::vector<double> refl(max_degree + 1, 0.0);
    for (int k = 0; k < quadrature_points; ++k) {
        double theta = kTwoPi * k / quadrature_points;
        accumulate_reciprocal(char_poly_rev(rep_matrix(theta, false)), rot);
        if (group == Group2::O2)
            accumulate_reciprocal(char_poly_rev(rep_matrix(theta, true)), refl);
    }

    MolienSeries out;
    out.max_degree = max_degree;
    out.raw.resize(max_degree + 1);
    out.coefficients.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        double v = rot[d] / quadrature_points;
        if (group == Group2::O2) v = 0.5 * (v + refl[d] / quadrature_points);
        out.raw[d] = v;
        out.coefficients[d] = llround(v);
    }
    return out;
}

}  // namespace tridec
