#pragma once

#include <string>
#include <vector>

#include "tridec/invariants.hpp"

namespace tridec {

template <class K>
struct RelationResidual {
    std::string name;   // invariant pinned by the relation
    int degree;         // homogeneity degree in Gamma, for scale-aware thresholds
    K value;            // LHS - RHS; zero exactly on the membership variety
    double coef_scale;  // magnitude of the largest integer coefficient in the
                        // cleared relation; float thresholds are scaled by it
};

// The 13 relations certifying full decoupleability for n=3, written in the
// characteristic-polynomial invariants (qt1, qt2, qt3) of Gamma*2.  Residuals
// are invariant - polynomial(qt).
template <class K>
std::vector<RelationResidual<K>> fd_relation_residuals(const InvariantSetN3<K>& b,
                                                       const QTilde<K>& qt) {
    const K &q1 = qt.q[0], &q2 = qt.q[1], &q3 = qt.q[2];
    const K q1s = q1 * q1;
    std::vector<RelationResidual<K>> r;
    r.reserve(13);
    r.push_back({"H2", 2, b.H2 - K(10) * q1, 10.0});
    r.push_back({"H4", 4, b.H4 - K(2) * (K(22) * q1s - K(15) * q2), 44.0});
    r.push_back({"J2", 2, b.J2 - q1, 1.0});
    r.push_back({"L4", 4, b.L4 - K(2) * (q1s - K(5) * q2), 10.0});
    r.push_back({"H6", 6, b.H6 - K(4) * (K(16) * q1s * q1 - K(55) * q1 * q2 + K(75) * q3), 300.0});
    r.push_back({"H10", 10,
                 b.H10 - K(8) * (K(128) * q1s * q1s * q1 - K(700) * q1s * q1 * q2 +
                                 K(725) * q1 * q2 * q2 + K(950) * q1s * q3 - K(875) * q2 * q3), 7600.0});
    r.push_back({"J4", 4, b.J4 - K(2) * (K(3) * q1s - K(5) * q2), 10.0});
    r.push_back({"K4", 4, b.K4 - K(4) * (K(2) * q1s - K(5) * q2), 20.0});
    r.push_back({"J6", 6, b.J6 - (K(12) * q1s * q1 - K(55) * q1 * q2 + K(75) * q3), 75.0});
    r.push_back({"K6", 6, b.K6 - K(2) * (K(8) * q1s * q1 - K(35) * q1 * q2 + K(75) * q3), 150.0});
    r.push_back({"L6", 6, b.L6 - K(6) * (K(8) * q1s * q1 - K(25) * q1 * q2 + K(25) * q3), 150.0});
    r.push_back({"M6", 6, b.M6 - (K(4) * q1s * q1 - K(15) * q1 * q2 + K(75) * q3), 75.0});
    r.push_back({"H8", 8,
                 b.H8 - K(4) * (K(72) * q1s * q1s - K(270) * q1s * q2 + K(75) * q2 * q2 +
                                K(325) * q1 * q3), 1300.0});
    return r;
}

// The 9 relations certifying partial-but-not-full decoupleability for n=3 on
// the domain H2 != 10 J2, in terms of (H2, H4, J2, L4) and the extension qt1.
// Each residual keeps the integer clearing factor on the invariant side, e.g.
// the "J4" entry is 18*J4 - (...).
template <class K>
std::vector<RelationResidual<K>> pd_relation_residuals(const InvariantSetN3<K>& b, const K& qt1) {
    const K &H2 = b.H2, &H4 = b.H4, &J2 = b.J2, &L4 = b.L4;
    const K t = qt1, t2 = qt1 * qt1, t3 = qt1 * qt1 * qt1;
    const K H2p2 = H2 * H2, H2p3 = H2p2 * H2, H2p4 = H2p3 * H2, H2p5 = H2p4 * H2;
    const K J2p2 = J2 * J2, J2p3 = J2p2 * J2, J2p4 = J2p3 * J2, J2p5 = J2p4 * J2;
    std::vector<RelationResidual<K>> r;
    r.reserve(9);

    r.push_back({"J4", 4,
                 K(18) * b.J4 -
                     (-H2p2 + K(12) * J2 * H2 - K(24) * J2p2 + K(2) * H4 + K(12) * L4), 24.0});

    r.push_back({"K4", 4,
                 K(9) * b.K4 -
                     (K(-2) * H2p2 + K(15) * J2 * H2 - K(66) * J2p2 + K(4) * H4 + K(6) * L4), 66.0});

    r.push_back({"H6", 6,
                 K(27) * b.H6 -
                     (K(8100) * t3 - K(8100) * J2 * t2 -
                      (K(7272) * J2p2 - K(234) * H4 + K(1512) * L4) * t - K(13) * H2p3 +
                      K(372) * J2p3 - K(156) * H2 * J2p2 + K(26) * H2 * H4 - K(7) * H2p2 * J2 +
                      K(146) * H4 * J2 + K(30) * H2 * L4 - K(924) * J2 * L4), 8100.0});

    r.push_back({"J6", 6,
                 K(36) * b.J6 -
                     (K(2700) * t3 - K(2700) * J2 * t2 -
                      (K(144) * J2p2 - K(18) * H4 + K(324) * L4) * t - H2p3 - K(72) * J2p3 +
                      K(12) * H2 * J2p2 + K(2) * H2 * H4 + K(6) * H4 * J2 + K(12) * H2 * L4), 2700.0});

    r.push_back({"K6", 6,
                 K(162) * b.K6 -
                     (K(24300) * t3 - K(24300) * J2 * t2 -
                      (K(8136) * J2p2 - K(342) * H4 + K(3456) * L4) * t - K(19) * H2p3 -
                      K(744) * J2p3 + K(96) * H2 * J2p2 + K(38) * H2 * H4 + K(14) * H2p2 * J2 +
                      K(86) * H4 * J2 + K(48) * H2 * L4 - K(744) * J2 * L4), 24300.0});

    r.push_back({"L6", 6,
                 K(81) * b.L6 -
                     (K(12150) * t3 - K(12150) * J2 * t2 -
                      (K(7488) * J2p2 - K(261) * H4 + K(1998) * L4) * t - K(19) * H2p3 -
                      K(204) * J2p3 - K(174) * H2 * J2p2 + K(38) * H2 * H4 + K(23) * H2p2 * J2 +
                      K(149) * H4 * J2 + K(48) * H2 * L4 - K(852) * J2 * L4), 12150.0});

    r.push_back({"M6", 6,
                 K(324) * b.M6 -
                     (K(24300) * t3 - K(24300) * J2 * t2 +
                      (K(5544) * J2p2 - K(18) * H4 - K(2376) * L4) * t + H2p3 - K(552) * J2p3 +
                      K(120) * H2 * J2p2 - K(2) * H2 * H4 - K(14) * H2p2 * J2 + K(22) * H4 * J2 +
                      K(6) * H2 * L4 + K(420) * J2 * L4), 24300.0});

    r.push_back({"H8", 8,
                 K(1458) * b.H8 -
                     (K(1895400) * J2 * t3 -
                      (K(356400) * J2p2 + K(40500) * H4 - K(121500) * L4) * t2 +
                      (K(158832) * J2p3 + K(5796) * H4 * J2 - K(206928) * L4 * J2) * t +
                      K(70) * H2p4 + K(30792) * J2p4 - K(8868) * H2 * J2p3 + K(442) * H4 * H4 +
                      K(830) * H2p2 * J2p2 - K(7216) * H4 * J2p2 - K(11088) * L4 * L4 -
                      K(361) * H2p2 * H4 + K(149) * H2p3 * J2 + K(674) * H2 * H4 * J2 +
                      K(30) * H2p2 * L4 - K(3624) * J2p2 * L4 + K(3828) * H4 * L4 +
                      K(408) * H2 * J2 * L4), 1895400.0});

    r.push_back({"H10", 10,
                 K(2187) * b.H10 -
                     ((K(510300) * H4 - K(5832000) * J2p2) * t3 -
                      (K(4017600) * J2p3 + K(251100) * H4 * J2 + K(777600) * L4 * J2) * t2 -
                      (K(9237600) * J2p4 + K(95256) * H4 * J2p2 + K(505440) * L4 * J2p2 -
                       K(10782) * H4 * H4 + K(35640) * L4 * L4 + K(71496) * H4 * L4) *
                          t +
                      K(70) * H2p5 - K(1226976) * J2p5 + K(607632) * H2 * J2p4 -
                      K(159160) * H2p2 * J2p3 + K(230888) * H4 * J2p3 + K(1478) * H2 * H4 * H4 +
                      K(110) * H2p3 * J2p2 + K(12212) * H2 * H4 * J2p2 + K(2448) * H2 * L4 * L4 -
                      K(35928) * J2 * L4 * L4 - K(879) * H2p3 * H4 - K(1161) * H2p4 * J2 +
                      K(2506) * H4 * H4 * J2 - K(630) * H2p3 * L4 + K(2866) * H2p2 * H4 * J2 -
                      K(423096) * J2p3 * L4 - K(125412) * H2 * J2p2 * L4 +
                      K(2040) * H2 * H4 * L4 + K(204) * H2p2 * J2 * L4 - K(26160) * H4 * J2 * L4), 9237600.0});

    return r;
}

// Lemma-style solvability data for the partial test: the degree-8 polynomial
// whose nonnegativity (for qt2 > 0) admits a real gamma_2, scaled so that it
// equals 4 qt2^3 gamma_2^2 on canonical forms.
template <class K>
K pd_solvability_poly(const QTilde<K>& qt) {
    const K &q2 = qt.q[1], &q3 = qt.q[2], &q4 = qt.q[3];
    const K q2s = q2 * q2, q4s = q4 * q4;
    return -q2s * q2s + K(4) * q2s * q3 - K(16) * q3 * q3 + K(2) * q2s * q2 * q4 -
           K(8) * q2 * q3 * q4 - K(2) * q2s * q4s + K(8) * q3 * q4s + K(2) * q2 * q4s * q4 -
           q4s * q4s;
}

}  // namespace tridec
