#pragma once

#include <array>

#include "tridec/covariants.hpp"

namespace tridec {

// n=2 integrity bases.  (j2, h2, l4, m4) generates the SO(2) invariants with
// the single syzygy -h2 j2^3 + 4 l4^2 + 4 m4^2 = 0; (i1, i2, i3) generates the
// O(2) invariants.  m4 flips sign under reflection, the others are O(2).
template <class K>
struct InvariantSetN2 {
    K j2, h2, l4, m4;   // SO(2) basis
    K i1, i2, i3;       // O(2) basis: |Trace G|^2, Trace G*2, det G*2
};

template <class K>
InvariantSetN2<K> so2_basis(const SymTensor3<K>& g) {
    if (g.dim() != 2) throw DimensionMismatch("so2_basis: need n=2");
    CovariantSuite<K> cs = covariants(g);
    InvariantSetN2<K> out{K(0), K(0), K(0), K(0), K(0), K(0), K(0)};
    out.j2 = dot(cs.u, cs.u);
    out.h2 = trace(cs.d_star2);
    out.l4 = dot(cs.u, cs.w);
    out.m4 = cs.u[0] * cs.w[1] - cs.u[1] * cs.w[0];
    out.i1 = out.j2;
    out.i2 = trace(cs.gamma_star2);
    out.i3 = det(cs.gamma_star2);
    return out;
}

// The 13-member O(3) integrity basis, evaluated with the coefficient-free
// trace-free part D = (n+2)(Gamma - B); subscripts are homogeneity degrees.
template <class K>
struct InvariantSetN3 {
    K H2, J2, H4, J4, K4, L4, H6, J6, K6, L6, M6, H8, H10;
};

template <class K>
InvariantSetN3<K> oa_basis(const SymTensor3<K>& g) {
    if (g.dim() != 3) throw DimensionMismatch("oa_basis: need n=3");
    const int n = 3;
    CovariantSuite<K> cs = covariants(g);
    const Mat<K>& M = cs.d_star2;
    InvariantSetN3<K> r{K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0), K(0)};

    r.H2 = trace(M);
    r.J2 = dot(cs.u, cs.u);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r.H4 += M(k, l) * M(k, l);
    Vec<K> Mu = M * cs.u;
    r.J4 = dot(cs.u, Mu);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int p = 0; p < n; ++p) r.K4 += M(k, l) * cs.D.at(k, l, p) * cs.u[p];
    r.L4 = dot(cs.u, cs.w);
    r.H6 = dot(cs.v, cs.v);
    r.J6 = dot(Mu, cs.w);
    r.K6 = dot(cs.v, cs.w);
    r.L6 = dot(Mu, cs.v);
    r.M6 = dot(cs.w, cs.w);
    Vec<K> Mv = M * cs.v;
    r.H8 = dot(Mu, Mv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) r.H10 += cs.D.at(i, j, k) * cs.v[i] * cs.v[j] * cs.v[k];
    return r;
}

// Characteristic-polynomial invariants of Gamma*2.  The triple (count == 3)
// certifies full decoupleability; the quadruple (count == 4) extends the
// canonical partially-decoupled parameters and only exists off the excluded
// surface H2 == 10 J2.
template <class K>
struct QTilde {
    std::array<K, 4> q;  // q[0] = qt1, ...
    int count;
};

template <class K>
QTilde<K> qtilde_full(const SymTensor3<K>& g) {
    Mat<K> s2 = star2(g);
    QTilde<K> out{{K(0), K(0), K(0), K(0)}, 3};
    out.q[0] = trace(s2);
    out.q[1] = principal_minor2_sum(s2);
    out.q[2] = det(s2);
    return out;
}

// The partial-test extension evaluated from (H2, H4, J2, L4); precondition
// H2 != 10 J2 is the caller's responsibility (see classify_pd_not_fd_n3).
// The qt1 denominator is 9(H2 - 10 J2): with this orientation the quadruple
// inverts the forward canonical-parameter map (qt1 == beta3^2 on canonical
// forms), which the round-trip tests pin down.
template <class K>
QTilde<K> qtilde_partial_from(const InvariantSetN3<K>& b) {
    const K &H2 = b.H2, &H4 = b.H4, &J2 = b.J2, &L4 = b.L4;
    QTilde<K> out{{K(0), K(0), K(0), K(0)}, 4};
    K q1 = (H2 * H2 - K(2) * H4 - K(3) * H2 * J2 + K(6) * J2 * J2 + K(6) * L4) /
           (K(9) * (H2 - K(10) * J2));
    out.q[0] = q1;
    out.q[1] = J2 - q1;
    out.q[2] = (K(-8) * H2 * H2 + K(25) * H4 + K(60) * H2 * J2 + K(1500) * J2 * J2 -
                K(1200) * L4 - K(11250) * J2 * q1 + K(11250) * q1 * q1) /
               K(11250);
    out.q[3] = (H2 + K(15) * J2 - K(25) * q1) / K(25);
    return out;
}

struct DomainExcluded : std::domain_error {
    using std::domain_error::domain_error;
};

template <class K>
QTilde<K> qtilde_partial(const SymTensor3<K>& g, double tol = kDefaultTol) {
    if (g.dim() != 3) throw DimensionMismatch("qtilde_partial: need n=3");
    InvariantSetN3<K> b = oa_basis(g);
    K gap = b.H2 - K(10) * b.J2;
    if constexpr (is_exact_field_v<K>) {
        if (gap == K(0)) throw DomainExcluded("H2 == 10 J2");
    } else {
        double fr = g.frobenius();
        if (std::abs(approx(gap)) <= tol * (1.0 + fr * fr * fr * fr))
            throw DomainExcluded("H2 == 10 J2 within tolerance");
    }
    return qtilde_partial_from(b);
}

}  // namespace tridec
