#pragma once

#include "tridec/orthogonal.hpp"

namespace tridec {

// n=2 parameter aliases: a0 = Gamma^2_22, a1 = Gamma^1_22, a2 = Gamma^2_11,
// a3 = Gamma^1_11, so that f = a3 x1^3 + 3 a2 x1^2 x2 + 3 a1 x1 x2^2 + a0 x2^3.
template <class K>
struct N2Params {
    K a0, a1, a2, a3;
};

template <class K>
N2Params<K> n2_params(const SymTensor3<K>& t) {
    if (t.dim() != 2) throw DimensionMismatch("n2_params: need n=2");
    return {t.at(1, 1, 1), t.at(0, 1, 1), t.at(0, 0, 1), t.at(0, 0, 0)};
}

template <class K>
SymTensor3<K> n2_tensor(const K& a0, const K& a1, const K& a2, const K& a3) {
    SymTensor3<K> t(2);
    t.set(1, 1, 1, a0);
    t.set(0, 1, 1, a1);
    t.set(0, 0, 1, a2);
    t.set(0, 0, 0, a3);
    return t;
}

// Trace vector u_i = sum_l Gamma^i_{ll}.
template <class K>
Vec<K> trace_vector(const SymTensor3<K>& g) {
    const int n = g.dim();
    Vec<K> u(n, K(0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) u[i] += g.at(i, l, l);
    return u;
}

// Gamma*2_{kl} = sum_{ij} Gamma^i_{jk} Gamma^i_{jl} (ordered indices).
template <class K>
Mat<K> star2(const SymTensor3<K>& g) {
    const int n = g.dim();
    Mat<K> m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            K s(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s += g.at(i, j, k) * g.at(i, j, l);
            m(k, l) = s;
            if (l != k) m(l, k) = m(k, l);
        }
    return m;
}

// (u . Gamma)_{kl} = sum_i Gamma^i_{kl} u_i.  Equals Gamma*2 exactly on fully
// decoupleable tensors; used as the quick necessary test.
template <class K>
Mat<K> u_dot_gamma(const SymTensor3<K>& g) {
    const int n = g.dim();
    Vec<K> u = trace_vector(g);
    Mat<K> m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            K s(0);
            for (int i = 0; i < n; ++i) s += g.at(i, k, l) * u[i];
            m(k, l) = s;
        }
    return m;
}

// Harmonic-type decomposition Gamma = B + D/(n+2) with Trace D = 0, plus the
// derived matrix and vector covariants the integrity bases are built from.
template <class K>
struct CovariantSuite {
    Vec<K> u;               // trace vector
    SymTensor3<K> B;        // rank-one part carrying the trace
    SymTensor3<K> D;        // trace-free part, scaled by (n+2)
    Mat<K> gamma_star2;     // Gamma*2
    Mat<K> d_star2;         // D*2
    Vec<K> v;               // v_m = D^i_{jk} D^i_{jl} D^k_{lm}
    Vec<K> w;               // w_m = D^i_{jm} u_i u_j
};

template <class K>
CovariantSuite<K> covariants(const SymTensor3<K>& g) {
    const int n = g.dim();
    CovariantSuite<K> cs{Vec<K>(), SymTensor3<K>(n), SymTensor3<K>(n), Mat<K>(), Mat<K>(),
                         Vec<K>(n, K(0)), Vec<K>(n, K(0))};
    cs.u = trace_vector(g);
    const K np2(n + 2);
    g.for_each([&](int i, int j, int k, const K&) {
        K b(0);
        if (j == k) b += cs.u[i];
        if (i == k) b += cs.u[j];
        if (i == j) b += cs.u[k];
        cs.B.set(i, j, k, b / np2);
        cs.D.set(i, j, k, np2 * (g.at(i, j, k) - cs.B.at(i, j, k)));
    });
    cs.gamma_star2 = star2(g);
    cs.d_star2 = star2(cs.D);
    for (int m = 0; m < n; ++m) {
        K wm(0), vm(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) wm += cs.D.at(i, j, m) * cs.u[i] * cs.u[j];
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) vm += cs.d_star2(k, l) * cs.D.at(k, l, m);
        cs.w[m] = wm;
        cs.v[m] = vm;
    }
    return cs;
}

}  // namespace tridec
