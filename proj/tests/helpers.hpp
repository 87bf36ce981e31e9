// Test-only oracles: every contraction here runs on a materialized dense
// n^3 array with naive ordered loops, independent of the sorted-triple
// storage and multiplicity bookkeeping in the library.
#pragma once

#include <random>
#include <vector>

#include "tridec/orbitlab.hpp"

namespace oracle {

using tridec::Mat;
using tridec::Rat;
using tridec::SymTensor3;
using tridec::Vec;

template <class K>
using Dense = std::vector<std::vector<std::vector<K>>>;

template <class K>
Dense<K> zero_dense(int n) {
    return Dense<K>(n, std::vector<std::vector<K>>(n, std::vector<K>(n, K(0))));
}

template <class K>
Dense<K> to_dense(const SymTensor3<K>& t) {
    const int n = t.dim();
    Dense<K> d = zero_dense<K>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) d[i][j][k] = t.at(i, j, k);
    return d;
}

template <class K>
Dense<K> naive_act(const Mat<K>& s, const Dense<K>& g) {
    const int n = int(g.size());
    Dense<K> out = zero_dense<K>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c)
                            out[i][j][k] += s(i, a) * s(j, b) * s(k, c) * g[a][b][c];
    return out;
}

template <class K>
Vec<K> naive_trace_vector(const Dense<K>& g) {
    const int n = int(g.size());
    Vec<K> u(n, K(0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) u[i] += g[i][l][l];
    return u;
}

template <class K>
Mat<K> naive_star2(const Dense<K>& g) {
    const int n = int(g.size());
    Mat<K> m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(k, l) += g[i][j][k] * g[i][j][l];
    return m;
}

// D = (n+2) (Gamma - B) with B carrying the trace vector.
template <class K>
Dense<K> naive_trace_free(const Dense<K>& g) {
    const int n = int(g.size());
    Vec<K> u = naive_trace_vector(g);
    Dense<K> d = zero_dense<K>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                K b(0);
                if (j == k) b += u[i];
                if (i == k) b += u[j];
                if (i == j) b += u[k];
                d[i][j][k] = K(n + 2) * g[i][j][k] - b;
            }
    return d;
}

// Gamma^i_{jk} of a monomial c * x^e: third partial over the sorted triple
// divided by 3!.
template <class K>
Dense<K> cubic_derivative_tensor(const std::vector<std::pair<std::vector<int>, K>>& monomials,
                                 int n) {
    Dense<K> d = zero_dense<K>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (const auto& [e, c] : monomials) {
                    std::vector<int> want(n, 0);
                    want[i]++;
                    want[j]++;
                    want[k]++;
                    if (want != e) continue;
                    K fact(1);
                    for (int v = 0; v < n; ++v)
                        for (int r = 2; r <= e[v]; ++r) fact *= K(r);
                    d[i][j][k] += c * fact / K(6);
                }
    return d;
}

template <class K>
bool dense_equal(const Dense<K>& a, const SymTensor3<K>& t) {
    const int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!(a[i][j][k] == t.at(i, j, k))) return false;
    return true;
}

// --- random rational fixtures ----------------------------------------------

inline Rat random_rat(std::mt19937_64& rng, int num_bound = 9, int den_bound = 9) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline SymTensor3<Rat> random_rat_tensor(int n, std::mt19937_64& rng) {
    SymTensor3<Rat> t(n);
    t.for_each([&](int i, int j, int k, const Rat&) { t.at(i, j, k) = random_rat(rng); });
    return t;
}

// The running dense n=3 fixture 2x1^3 + 3x1^2x2 + 3x2^3 - 12x1x2x3 + 6x3^3.
template <class K>
SymTensor3<K> dense_fixture() {
    SymTensor3<K> t(3);
    t.set(0, 0, 0, K(2));
    t.set(0, 0, 1, K(1));
    t.set(0, 1, 2, K(-2));
    t.set(1, 1, 1, K(3));
    t.set(2, 2, 2, K(6));
    return t;
}

}  // namespace oracle
