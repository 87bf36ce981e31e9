#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "tridec/linalg.hpp"

namespace tridec {

// Fully symmetric n x n x n tensor over K, stored as the n(n+1)(n+2)/6 values
// on sorted index triples i <= j <= k (0-based internally; the JSON surface is
// 1-based).  The accessor is invariant under index permutation by
// construction.
template <class K>
class SymTensor3 {
public:
    explicit SymTensor3(int n = 0) : n_(n), a_(size_t(entry_count(n)), K(0)) {
        if (n < 0) throw DimensionMismatch("tensor dimension must be nonnegative");
    }

    static int entry_count(int n) { return n * (n + 1) * (n + 2) / 6; }

    int dim() const { return n_; }
    int size() const { return int(a_.size()); }

    const K& at(int i, int j, int k) const { return a_[offset(i, j, k)]; }
    K& at(int i, int j, int k) { return a_[offset(i, j, k)]; }

    void set(int i, int j, int k, K v) { a_[offset(i, j, k)] = std::move(v); }

    // Number of ordered index triples sharing one sorted triple: 1, 3 or 6.
    static int multiplicity(int i, int j, int k) {
        if (i == j && j == k) return 1;
        if (i == j || j == k || i == k) return 3;
        return 6;
    }

    // Visits each sorted triple once.
    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                for (int k = j; k < n_; ++k) f(i, j, k, at(i, j, k));
    }

    // f(x) = sum_{ijk} Gamma^i_{jk} x_i x_j x_k over all ordered triples.
    K eval_cubic(const Vec<K>& x) const {
        if (int(x.size()) != n_) throw DimensionMismatch("eval_cubic: wrong vector length");
        K s(0);
        for_each([&](int i, int j, int k, const K& v) {
            if (v == K(0)) return;
            s += K(multiplicity(i, j, k)) * v * x[i] * x[j] * x[k];
        });
        return s;
    }

    SymTensor3 operator-(const SymTensor3& o) const {
        require_same_dim(o);
        SymTensor3 r(n_);
        for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
        return r;
    }

    SymTensor3 operator+(const SymTensor3& o) const {
        require_same_dim(o);
        SymTensor3 r(n_);
        for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
        return r;
    }

    SymTensor3 scaled(const K& c) const {
        SymTensor3 r(n_);
        for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = c * a_[t];
        return r;
    }

    bool operator==(const SymTensor3& o) const { return n_ == o.n_ && a_ == o.a_; }

    bool is_zero() const {
        for (const K& v : a_)
            if (!(v == K(0))) return false;
        return true;
    }

    // Frobenius norm squared of the full (ordered-index) tensor.
    K frobenius_sq() const {
        K s(0);
        for_each([&](int i, int j, int k, const K& v) { s += K(multiplicity(i, j, k)) * v * v; });
        return s;
    }

    double frobenius() const { return std::sqrt(std::abs(approx(frobenius_sq()))); }

    double max_abs() const {
        double m = 0;
        for (const K& v : a_) m = std::max(m, std::abs(approx(v)));
        return m;
    }

    SymTensor3<double> to_double() const {
        SymTensor3<double> r(n_);
        for_each([&](int i, int j, int k, const K& v) { r.set(i, j, k, approx(v)); });
        return r;
    }

private:
    void require_same_dim(const SymTensor3& o) const {
        if (n_ != o.n_) throw DimensionMismatch("tensor dimensions differ");
    }

    size_t offset(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
            throw DimensionMismatch("tensor index out of range");
        if (i > j) std::swap(i, j);
        if (j > k) std::swap(j, k);
        if (i > j) std::swap(i, j);
        // triples before first index i, then pairs before (j,k) within slice i
        size_t off = 0;
        for (int a = 0; a < i; ++a) {
            int m = n_ - a;
            off += size_t(m) * (m + 1) / 2;
        }
        for (int b = i; b < j; ++b) off += size_t(n_ - b);
        return off + size_t(k - j);
    }

    int n_;
    std::vector<K> a_;
};

// Monomial exponent vector -> coefficient map for a homogeneous cubic.
template <class K>
using CubicCoeffs = std::map<std::vector<int>, K>;

// Gamma^i_{jk} = (1/3!) d_i d_j d_k f; equivalently coefficient / multiplicity.
template <class K>
SymTensor3<K> tensor_from_cubic(const CubicCoeffs<K>& coeffs, int n) {
    SymTensor3<K> t(n);
    for (const auto& [expo, c] : coeffs) {
        if (int(expo.size()) != n) throw MalformedPolynomial("monomial arity does not match dimension");
        int deg = 0;
        std::vector<int> idx;
        for (int v = 0; v < n; ++v) {
            if (expo[v] < 0) throw MalformedPolynomial("negative exponent");
            deg += expo[v];
            for (int r = 0; r < expo[v] && r < 3; ++r) idx.push_back(v);
        }
        if (deg != 3) throw MalformedPolynomial("monomial of total degree != 3");
        t.at(idx[0], idx[1], idx[2]) += c / K(SymTensor3<K>::multiplicity(idx[0], idx[1], idx[2]));
    }
    return t;
}

// Inverse of tensor_from_cubic; drops zero coefficients.
template <class K>
CubicCoeffs<K> tensor_to_cubic(const SymTensor3<K>& t) {
    CubicCoeffs<K> out;
    t.for_each([&](int i, int j, int k, const K& v) {
        if (v == K(0)) return;
        std::vector<int> expo(t.dim(), 0);
        expo[i]++;
        expo[j]++;
        expo[k]++;
        out[expo] = K(SymTensor3<K>::multiplicity(i, j, k)) * v;
    });
    return out;
}

}  // namespace tridec
