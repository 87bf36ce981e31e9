#pragma once

#include <cmath>

#include "tridec/tensor.hpp"

namespace tridec {

// Group element of O(n): certified orthonormal matrix plus determinant sign.
// Exact fields certify sigma^t sigma == I exactly; double mode admits a
// max-entry defect of kOrthoTol.
template <class K>
class OrthogonalMap {
public:
    explicit OrthogonalMap(Mat<K> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw NotOrthogonal("matrix not square");
        certify();
        K d = det(m_);
        if constexpr (is_exact_field_v<K>) {
            det_sign_ = (d == K(1)) ? +1 : -1;
            if (!(d == K(1) || d == K(-1))) throw NotOrthogonal("determinant not +-1");
        } else {
            det_sign_ = approx(d) > 0 ? +1 : -1;
            if (std::abs(std::abs(approx(d)) - 1.0) > 64 * kOrthoTol)
                throw NotOrthogonal("determinant not +-1");
        }
    }

    static OrthogonalMap identity(int n) { return OrthogonalMap(Mat<K>::identity(n)); }

    // Coordinate swap x_1 <-> x_2 embedded in dimension n.
    static OrthogonalMap swap_first_two(int n) {
        Mat<K> m = Mat<K>::identity(n);
        m(0, 0) = K(0);
        m(1, 1) = K(0);
        m(0, 1) = K(1);
        m(1, 0) = K(1);
        return OrthogonalMap(m);
    }

    // Givens rotation in the (p,q) plane with given cosine/sine; exact fields
    // require c^2 + s^2 == 1 (e.g. scaled Pythagorean triples).
    static OrthogonalMap givens(int n, int p, int q, const K& c, const K& s) {
        Mat<K> m = Mat<K>::identity(n);
        m(p, p) = c;
        m(q, q) = c;
        m(p, q) = -s;
        m(q, p) = s;
        return OrthogonalMap(m);
    }

    // diag(signs), each entry +-1.
    static OrthogonalMap diagonal_signs(const std::vector<int>& signs) {
        Mat<K> m(int(signs.size()), int(signs.size()));
        for (size_t i = 0; i < signs.size(); ++i) m(int(i), int(i)) = K(signs[i]);
        return OrthogonalMap(m);
    }

    int dim() const { return m_.rows(); }
    int det_sign() const { return det_sign_; }
    const Mat<K>& matrix() const { return m_; }
    const K& operator()(int i, int j) const { return m_(i, j); }

    OrthogonalMap transposed() const { return OrthogonalMap(m_.transposed()); }

    friend OrthogonalMap operator*(const OrthogonalMap& a, const OrthogonalMap& b) {
        return OrthogonalMap(a.m_ * b.m_);
    }

private:
    void certify() const {
        Mat<K> g = m_.transposed() * m_;
        const int n = m_.rows();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                K want = (i == j) ? K(1) : K(0);
                if constexpr (is_exact_field_v<K>) {
                    if (!(g(i, j) == want)) throw NotOrthogonal("sigma^t sigma != I (exact)");
                } else {
                    if (std::abs(approx(g(i, j)) - approx(want)) > kOrthoTol)
                        throw NotOrthogonal("sigma^t sigma deviates from I beyond 1e-10");
                }
            }
    }

    Mat<K> m_;
    int det_sign_;
};

inline OrthogonalMap<double> rotation2(double theta) {
    Mat<double> m(2, 2);
    m(0, 0) = std::cos(theta);
    m(0, 1) = -std::sin(theta);
    m(1, 0) = std::sin(theta);
    m(1, 1) = std::cos(theta);
    return OrthogonalMap<double>(m);
}

// (sigma o Gamma)^i_{jk} = sum sigma_{ii'} sigma_{jj'} sigma_{kk'} Gamma^{i'}_{j'k'}.
template <class K>
SymTensor3<K> act(const OrthogonalMap<K>& sigma, const SymTensor3<K>& g) {
    const int n = g.dim();
    if (sigma.dim() != n) throw DimensionMismatch("act: dimension mismatch");
    SymTensor3<K> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                K s(0);
                for (int a = 0; a < n; ++a) {
                    if (sigma(i, a) == K(0)) continue;
                    for (int b = 0; b < n; ++b) {
                        if (sigma(j, b) == K(0)) continue;
                        K sab = sigma(i, a) * sigma(j, b);
                        for (int c = 0; c < n; ++c) {
                            if (sigma(k, c) == K(0)) continue;
                            s += sab * sigma(k, c) * g.at(a, b, c);
                        }
                    }
                }
                out.set(i, j, k, std::move(s));
            }
    return out;
}

template <class K>
OrthogonalMap<double> to_double(const OrthogonalMap<K>& s) {
    return OrthogonalMap<double>(to_double(s.matrix()));
}

}  // namespace tridec
