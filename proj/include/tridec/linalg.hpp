#pragma once

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "tridec/rational.hpp"

namespace tridec {

template <class K>
using Vec = std::vector<K>;

// Dense row-major matrix over the scalar field K.  Dimensions here are tiny
// (n <= 8), so no effort is spent on anything beyond clarity.
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols_ == y.rows_);
        Mat z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const K& xik = x(i, k);
                for (int j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        Mat z(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
        return z;
    }

    friend Vec<K> operator*(const Mat& x, const Vec<K>& v) {
        assert(int(v.size()) == x.cols_);
        Vec<K> out(x.rows_, K(0));
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) out[i] += x(i, j) * v[j];
        return out;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

template <class K>
K dot(const Vec<K>& x, const Vec<K>& y) {
    assert(x.size() == y.size());
    K s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <class K>
K trace(const Mat<K>& m) {
    K s(0);
    for (int i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

inline double abs_of(double x) { return std::abs(x); }
inline Rat abs_of(const Rat& x) { return abs(x); }

template <class K>
double max_abs(const Mat<K>& m) {
    double best = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(approx(m(i, j))));
    return best;
}

// Determinant by Gaussian elimination; exact over Rat, partially pivoted over double.
template <class K>
K det(Mat<K> m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    K result(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (is_exact_field_v<K>) {
            for (int r = col; r < n; ++r)
                if (m(r, col) != 0) {
                    pivot = r;
                    break;
                }
        } else {
            double best = 0;
            for (int r = col; r < n; ++r) {
                double v = std::abs(approx(m(r, col)));
                if (v > best) {
                    best = v;
                    pivot = r;
                }
            }
        }
        if (pivot < 0) return K(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            result = -result;
        }
        result *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col) == K(0)) continue;
            K f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return result;
}

// Sum of all principal 2x2 minors (second elementary symmetric function of the
// eigenvalues for a symmetric matrix).
template <class K>
K principal_minor2_sum(const Mat<K>& m) {
    assert(m.rows() == m.cols());
    K s(0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) s += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    return s;
}

template <class K>
Mat<double> to_double(const Mat<K>& m) {
    Mat<double> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = approx(m(i, j));
    return out;
}

template <class K>
Vec<double> to_double(const Vec<K>& v) {
    Vec<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = approx(v[i]);
    return out;
}

}  // namespace tridec
