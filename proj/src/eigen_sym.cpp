#include "tridec/eigen_sym.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace tridec {

SymEigen sym_eigen(const Mat<double>& a) {
    const int n = a.rows();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    SymEigen out;
    out.values.resize(n);
    out.vectors = Mat<double>(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = es.eigenvalues()[j];
        // first component of significant size decides the sign
        int lead = 0;
        for (int i = 0; i < n; ++i)
            if (std::abs(es.eigenvectors()(i, j)) > 1e-8) {
                lead = i;
                break;
            }
        double sgn = es.eigenvectors()(lead, j) < 0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) out.vectors(i, j) = sgn * es.eigenvectors()(i, j);
    }
    return out;
}

bool distinct_eigenvalues(const std::vector<double>& values, double frob, double gap_tol) {
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i + 1] - values[i] <= gap_tol * (1.0 + frob)) return false;
    return true;
}

double frobenius(const Mat<double>& a) {
    double s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace tridec
