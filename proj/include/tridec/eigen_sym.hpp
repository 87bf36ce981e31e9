#pragma once

#include <vector>

#include "tridec/linalg.hpp"

namespace tridec {

// Eigendecomposition of a real symmetric matrix.  Eigenvalues ascend; the
// matching eigenvectors sit in the columns of `vectors`, each normalized and
// sign-fixed so its first significant component is positive (deterministic
// candidate enumeration depends on this).
struct SymEigen {
    std::vector<double> values;
    Mat<double> vectors;
};

SymEigen sym_eigen(const Mat<double>& a);

// True when consecutive eigenvalues are separated by more than
// gap_tol * (1 + frobenius norm of the matrix).
bool distinct_eigenvalues(const std::vector<double>& values, double frob,
                          double gap_tol = kEigenGapTol);

double frobenius(const Mat<double>& a);

}  // namespace tridec
