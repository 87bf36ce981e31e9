#pragma once

#include <array>
#include <complex>
#include <optional>

#include "tridec/eigen_sym.hpp"
#include "tridec/orbitlab.hpp"
#include "tridec/relations.hpp"

namespace tridec {

// Explicit orthogonal maps carrying a tensor to a reduced/canonical pattern.
// Every map placed in a report has been re-verified through act; `residual`
// is the largest verified off-pattern magnitude among the kept maps.
struct RecoveryReport {
    std::vector<OrthogonalMap<double>> maps;
    std::vector<SymTensor3<double>> reduced_forms;  // parallel to maps
    SymTensor3<double> reduced;                     // primary branch target
    double residual = 0.0;
    int branch_count = 0;
};

template <class K>
struct PdParams {
    K alpha, gamma1, gamma2, beta3;
};

// --- Prop-2.5-style closed-form n=2 recovery --------------------------------
//
// Rotation branch: e^{4 i theta} = ((a0+a2) + i(a1+a3)) / ((a0-3a2) + i(a3-3a1)),
// beta1 + i beta2 = e^{-i theta} ((a0+a2) + i(a1+a3)); four angles theta + m pi/2.
// Reflection branch: the same analysis applied to the swapped parameters, maps
// sigma_psi * N.  Eight maps total.
Outcome<RecoveryReport> recover_n2(const SymTensor3<double>& g, double tol = kDefaultTol);

// The 4x4 generator L of the parameter flow theta -> sigma_theta o Gamma, and
// the complex eigenrow matrix E with E L = diag(3i, -3i, i, -i) E.
Mat<double> n2_rotation_generator();
std::array<std::array<std::complex<double>, 4>, 4> n2_rotation_eigenrows();

// --- generic eigenvector recovery -------------------------------------------

enum class CovariantMatrix { GammaStar2, DStar2 };

Mat<double> covariant_matrix(const SymTensor3<double>& g, CovariantMatrix which);

// Candidates rho_eps = sum_i eps_i v_i u_i^t from the eigenvectors of the
// selected covariant matrix of g1 and g2; keeps those with act(rho, g1) == g2
// within tolerance.  An empty report proves non-equivalence or non-genericity.
Outcome<RecoveryReport> recover_rotation_via_covariant(const SymTensor3<double>& g1,
                                                       const SymTensor3<double>& g2,
                                                       CovariantMatrix which,
                                                       double tol = kDefaultTol);

// --- canonical partially-decoupled parameters -------------------------------

// Solvability of the canonical-parameter system for a qtilde quadruple
// (beta3^2, 16 alpha^2, det G*2, trace G*2); on failure `violated` names the
// broken condition.
bool pd_solvable(const QTilde<double>& qt, double tol, std::string& violated);
bool pd_solvable_exact(const QTilde<Rat>& qt, std::string& violated);

// Canonical sheet: alpha, gamma2, beta3 >= 0, gamma1 from the closed formula.
Outcome<PdParams<double>> recover_pd_params(const QTilde<double>& qt, double tol = kDefaultTol);

// Exact variant; fails with code "IrrationalParameters" when a needed square
// root is not rational.
Outcome<PdParams<Rat>> recover_pd_params_exact(const QTilde<Rat>& qt);

// Forward map: the qtilde quadruple of the canonical tensor R(params).
template <class K>
QTilde<K> pd_forward_q(const PdParams<K>& p) {
    const K a2 = p.alpha * p.alpha, g1s = p.gamma1 * p.gamma1, g2s = p.gamma2 * p.gamma2;
    QTilde<K> q{{K(0), K(0), K(0), K(0)}, 4};
    q.q[0] = p.beta3 * p.beta3;
    q.q[1] = K(16) * a2;
    q.q[2] = K(20) * a2 * a2 + K(32) * a2 * p.alpha * p.gamma1 + K(8) * a2 * g1s +
             K(4) * g1s * g1s + K(8) * a2 * g2s + K(8) * g1s * g2s + K(4) * g2s * g2s;
    q.q[3] = K(12) * a2 + K(4) * g1s + K(4) * g2s;
    return q;
}

// sigma with sigma o Gamma == R(params), searched among the <= 2^3 eigenvector
// candidates matching Gamma*2 to R*2.
Outcome<RecoveryReport> recover_pd_rotation(const SymTensor3<double>& g,
                                            const PdParams<double>& params,
                                            double tol = kDefaultTol);

}  // namespace tridec
