#include "tridec/recover.hpp"

#include <cmath>

namespace tridec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Largest off-pattern magnitude of an n=2 tensor against the decoupled form.
double n2_off_pattern(const SymTensor3<double>& t) {
    N2Params<double> a = n2_params(t);
    return std::max(std::abs(a.a1), std::abs(a.a2));
}

}  // namespace

Mat<double> n2_rotation_generator() {
    Mat<double> l(4, 4);
    l(0, 1) = 3;
    l(1, 0) = -1;
    l(1, 2) = 2;
    l(2, 1) = -2;
    l(2, 3) = 1;
    l(3, 2) = -3;
    return l;
}

std::array<std::array<std::complex<double>, 4>, 4> n2_rotation_eigenrows() {
    using C = std::complex<double>;
    const C i(0, 1);
    return {{{C(1), -3. * i, C(-3), i},
             {C(-1), -3. * i, C(3), i},
             {C(-1), i, C(-1), i},
             {C(1), i, C(1), i}}};
}

Outcome<RecoveryReport> recover_n2(const SymTensor3<double>& g, double tol) {
    if (g.dim() != 2) throw DimensionMismatch("recover_n2: need n=2");
    if (g.is_zero()) return Failure{"ZeroTensor", "zero tensor has no distinguished angle"};

    N2Params<double> a = n2_params(g);
    const double frob = g.frobenius();
    const double relation = a.a2 * (a.a2 - a.a0) - a.a1 * (a.a3 - a.a1);
    if (std::abs(relation) > tol * (1.0 + frob) * (1.0 + frob))
        return Failure{"NotDecoupleable", "parameter relation fails"};

    using C = std::complex<double>;
    RecoveryReport rep;
    rep.branch_count = 0;
    double worst = 0;

    auto add_branches = [&](const C& num, const C& den, bool reflected) {
        const double theta0 = std::arg(num / den) / 4.0;
        for (int m = 0; m < 4; ++m) {
            double theta = theta0 + m * kPi / 2.0;
            OrthogonalMap<double> sigma = rotation2(theta);
            if (reflected) sigma = sigma * OrthogonalMap<double>::swap_first_two(2);
            C pair = std::exp(C(0, -theta)) * num;
            SymTensor3<double> reduced = n2_tensor(pair.real(), 0.0, 0.0, pair.imag());
            double res = n2_off_pattern(act(sigma, g));
            if (res > tol * (1.0 + frob)) continue;  // verification gate
            rep.maps.push_back(sigma);
            rep.reduced_forms.push_back(reduced);
            worst = std::max(worst, res);
            ++rep.branch_count;
        }
    };

    // Rotation branch on (a0, a1, a2, a3); reflection branch on the swapped
    // parameters (a3, a2, a1, a0), with maps sigma_psi * N.
    add_branches(C(a.a0 + a.a2, a.a1 + a.a3), C(a.a0 - 3 * a.a2, a.a3 - 3 * a.a1), false);
    add_branches(C(a.a3 + a.a1, a.a2 + a.a0), C(a.a3 - 3 * a.a1, a.a0 - 3 * a.a2), true);

    if (rep.maps.empty()) return Failure{"NotDecoupleable", "no branch verified"};
    rep.reduced = rep.reduced_forms.front();
    rep.residual = worst;
    return rep;
}

Mat<double> covariant_matrix(const SymTensor3<double>& g, CovariantMatrix which) {
    if (which == CovariantMatrix::GammaStar2) return star2(g);
    return covariants(g).d_star2;
}

namespace {

// rho_eps = sum_i eps_i v_i u_i^t over all sign patterns; keeps candidates
// with act(rho, g1) == target within tolerance.
Outcome<RecoveryReport> eigenvector_candidates(const SymTensor3<double>& g1,
                                               const Mat<double>& q1, const Mat<double>& q2,
                                               const SymTensor3<double>& target, double tol) {
    const int n = g1.dim();
    SymEigen e1 = sym_eigen(q1);
    SymEigen e2 = sym_eigen(q2);
    if (!distinct_eigenvalues(e2.values, frobenius(q2)))
        return Failure{"DegenerateEigenvalues", "covariant matrix has a repeated eigenvalue"};

    RecoveryReport rep;
    rep.reduced = target;
    rep.branch_count = 1 << n;
    const double scale = 1.0 + target.frobenius();
    const double bound = tol * scale;
    // candidates within this looser band are eigenvector-accurate only up to
    // the eigenvalue gap; a local polish recovers the remaining digits
    const double polish_band = 1e-4 * scale;
    double worst = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Mat<double> rho(n, n);
        for (int i = 0; i < n; ++i) {
            double eps = (mask >> i) & 1 ? -1.0 : 1.0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) rho(r, c) += eps * e2.vectors(r, i) * e1.vectors(c, i);
        }
        OrthogonalMap<double> sigma{rho};
        SymTensor3<double> acted = act(sigma, g1);
        double res = (acted - target).max_abs();
        if (res > bound && res <= polish_band) {
            sigma = refine_map(g1, sigma, [&](const SymTensor3<double>& moved) {
                return approx((moved - target).frobenius_sq());
            });
            acted = act(sigma, g1);
            res = (acted - target).max_abs();
        }
        if (res <= bound) {
            rep.maps.push_back(sigma);
            rep.reduced_forms.push_back(acted);
            worst = std::max(worst, res);
        }
    }
    rep.residual = worst;
    return rep;
}

}  // namespace

Outcome<RecoveryReport> recover_rotation_via_covariant(const SymTensor3<double>& g1,
                                                       const SymTensor3<double>& g2,
                                                       CovariantMatrix which, double tol) {
    if (g1.dim() != g2.dim()) throw DimensionMismatch("recover_rotation_via_covariant");
    return eigenvector_candidates(g1, covariant_matrix(g1, which), covariant_matrix(g2, which),
                                  g2, tol);
}

bool pd_solvable(const QTilde<double>& qt, double tol, std::string& violated) {
    const double q1 = qt.q[0], q2 = qt.q[1], q3 = qt.q[2], q4 = qt.q[3];
    const double scale = 1.0 + std::abs(q1) + std::abs(q2) + std::abs(q3) + std::abs(q4);
    const double eps = tol * scale;
    if (q1 < -eps) {
        violated = "qt1<0";
        return false;
    }
    if (q2 < -eps) {
        violated = "qt2<0";
        return false;
    }
    if (q2 > eps) {
        double poly = pd_solvability_poly(qt);
        if (poly < -tol * scale * scale * scale * scale) {
            violated = "degree8<0";
            return false;
        }
        return true;
    }
    // q2 == 0 branch
    if (q3 < -eps || q4 < -eps) {
        violated = "qt3_or_qt4<0";
        return false;
    }
    if (std::abs(q3 - q4 * q4 / 4.0) > eps * scale) {
        violated = "qt3!=qt4^2/4";
        return false;
    }
    return true;
}

bool pd_solvable_exact(const QTilde<Rat>& qt, std::string& violated) {
    const Rat &q1 = qt.q[0], &q2 = qt.q[1], &q3 = qt.q[2], &q4 = qt.q[3];
    if (sgn(q1) < 0) {
        violated = "qt1<0";
        return false;
    }
    if (sgn(q2) < 0) {
        violated = "qt2<0";
        return false;
    }
    if (sgn(q2) > 0) {
        if (sgn(pd_solvability_poly(qt)) < 0) {
            violated = "degree8<0";
            return false;
        }
        return true;
    }
    if (sgn(q3) < 0 || sgn(q4) < 0) {
        violated = "qt3_or_qt4<0";
        return false;
    }
    if (Rat(4) * q3 != q4 * q4) {
        violated = "qt3!=qt4^2/4";
        return false;
    }
    return true;
}

Outcome<PdParams<double>> recover_pd_params(const QTilde<double>& qt, double tol) {
    std::string violated;
    if (!pd_solvable(qt, tol, violated)) return Failure{"Unsolvable", violated};
    const double q1 = std::max(qt.q[0], 0.0), q2 = std::max(qt.q[1], 0.0);
    const double q3 = qt.q[2], q4 = qt.q[3];
    PdParams<double> p{0, 0, 0, 0};
    p.beta3 = std::sqrt(q1);
    const double scale = 1.0 + std::abs(q1) + std::abs(q2) + std::abs(q3) + std::abs(q4);
    if (q2 > tol * scale) {
        p.alpha = std::sqrt(q2) / 4.0;
        double g2sq = pd_solvability_poly(qt) / (4.0 * q2 * q2 * q2);
        p.gamma2 = std::sqrt(std::max(g2sq, 0.0));
        p.gamma1 = -p.alpha * (q2 * q2 - 8 * q3 - 2 * q2 * q4 + 2 * q4 * q4) / (q2 * q2);
    } else {
        p.alpha = 0.0;
        p.gamma1 = std::sqrt(std::max(q4, 0.0)) / 2.0;  // pinned representative
        p.gamma2 = 0.0;
    }
    // square roots turn O(eps) noise in the quadruple into O(sqrt(eps))
    // parameters near the sheet boundary; snap those to the boundary
    const double pscale =
        1e-7 * (1.0 + std::abs(p.alpha) + std::abs(p.gamma1) + std::abs(p.gamma2) +
                std::abs(p.beta3));
    if (p.gamma2 < pscale) p.gamma2 = 0.0;
    if (p.beta3 < pscale) p.beta3 = 0.0;
    return p;
}

Outcome<PdParams<Rat>> recover_pd_params_exact(const QTilde<Rat>& qt) {
    std::string violated;
    if (!pd_solvable_exact(qt, violated)) return Failure{"Unsolvable", violated};
    const Rat &q1 = qt.q[0], &q2 = qt.q[1], &q3 = qt.q[2], &q4 = qt.q[3];
    PdParams<Rat> p{Rat(0), Rat(0), Rat(0), Rat(0)};
    if (!exact_sqrt(q1, p.beta3))
        return Failure{"IrrationalParameters", "beta3 is not rational"};
    if (sgn(q2) > 0) {
        Rat root;
        if (!exact_sqrt(q2, root)) return Failure{"IrrationalParameters", "alpha is not rational"};
        p.alpha = root / Rat(4);
        Rat g2sq = pd_solvability_poly(qt) / (Rat(4) * q2 * q2 * q2);
        if (!exact_sqrt(g2sq, p.gamma2))
            return Failure{"IrrationalParameters", "gamma2 is not rational"};
        p.gamma1 = -p.alpha * (q2 * q2 - Rat(8) * q3 - Rat(2) * q2 * q4 + Rat(2) * q4 * q4) /
                   (q2 * q2);
    } else {
        Rat root;
        if (!exact_sqrt(q4, root)) return Failure{"IrrationalParameters", "gamma1 is not rational"};
        p.gamma1 = root / Rat(2);
    }
    return p;
}

Outcome<RecoveryReport> recover_pd_rotation(const SymTensor3<double>& g,
                                            const PdParams<double>& params, double tol) {
    if (g.dim() != 3) throw DimensionMismatch("recover_pd_rotation: need n=3");
    SymTensor3<double> r = make_pd_canonical(params.alpha, params.gamma1, params.gamma2,
                                             params.beta3);
    Outcome<RecoveryReport> out = eigenvector_candidates(g, star2(g), star2(r), r, tol);
    if (!out) return out;
    if (out->maps.empty())
        return Failure{"NoCandidateMatches",
                       "no eigenvector candidate reproduces the canonical form"};
    return out;
}

}  // namespace tridec
