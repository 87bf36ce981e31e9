#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tridec/eigen_sym.hpp"
#include "tridec/recover.hpp"
#include "tridec/relations.hpp"

namespace tridec {

enum class Verdict { FullyDecoupleable, PartiallyNotFully, NotDecoupleable, Indeterminate };

enum class IndetReason { None, DegenerateEigenvalues, ToleranceBoundary, DomainExcluded };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::FullyDecoupleable: return "FullyDecoupleable";
        case Verdict::PartiallyNotFully: return "PartiallyNotFully";
        case Verdict::NotDecoupleable: return "NotDecoupleable";
        default: return "Indeterminate";
    }
}

inline const char* to_string(IndetReason r) {
    switch (r) {
        case IndetReason::DegenerateEigenvalues: return "DegenerateEigenvalues";
        case IndetReason::ToleranceBoundary: return "ToleranceBoundary";
        case IndetReason::DomainExcluded: return "DomainExcluded";
        default: return "None";
    }
}

struct ResidualEntry {
    std::string name;
    int degree;
    double value;       // numeric view of the residual
    std::string exact;  // exact rational string when computed in exact mode
    double coef_scale;  // coefficient magnitude of the cleared relation
};

struct Certificate {
    std::string name;
    bool passed;
};

struct Classification {
    Verdict verdict = Verdict::Indeterminate;
    IndetReason reason = IndetReason::None;
    std::vector<double> betas;              // FD verdicts: nonnegative sqrt of Gamma*2 spectrum
    std::optional<PdParams<double>> pd;     // PartiallyNotFully verdicts
    std::vector<ResidualEntry> residuals;
    std::vector<Certificate> certificates;
};

namespace detail {

// Verdict bands for float mode: residuals comfortably below the scale-aware
// threshold accept, comfortably above reject, and anything within a factor of
// 10 of the threshold is refused as ToleranceBoundary.
enum class Band { Accept, Reject, Boundary };

inline double degree_threshold(double tol, double frob, int degree) {
    double t = tol;
    for (int i = 0; i < degree; ++i) t *= (1.0 + frob);
    return t;
}

template <class K>
Band residual_band(const std::vector<RelationResidual<K>>& rs, double tol, double frob) {
    if constexpr (is_exact_field_v<K>) {
        for (const auto& r : rs)
            if (!(r.value == K(0))) return Band::Reject;
        return Band::Accept;
    } else {
        double worst = 0;
        for (const auto& r : rs)
            worst = std::max(worst, std::abs(approx(r.value)) /
                                        (r.coef_scale * degree_threshold(tol, frob, r.degree)));
        if (worst <= 0.1) return Band::Accept;
        if (worst >= 10.0) return Band::Reject;
        return Band::Boundary;
    }
}

template <class K>
void record_residuals(Classification& c, const std::vector<RelationResidual<K>>& rs) {
    for (const auto& r : rs) {
        ResidualEntry e{r.name, r.degree, approx(r.value), "", r.coef_scale};
        if constexpr (is_exact_field_v<K>) e.exact = scalar_repr(r.value);
        c.residuals.push_back(std::move(e));
    }
}

inline std::vector<double> betas_from_spectrum(const SymTensor3<double>& g) {
    SymEigen eig = sym_eigen(star2(g));
    std::vector<double> out;
    out.reserve(eig.values.size());
    for (double z : eig.values) out.push_back(std::sqrt(std::max(z, 0.0)));
    return out;
}

}  // namespace detail

// n=2 membership: the single parameter relation a2(a2-a0) = a1(a3-a1), cross
// checked against the equivalent invariant form I1 = I2.  Total on n=2.
template <class K>
Classification classify_n2(const SymTensor3<K>& g, double tol = kDefaultTol) {
    if (g.dim() != 2) throw DimensionMismatch("classify_n2: need n=2");
    N2Params<K> a = n2_params(g);
    InvariantSetN2<K> inv = so2_basis(g);
    std::vector<RelationResidual<K>> rs;
    rs.push_back({"param_relation", 2, a.a2 * (a.a2 - a.a0) - a.a1 * (a.a3 - a.a1), 1.0});
    rs.push_back({"i1_minus_i2", 2, inv.i1 - inv.i2, 1.0});

    Classification c;
    detail::record_residuals(c, rs);
    const double frob = g.frobenius();
    detail::Band b0 = detail::residual_band(decltype(rs){rs[0]}, tol, frob);
    detail::Band b1 = detail::residual_band(decltype(rs){rs[1]}, tol, frob);
    c.certificates.push_back({"param_relation", b0 == detail::Band::Accept});
    c.certificates.push_back({"i1_equals_i2", b1 == detail::Band::Accept});
    if (b0 == detail::Band::Boundary || b1 == detail::Band::Boundary || b0 != b1) {
        c.verdict = Verdict::Indeterminate;
        c.reason = IndetReason::ToleranceBoundary;
        return c;
    }
    if (b0 == detail::Band::Reject) {
        c.verdict = Verdict::NotDecoupleable;
        return c;
    }
    c.verdict = Verdict::FullyDecoupleable;
    if (g.is_zero()) {
        c.betas = {0.0, 0.0};
    } else {
        Outcome<RecoveryReport> rec = recover_n2(g.to_double(), tol);
        if (rec) {
            N2Params<double> r0 = n2_params(rec->reduced);
            c.betas = {r0.a0, r0.a3};  // (beta1, beta2) in the proof's slots
        }
    }
    return c;
}

// n=3 full decoupleability: the 13-relation certificate in the
// characteristic-polynomial invariants of Gamma*2.
template <class K>
Classification classify_fd_n3(const SymTensor3<K>& g, double tol = kDefaultTol) {
    if (g.dim() != 3) throw DimensionMismatch("classify_fd_n3: need n=3");
    InvariantSetN3<K> b = oa_basis(g);
    QTilde<K> qt = qtilde_full(g);
    auto rs = fd_relation_residuals(b, qt);

    Classification c;
    detail::record_residuals(c, rs);
    detail::Band band = detail::residual_band(rs, tol, g.frobenius());
    c.certificates.push_back({"13_relations", band == detail::Band::Accept});
    switch (band) {
        case detail::Band::Accept:
            c.verdict = Verdict::FullyDecoupleable;
            c.betas = detail::betas_from_spectrum(g.to_double());
            break;
        case detail::Band::Reject:
            c.verdict = Verdict::NotDecoupleable;
            break;
        case detail::Band::Boundary:
            c.verdict = Verdict::Indeterminate;
            c.reason = IndetReason::ToleranceBoundary;
            break;
    }
    return c;
}

// n=3 partially-but-not-fully decoupleable: 9 relations on the domain
// H2 != 10 J2 plus the semi-algebraic solvability conditions.  Fully
// decoupleable tensors land in Indeterminate(DomainExcluded) by construction.
template <class K>
Classification classify_pd_not_fd_n3(const SymTensor3<K>& g, double tol = kDefaultTol) {
    if (g.dim() != 3) throw DimensionMismatch("classify_pd_not_fd_n3: need n=3");
    InvariantSetN3<K> b = oa_basis(g);
    Classification c;

    const K gap = K(10) * b.J2 - b.H2;
    const double frob = g.frobenius();
    bool excluded;
    if constexpr (is_exact_field_v<K>) {
        excluded = (gap == K(0));
    } else {
        double f2 = frob * frob;
        excluded = std::abs(approx(gap)) <= tol * (1.0 + f2 * f2);
    }
    if (excluded) {
        c.verdict = Verdict::Indeterminate;
        c.reason = IndetReason::DomainExcluded;
        c.certificates.push_back({"domain_H2_ne_10J2", false});
        return c;
    }
    c.certificates.push_back({"domain_H2_ne_10J2", true});

    QTilde<K> qt = qtilde_partial_from(b);
    auto rs = pd_relation_residuals(b, qt.q[0]);
    detail::record_residuals(c, rs);
    detail::Band band = detail::residual_band(rs, tol, frob);
    c.certificates.push_back({"9_relations", band == detail::Band::Accept});
    if (band == detail::Band::Boundary) {
        c.verdict = Verdict::Indeterminate;
        c.reason = IndetReason::ToleranceBoundary;
        return c;
    }
    if (band == detail::Band::Reject) {
        c.verdict = Verdict::NotDecoupleable;
        return c;
    }

    // Solvability (real canonical parameters must exist).
    QTilde<double> qd{{approx(qt.q[0]), approx(qt.q[1]), approx(qt.q[2]), approx(qt.q[3])}, 4};
    bool solvable;
    std::string violated;
    if constexpr (is_exact_field_v<K>) {
        solvable = pd_solvable_exact(qt, violated);
    } else {
        solvable = pd_solvable(qd, tol, violated);
    }
    c.certificates.push_back({"solvability", solvable});
    if (!solvable) {
        c.verdict = Verdict::NotDecoupleable;
        c.certificates.push_back({"violated:" + violated, false});
        return c;
    }

    c.verdict = Verdict::PartiallyNotFully;
    Outcome<PdParams<double>> params = recover_pd_params(qd, tol);
    if (params) c.pd = *params;
    return c;
}

// Generic-n decider via eigenstructure of Gamma*2; complete whenever the
// eigenvalues are pairwise distinct.
struct GenericClassification {
    Classification classification;
    std::optional<OrthogonalMap<double>> map;
};

GenericClassification classify_fd_generic(const SymTensor3<double>& g, double tol = kDefaultTol);

// Quick necessary test: Gamma*2 == u . Gamma holds on every fully
// decoupleable tensor; failure proves non-membership.
template <class K>
bool fd_necessary_quick(const SymTensor3<K>& g, double tol = kDefaultTol) {
    Mat<K> diff = star2(g) - u_dot_gamma(g);
    if constexpr (is_exact_field_v<K>) {
        for (int i = 0; i < diff.rows(); ++i)
            for (int j = 0; j < diff.cols(); ++j)
                if (!(diff(i, j) == K(0))) return false;
        return true;
    } else {
        double frob = g.frobenius();
        return max_abs(diff) <= tol * (1.0 + frob) * (1.0 + frob);
    }
}

}  // namespace tridec
