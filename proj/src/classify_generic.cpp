#include "tridec/classify.hpp"

namespace tridec {

GenericClassification classify_fd_generic(const SymTensor3<double>& g, double tol) {
    const int n = g.dim();
    GenericClassification out;
    Classification& c = out.classification;

    Mat<double> s2 = star2(g);
    SymEigen eig = sym_eigen(s2);
    if (!distinct_eigenvalues(eig.values, frobenius(s2))) {
        c.verdict = Verdict::Indeterminate;
        c.reason = IndetReason::DegenerateEigenvalues;
        return out;
    }

    // Target is diag(z_i) whose eigenvectors are the coordinate axes, so the
    // candidates are rho_eps with rows eps_i u_i^t.
    const double scale = 1.0 + g.frobenius();
    const double bound = tol * scale;
    auto off_diag_max = [](const SymTensor3<double>& t) {
        double off = 0;
        t.for_each([&](int i, int j, int k, double v) {
            if (!(i == j && j == k)) off = std::max(off, std::abs(v));
        });
        return off;
    };
    for (int mask = 0; mask < (1 << n); ++mask) {
        Mat<double> rho(n, n);
        for (int i = 0; i < n; ++i) {
            double eps = (mask >> i) & 1 ? -1.0 : 1.0;
            for (int j = 0; j < n; ++j) rho(i, j) = eps * eig.vectors(j, i);
        }
        OrthogonalMap<double> sigma{rho};
        SymTensor3<double> acted = act(sigma, g);
        double off = off_diag_max(acted);
        if (off > bound && off <= 1e-4 * scale) {
            // eigenvector-limited candidate; polish against the pattern
            sigma = refine_map(g, sigma, [&](const SymTensor3<double>& moved) {
                return pattern_residual(moved, Pattern::FD);
            });
            acted = act(sigma, g);
            off = off_diag_max(acted);
        }
        if (off <= bound) {
            c.verdict = Verdict::FullyDecoupleable;
            c.betas.reserve(n);
            for (double z : eig.values) c.betas.push_back(std::sqrt(std::max(z, 0.0)));
            c.certificates.push_back({"diagonalizing_candidate", true});
            c.residuals.push_back({"off_diagonal_max", 1, off, "", 1.0});
            out.map = sigma;
            return out;
        }
    }
    c.verdict = Verdict::NotDecoupleable;
    c.certificates.push_back({"diagonalizing_candidate", false});
    return out;
}

}  // namespace tridec
