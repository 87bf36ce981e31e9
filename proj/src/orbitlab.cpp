#include "tridec/orbitlab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "detail_nm.hpp"

namespace tridec {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

// Seeded uniform doubles in [0,1); hand-rolled so the stream is identical
// across standard libraries.
struct UniformStream {
    std::mt19937_64 rng;
    explicit UniformStream(uint64_t seed) : rng(seed) {}
    double next() { return (rng() >> 11) * 0x1.0p-53; }
    double normal() {
        // Box-Muller; one value per call keeps the stream simple
        double u1 = std::max(next(), 1e-300), u2 = next();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }
    uint64_t integer(uint64_t bound) { return rng() % bound; }
};

// Pythagorean triples (a, b, c): (a/c, b/c) are exact cosine/sine pairs.
constexpr int kTriples[][3] = {{3, 4, 5},    {5, 12, 13},  {8, 15, 17},  {7, 24, 25},
                               {20, 21, 29}, {9, 40, 41},  {12, 35, 37}, {11, 60, 61},
                               {28, 45, 53}, {33, 56, 65}, {16, 63, 65}, {48, 55, 73}};

}  // namespace

OrthogonalMap<double> haar_orthogonal(int n, uint64_t seed) {
    UniformStream u(seed ^ 0x9e3779b97f4a7c15ull);
    Mat<double> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = u.normal();
    // Modified Gram-Schmidt on columns, run twice for orthogonality headroom.
    // Gram-Schmidt keeps the R diagonal positive, which is exactly the sign
    // convention under which QR of a normal matrix is Haar.
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                double d = 0;
                for (int i = 0; i < n; ++i) d += a(i, k) * a(i, j);
                for (int i = 0; i < n; ++i) a(i, j) -= d * a(i, k);
            }
            double norm = 0;
            for (int i = 0; i < n; ++i) norm += a(i, j) * a(i, j);
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                // astronomically unlikely; perturb deterministically and restart
                return haar_orthogonal(n, seed + 0x5851f42d4c957f2dull);
            }
            for (int i = 0; i < n; ++i) a(i, j) /= norm;
        }
    }
    return OrthogonalMap<double>(a);
}

OrthogonalMap<Rat> rational_orthogonal(int n, uint64_t seed) {
    UniformStream u(seed ^ 0xc2b2ae3d27d4eb4full);
    OrthogonalMap<Rat> m = OrthogonalMap<Rat>::identity(n);
    const int planes = std::max(1, n * (n - 1) / 2);
    for (int g = 0; g < 2 * planes; ++g) {
        int p = int(u.integer(uint64_t(n)));
        int q = int(u.integer(uint64_t(n - 1)));
        if (q >= p) ++q;
        if (p > q) std::swap(p, q);
        const int* t = kTriples[u.integer(std::size(kTriples))];
        Rat c(t[0], t[2]), s(t[1], t[2]);
        if (u.integer(2)) std::swap(c, s);
        if (u.integer(2)) s = -s;
        m = OrthogonalMap<Rat>::givens(n, p, q, c, s) * m;
    }
    std::vector<int> signs(n);
    for (int i = 0; i < n; ++i) signs[i] = u.integer(2) ? -1 : 1;
    return OrthogonalMap<Rat>::diagonal_signs(signs) * m;
}

double pattern_residual(const SymTensor3<double>& g, Pattern p) {
    const int last = g.dim() - 1;
    double s = 0;
    g.for_each([&](int i, int j, int k, double v) {
        bool off;
        if (p == Pattern::FD)
            off = !(i == j && j == k);
        else
            off = (i == last || j == last || k == last) && !(i == last && j == last && k == last);
        if (off) s += SymTensor3<double>::multiplicity(i, j, k) * v * v;
    });
    return s;
}

OrthogonalMap<double> oracle_map(int n, const std::vector<double>& angles, bool reflected) {
    Mat<double> m = Mat<double>::identity(n);
    int idx = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double c = std::cos(angles[idx]), s = std::sin(angles[idx]);
            ++idx;
            // left-multiply by the Givens rotation in the (p, q) plane
            for (int col = 0; col < n; ++col) {
                double xp = m(p, col), xq = m(q, col);
                m(p, col) = c * xp - s * xq;
                m(q, col) = s * xp + c * xq;
            }
        }
    if (reflected)
        for (int col = 0; col < n; ++col) m(n - 1, col) = -m(n - 1, col);
    return OrthogonalMap<double>(m);
}

OracleResult orbit_search_oracle(const SymTensor3<double>& g, Pattern p, OracleBudget budget) {
    const int n = g.dim();
    if (n != 2 && n != 3) throw DimensionMismatch("orbit_search_oracle: n must be 2 or 3");
    const int d = n * (n - 1) / 2;

    auto objective = [&](const std::vector<double>& angles, bool refl) {
        return pattern_residual(act(oracle_map(n, angles, refl), g), p);
    };

    OracleResult best;
    best.min_residual = pattern_residual(g, p);
    best.angles.assign(d, 0.0);
    best.reflected = false;
    if (best.min_residual == 0.0) return best;

    // deterministic low-discrepancy starts (Kronecker sequence), both
    // reflection branches
    const double alphas[3] = {0.6180339887498949, 0.7548776662466927, 0.5698402909980532};
    for (int s = 0; s < budget.starts; ++s) {
        std::vector<double> x(d);
        for (int j = 0; j < d; ++j) x[j] = kTwoPi * std::fmod(0.5 + alphas[j] * (s / 2 + 1), 1.0);
        bool refl = (s % 2) == 1;
        auto f = [&](const std::vector<double>& a) { return objective(a, refl); };
        double val = detail::nelder_mead(f, x, budget.iters);
        if (val < best.min_residual) {
            best.min_residual = val;
            best.angles = x;
            best.reflected = refl;
            if (val < 1e-24) break;
        }
    }
    return best;
}

OrthogonalMap<double> refine_map(const SymTensor3<double>& g, const OrthogonalMap<double>& start,
                                 const std::function<double(const SymTensor3<double>&)>& objective,
                                 int iters) {
    const int n = g.dim();
    const int d = n * (n - 1) / 2;
    auto f = [&](const std::vector<double>& th) {
        OrthogonalMap<double> rho{oracle_map(n, th, false).matrix() * start.matrix()};
        return objective(act(rho, g));
    };
    std::vector<double> x(d, 0.0);
    detail::nelder_mead(f, x, iters, 1e-4);
    return OrthogonalMap<double>{oracle_map(n, x, false).matrix() * start.matrix()};
}

OrbitSample make_sample(SampleKind kind, int n, uint64_t seed) {
    UniformStream u(seed * 0x100000001b3ull + 0xcbf29ce484222325ull);
    SymTensor3<double> form(n);
    switch (kind) {
        case SampleKind::FD: {
            // magnitude buckets [i+1, i+1.8] are disjoint, so the spectrum of
            // Gamma*2 is bounded away from degeneracy
            std::vector<double> betas(n);
            for (int i = 0; i < n; ++i) betas[i] = (i + 1) + 0.8 * u.next();
            for (int i = 0; i < n; ++i)
                if (u.integer(2)) betas[i] = -betas[i];
            form = make_fd(betas);
            break;
        }
        case SampleKind::PDnotFD: {
            if (n != 3) throw DimensionMismatch("PD samples require n=3");
            double alpha = 0.6 + 1.4 * u.next();
            double g1 = -1.0 + 2.0 * u.next();
            double g2 = -1.0 + 2.0 * u.next();
            // keep alpha^2 != g1^2 + g2^2 with margin so H2 != 10 J2
            while (std::abs(alpha * alpha - g1 * g1 - g2 * g2) < 0.2) alpha += 0.3;
            double b3 = 0.5 + 2.0 * u.next();
            form = make_pd_canonical(alpha, g1, g2, b3);
            break;
        }
        case SampleKind::Generic: {
            form.for_each([&](int i, int j, int k, double) {
                form.at(i, j, k) = -2.0 + 4.0 * u.next();
            });
            break;
        }
    }
    OrbitSample s{kind, form, haar_orthogonal(n, seed ^ 0xa076bdf2f6e3f2d5ull), form};
    s.point = act(s.map, s.seed_form);
    return s;
}

}  // namespace tridec
