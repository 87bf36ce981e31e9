#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "tridec/covariants.hpp"

namespace tridec {

// Reduced fully decoupled form: entry (i,i,i) = beta_i, all else zero.
template <class K>
SymTensor3<K> make_fd(const std::vector<K>& betas) {
    SymTensor3<K> t(int(betas.size()));
    for (size_t i = 0; i < betas.size(); ++i) t.set(int(i), int(i), int(i), betas[i]);
    return t;
}

// Canonical partially-decoupled n=3 form: cubic
// (3a - g1) x1^3 + 3 g2 x1^2 x2 + 3 (a + g1) x1 x2^2 - g2 x2^3 + b3 x3^3.
template <class K>
SymTensor3<K> make_pd_canonical(const K& alpha, const K& gamma1, const K& gamma2, const K& beta3) {
    SymTensor3<K> t(3);
    t.set(0, 0, 0, K(3) * alpha - gamma1);
    t.set(0, 0, 1, gamma2);
    t.set(0, 1, 1, alpha + gamma1);
    t.set(1, 1, 1, -gamma2);
    t.set(2, 2, 2, beta3);
    return t;
}

// Haar-distributed element of O(n): orthonormalized standard normals with the
// R-diagonal sign correction.  Deterministic per seed.
OrthogonalMap<double> haar_orthogonal(int n, uint64_t seed);

// Exact orthogonal matrix with rational entries (products of Pythagorean
// Givens rotations, sign flips and a permutation); fixture generator for
// zero-tolerance invariance checks.
OrthogonalMap<Rat> rational_orthogonal(int n, uint64_t seed);

enum class Pattern { FD, PD };

// Sum of squares of the entries of g outside the target pattern (ordered
// indices).  FD: everything off the (i,i,i) diagonal.  PD: every entry with
// an index touching the last axis except (n,n,n).
double pattern_residual(const SymTensor3<double>& g, Pattern p);

struct OracleBudget {
    int starts = 32;
    int iters = 200;
};

struct OracleResult {
    double min_residual = 0.0;
    std::vector<double> angles;  // Givens angles of the best map found
    bool reflected = false;
};

// Numerical orbit search: minimizes pattern_residual(act(sigma, g)) over O(n)
// parametrized by n(n-1)/2 Givens angles times an optional reflection, with
// deterministic multi-starts.  The result is an upper bound on the true orbit
// distance to the pattern, a falsification tool rather than a certificate.
OracleResult orbit_search_oracle(const SymTensor3<double>& g, Pattern p, OracleBudget budget = {});

// Builds the orthogonal map for an oracle parameter vector.
OrthogonalMap<double> oracle_map(int n, const std::vector<double>& angles, bool reflected);

// Local refinement of a near-optimal map: minimizes
// objective(act(G(theta) * start, g)) over small Givens corrections.  Used to
// polish eigenvector-derived candidates whose accuracy is limited by the
// eigenvalue gap.
OrthogonalMap<double> refine_map(const SymTensor3<double>& g, const OrthogonalMap<double>& start,
                                 const std::function<double(const SymTensor3<double>&)>& objective,
                                 int iters = 200);

enum class SampleKind { FD, PDnotFD, Generic };

struct OrbitSample {
    SampleKind label;
    SymTensor3<double> seed_form;
    OrthogonalMap<double> map;
    SymTensor3<double> point;  // act(map, seed_form)
};

// Seeded fixture generator used by the CLI `sample` subcommand and the
// randomized suites.
OrbitSample make_sample(SampleKind kind, int n, uint64_t seed);

}  // namespace tridec
