#include <doctest.h>

#include "helpers.hpp"
#include "tridec/classify.hpp"

using namespace tridec;

namespace {

Rat nonzero_rat(std::mt19937_64& rng) {
    Rat r = oracle::random_rat(rng);
    return r == 0 ? Rat(1, 2) : r;
}

}  // namespace

TEST_CASE("classify_n2: decoupled, coupled, and rotated inputs") {
    Classification dec = classify_n2(n2_tensor(Rat(5), Rat(0), Rat(0), Rat(3)));
    CHECK(dec.verdict == Verdict::FullyDecoupleable);

    Classification no = classify_n2(n2_tensor(Rat(0), Rat(0), Rat(1), Rat(0)));
    CHECK(no.verdict == Verdict::NotDecoupleable);
    CHECK(no.residuals[0].exact == "1");  // a2(a2-a0) = 1 against a1(a3-a1) = 0

    Classification zero = classify_n2(SymTensor3<Rat>(2));
    CHECK(zero.verdict == Verdict::FullyDecoupleable);
    CHECK(zero.betas == std::vector<double>{0.0, 0.0});

    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 100; ++rep) {
        SymTensor3<Rat> seed = make_fd(std::vector<Rat>{Rat(3), Rat(0)});
        seed.set(1, 1, 1, Rat(5));  // betas (3, 5)
        SymTensor3<Rat> g = act(rational_orthogonal(2, rng()), seed);
        Classification c = classify_n2(g);
        CHECK(c.verdict == Verdict::FullyDecoupleable);
        REQUIRE(c.betas.size() == 2);
        // |beta| multiset must be {3, 5}
        double lo = std::min(std::abs(c.betas[0]), std::abs(c.betas[1]));
        double hi = std::max(std::abs(c.betas[0]), std::abs(c.betas[1]));
        CHECK(lo == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(hi == doctest::Approx(5.0).epsilon(1e-9));
    }
}

TEST_CASE("classify_n2: the two criterion forms agree everywhere") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 2000; ++rep) {
        SymTensor3<Rat> g = oracle::random_rat_tensor(2, rng);
        N2Params<Rat> a = n2_params(g);
        InvariantSetN2<Rat> v = so2_basis(g);
        bool rel = a.a2 * (a.a2 - a.a0) == a.a1 * (a.a3 - a.a1);
        bool inv = v.i1 == v.i2;
        CHECK(rel == inv);
        Classification c = classify_n2(g);
        CHECK(c.verdict == (rel ? Verdict::FullyDecoupleable : Verdict::NotDecoupleable));
    }
}

TEST_CASE("classify_fd_n3: rotated diagonal round trip with exact residuals") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Rat> betas = {nonzero_rat(rng), nonzero_rat(rng) + Rat(2),
                                  nonzero_rat(rng) + Rat(5)};
        SymTensor3<Rat> g = act(rational_orthogonal(3, rng()), make_fd(betas));
        Classification c = classify_fd_n3(g);
        REQUIRE(c.verdict == Verdict::FullyDecoupleable);
        REQUIRE(c.residuals.size() == 13);
        for (const auto& r : c.residuals) CHECK(r.exact == "0");
        // |beta| multiset within the float eigen path tolerance
        std::vector<double> want;
        for (const Rat& b : betas) want.push_back(std::abs(to_double(b)));
        std::sort(want.begin(), want.end());
        std::vector<double> got = c.betas;
        std::sort(got.begin(), got.end());
        double scale = 1.0 + g.frobenius();
        for (int i = 0; i < 3; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-8 * scale);
    }
}

TEST_CASE("classify_fd_n3: dense fixture rejected, zero tensor accepted") {
    Classification c = classify_fd_n3(oracle::dense_fixture<Rat>());
    CHECK(c.verdict == Verdict::NotDecoupleable);
    bool h2_nonzero = false;
    for (const auto& r : c.residuals)
        if (r.name == "H2") h2_nonzero = (r.exact == "300");  // 1060 - 10*76
    CHECK(h2_nonzero);

    Classification z = classify_fd_n3(SymTensor3<Rat>(3));
    CHECK(z.verdict == Verdict::FullyDecoupleable);
    CHECK(z.betas == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("classify_pd_not_fd_n3: rotated canonical forms accepted with exact residuals") {
    std::mt19937_64 rng(73);
    int done = 0;
    while (done < 100) {
        PdParams<Rat> p{Rat(2) + oracle::random_rat(rng), oracle::random_rat(rng),
                        oracle::random_rat(rng), nonzero_rat(rng)};
        if (p.alpha * p.alpha == p.gamma1 * p.gamma1 + p.gamma2 * p.gamma2) continue;
        SymTensor3<Rat> r = make_pd_canonical(p.alpha, p.gamma1, p.gamma2, p.beta3);
        // 10 J2 - H2 = 100 (alpha^2 - gamma1^2 - gamma2^2) on canonical forms
        InvariantSetN3<Rat> b = oa_basis(r);
        CHECK(Rat(10) * b.J2 - b.H2 ==
              Rat(100) * (p.alpha * p.alpha - p.gamma1 * p.gamma1 - p.gamma2 * p.gamma2));

        SymTensor3<Rat> g = act(rational_orthogonal(3, rng()), r);
        Classification c = classify_pd_not_fd_n3(g);
        REQUIRE(c.verdict == Verdict::PartiallyNotFully);
        REQUIRE(c.residuals.size() == 9);
        for (const auto& rr : c.residuals) CHECK(rr.exact == "0");
        REQUIRE(c.pd.has_value());
        ++done;
    }
}

TEST_CASE("classify_pd_not_fd_n3: rejection and excluded domain") {
    Classification c = classify_pd_not_fd_n3(oracle::dense_fixture<Rat>());
    CHECK(c.verdict == Verdict::NotDecoupleable);

    Classification d = classify_pd_not_fd_n3(make_fd(std::vector<Rat>{Rat(1), Rat(2), Rat(3)}));
    CHECK(d.verdict == Verdict::Indeterminate);
    CHECK(d.reason == IndetReason::DomainExcluded);
}

TEST_CASE("classify_fd_generic: round trip, degenerate spectrum, generic n=4 reject") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 25; ++rep) {
        OrbitSample s = make_sample(SampleKind::FD, 3, rng());
        GenericClassification gc = classify_fd_generic(s.point);
        REQUIRE(gc.classification.verdict == Verdict::FullyDecoupleable);
        REQUIRE(gc.map.has_value());
        // verified sigma: act(sigma, point) is diagonal within tolerance
        SymTensor3<double> red = act(*gc.map, s.point);
        double off = 0;
        red.for_each([&](int i, int j, int k, double v) {
            if (!(i == j && j == k)) off = std::max(off, std::abs(v));
        });
        CHECK(off <= 1e-9 * (1.0 + s.point.frobenius()));
    }

    // x1^3 - x2^3 has Gamma*2 = identity
    SymTensor3<double> sym = n2_tensor(-1.0, 0.0, 0.0, 1.0);
    GenericClassification gc = classify_fd_generic(sym);
    CHECK(gc.classification.verdict == Verdict::Indeterminate);
    CHECK(gc.classification.reason == IndetReason::DegenerateEigenvalues);

    for (int rep = 0; rep < 10; ++rep) {
        OrbitSample s = make_sample(SampleKind::Generic, 4, 1000 + rep);
        GenericClassification g4 = classify_fd_generic(s.point);
        CHECK(g4.classification.verdict == Verdict::NotDecoupleable);
    }
}

TEST_CASE("classify_fd_generic agrees with classify_fd_n3 on a 1000-sample suite") {
    std::mt19937_64 rng(83);
    int checked = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        SampleKind kind = rep % 3 == 0 ? SampleKind::FD
                        : rep % 3 == 1 ? SampleKind::Generic
                                       : SampleKind::PDnotFD;
        OrbitSample s = make_sample(kind, 3, rng());
        GenericClassification gc = classify_fd_generic(s.point);
        if (gc.classification.verdict == Verdict::Indeterminate) continue;
        Classification c13 = classify_fd_n3(s.point);
        if (c13.verdict == Verdict::Indeterminate) continue;
        CHECK(gc.classification.verdict == c13.verdict);
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("cross-classifier consistency: PD-not-FD tensors are rejected by the FD test") {
    std::mt19937_64 rng(211);
    int done = 0;
    while (done < 50) {
        PdParams<Rat> p{Rat(2) + oracle::random_rat(rng), oracle::random_rat(rng),
                        oracle::random_rat(rng), nonzero_rat(rng)};
        if (p.alpha * p.alpha == p.gamma1 * p.gamma1 + p.gamma2 * p.gamma2) continue;
        SymTensor3<Rat> g = act(rational_orthogonal(3, rng()),
                                make_pd_canonical(p.alpha, p.gamma1, p.gamma2, p.beta3));
        CHECK(classify_fd_n3(g).verdict == Verdict::NotDecoupleable);
        ++done;
    }
}

TEST_CASE("classify_fd_generic handles the n=8 target dimension") {
    OrbitSample fd = make_sample(SampleKind::FD, 8, 4041);
    GenericClassification gc = classify_fd_generic(fd.point);
    REQUIRE(gc.classification.verdict == Verdict::FullyDecoupleable);
    SymTensor3<double> red = act(*gc.map, fd.point);
    double off = 0;
    red.for_each([&](int i, int j, int k, double v) {
        if (!(i == j && j == k)) off = std::max(off, std::abs(v));
    });
    CHECK(off <= 1e-8 * (1.0 + fd.point.frobenius()));
    CHECK(gc.classification.betas.size() == 8);

    OrbitSample gen = make_sample(SampleKind::Generic, 8, 4042);
    CHECK(classify_fd_generic(gen.point).classification.verdict == Verdict::NotDecoupleable);
}

TEST_CASE("fd_necessary_quick: necessary test behaviour") {
    SymTensor3<Rat> d = make_fd(std::vector<Rat>{Rat(1), Rat(-2), Rat(7, 2)});
    CHECK(fd_necessary_quick(d));

    // canonical n=2 subtensor with gamma*beta2 != 2 gamma^2 embedded in n=3
    SymTensor3<Rat> t(3);
    t.set(0, 0, 0, Rat(3));
    t.set(0, 0, 1, Rat(2));
    t.set(1, 1, 1, Rat(5));
    t.set(2, 2, 2, Rat(4));
    CHECK_FALSE(fd_necessary_quick(t));

    std::mt19937_64 rng(89);
    for (int rep = 0; rep < 50; ++rep) {
        OrbitSample s = make_sample(SampleKind::FD, 3, rng());
        CHECK(fd_necessary_quick(s.point, 1e-9));
        Classification c = classify_fd_n3(s.point);
        if (c.verdict == Verdict::FullyDecoupleable) CHECK(fd_necessary_quick(s.point, 1e-9));
    }
}

TEST_CASE("float PD pipeline: classify then recover rotation on Haar-rotated canonical forms") {
    std::mt19937_64 rng(223);
    int verified = 0, degenerate = 0, boundary = 0;
    for (int rep = 0; rep < 100; ++rep) {
        OrbitSample s = make_sample(SampleKind::PDnotFD, 3, rng());
        Classification c = classify_pd_not_fd_n3(s.point);
        if (c.verdict == Verdict::Indeterminate) {
            ++boundary;
            continue;
        }
        REQUIRE(c.verdict == Verdict::PartiallyNotFully);
        REQUIRE(c.pd.has_value());
        Outcome<RecoveryReport> rot = recover_pd_rotation(s.point, *c.pd);
        if (!rot.ok()) {
            // repeated R*2 eigenvalues are a legitimate refusal, anything else is not
            REQUIRE(rot.failure().code == "DegenerateEigenvalues");
            ++degenerate;
            continue;
        }
        CHECK(rot->residual <= 1e-8 * (1 + s.point.frobenius()));
        ++verified;
    }
    CHECK(verified >= 90);
    CHECK(boundary <= 2);
    CHECK(degenerate <= 8);
}

TEST_CASE("float mode: residual near the threshold yields ToleranceBoundary") {
    // decoupled (beta2, 0, 0, beta1) = (2, eps, 0, 1): relation residual is
    // -eps(1 - eps) ~ -eps; park it right at the degree-2 threshold
    double frob = std::sqrt(1.0 + 4.0);
    double thr = 1e-9 * (1.0 + frob) * (1.0 + frob);
    SymTensor3<double> g = n2_tensor(2.0, thr, 0.0, 1.0);
    Classification c = classify_n2(g, 1e-9);
    CHECK(c.verdict == Verdict::Indeterminate);
    CHECK(c.reason == IndetReason::ToleranceBoundary);

    // far side of the band: clear rejection
    SymTensor3<double> bad = n2_tensor(2.0, 1e-3, 0.0, 1.0);
    CHECK(classify_n2(bad, 1e-9).verdict == Verdict::NotDecoupleable);
    // comfortably inside: clear accept
    SymTensor3<double> good = n2_tensor(2.0, 0.0, 0.0, 1.0);
    CHECK(classify_n2(good, 1e-9).verdict == Verdict::FullyDecoupleable);
}
