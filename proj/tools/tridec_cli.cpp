// tridec: decide orthogonal decoupleability of symmetric rank-3 tensors,
// evaluate the certifying polynomial invariants, and recover explicit maps
// to the decoupled canonical forms.
//
// Exit codes: 0 accepted/success, 1 rejected, 2 indeterminate,
//             64 usage error, 65 malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tridec/classify.hpp"
#include "tridec/json_io.hpp"
#include "tridec/molien.hpp"
#include "tridec/version.hpp"

using nlohmann::json;
using namespace tridec;

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 64;
constexpr int kExitMalformed = 65;

struct Input {
    TensorDocument doc;
    std::string digest;
};

Input load_input(const std::string& path, bool force_exact) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    Input input;
    try {
        input.doc = parse_tensor_document(j);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad tensor document: ") + e.what());
    }
    input.digest = digest_hex(bytes);
    if (force_exact && !input.doc.exact) {
        // promote a float document whose values are all integral
        SymTensor3<Rat> r(input.doc.dbl.dim());
        input.doc.dbl.for_each([&](int i, int jj, int k, double v) {
            if (v != std::floor(v) || std::abs(v) > 9.0e15)
                throw MalformedInput("--exact requires rational strings or integer values");
            r.set(i, jj, k, Rat(static_cast<long>(v)));
        });
        input.doc.rat = r;
        input.doc.exact = true;
    }
    return input;
}

json base_report(const std::string& mode, const Input& in) {
    return json{{"tool", "tridec"},
                {"version", kVersion},
                {"mode", mode},
                {"input_digest", in.digest},
                {"exact", in.doc.exact}};
}

std::chrono::steady_clock::time_point g_started = std::chrono::steady_clock::now();

void emit(json report, const std::string& out_path, bool stamp_elapsed = true) {
    if (stamp_elapsed)
        report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - g_started)
                                   .count();
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw MalformedInput("cannot write " + out_path);
        out << report.dump(2) << "\n";
    }
}

json residual_table(const Classification& c) {
    json rs = json::array();
    for (const auto& r : c.residuals) {
        json e{{"name", r.name},
               {"degree", r.degree},
               {"value", r.value},
               {"coef_scale", r.coef_scale}};
        if (!r.exact.empty()) e["exact"] = r.exact;
        rs.push_back(std::move(e));
    }
    return rs;
}

json certificates_json(const Classification& c) {
    json cs = json::array();
    for (const auto& cert : c.certificates)
        cs.push_back(json{{"name", cert.name}, {"passed", cert.passed}});
    return cs;
}

json classification_json(const Classification& c) {
    json out{{"verdict", to_string(c.verdict)},
             {"residuals", residual_table(c)},
             {"certificates", certificates_json(c)}};
    if (c.reason != IndetReason::None) out["reason"] = to_string(c.reason);
    if (!c.betas.empty()) out["betas"] = c.betas;
    if (c.pd) {
        out["params"] = json{{"alpha", c.pd->alpha},
                             {"gamma1", c.pd->gamma1},
                             {"gamma2", c.pd->gamma2},
                             {"beta3", c.pd->beta3}};
    }
    return out;
}

json matrix_json(const Mat<double>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json recovery_json(const RecoveryReport& rep) {
    json maps = json::array();
    for (const auto& m : rep.maps)
        maps.push_back(json{{"matrix", matrix_json(m.matrix())}, {"det_sign", m.det_sign()}});
    json reduced = json::array();
    for (const auto& t : rep.reduced_forms) reduced.push_back(tensor_json(t));
    return json{{"maps", std::move(maps)},
                {"reduced_forms", std::move(reduced)},
                {"reduced", tensor_json(rep.reduced)},
                {"residual", rep.residual},
                {"branch_count", rep.branch_count}};
}

int verdict_exit(const Classification& c, Verdict accepted) {
    if (c.verdict == accepted) return kExitAccepted;
    if (c.verdict == Verdict::Indeterminate) return kExitIndeterminate;
    return kExitRejected;
}

// ---------------------------------------------------------------------------

int run_invariants(const std::string& basis, const Input& in, const std::string& out,
                   json report) {
    json values;
    auto put = [&](const char* name, const Rat& r, double d) {
        if (in.doc.exact)
            values[name] = scalar_repr(r);
        else
            values[name] = scalar_repr(d);
    };
    if (basis == "so2" || basis == "o2") {
        InvariantSetN2<Rat> vr;
        InvariantSetN2<double> vd;
        if (in.doc.exact)
            vr = so2_basis(in.doc.rat);
        else
            vd = so2_basis(in.doc.dbl);
        if (basis == "so2") {
            put("j2", vr.j2, vd.j2);
            put("h2", vr.h2, vd.h2);
            put("l4", vr.l4, vd.l4);
            put("m4", vr.m4, vd.m4);
        } else {
            put("i1", vr.i1, vd.i1);
            put("i2", vr.i2, vd.i2);
            put("i3", vr.i3, vd.i3);
        }
    } else if (basis == "oa") {
        InvariantSetN3<Rat> br;
        InvariantSetN3<double> bd;
        if (in.doc.exact)
            br = oa_basis(in.doc.rat);
        else
            bd = oa_basis(in.doc.dbl);
        put("H2", br.H2, bd.H2);
        put("J2", br.J2, bd.J2);
        put("H4", br.H4, bd.H4);
        put("J4", br.J4, bd.J4);
        put("K4", br.K4, bd.K4);
        put("L4", br.L4, bd.L4);
        put("H6", br.H6, bd.H6);
        put("J6", br.J6, bd.J6);
        put("K6", br.K6, bd.K6);
        put("L6", br.L6, bd.L6);
        put("M6", br.M6, bd.M6);
        put("H8", br.H8, bd.H8);
        put("H10", br.H10, bd.H10);
    } else {
        throw CLI::ValidationError("--basis must be so2, o2 or oa");
    }
    report["values"] = std::move(values);
    emit(report, out);
    return kExitAccepted;
}

int run_classify(const std::string& mode, const Input& in, double tol, const std::string& out,
                 json report) {
    Classification c;
    Verdict accepted = Verdict::FullyDecoupleable;
    if (mode == "n2") {
        c = in.doc.exact ? classify_n2(in.doc.rat, tol) : classify_n2(in.doc.dbl, tol);
    } else if (mode == "fd3") {
        c = in.doc.exact ? classify_fd_n3(in.doc.rat, tol) : classify_fd_n3(in.doc.dbl, tol);
    } else if (mode == "pd3") {
        c = in.doc.exact ? classify_pd_not_fd_n3(in.doc.rat, tol)
                         : classify_pd_not_fd_n3(in.doc.dbl, tol);
        accepted = Verdict::PartiallyNotFully;
    } else if (mode == "generic") {
        GenericClassification gc = classify_fd_generic(in.doc.dbl, tol);
        c = gc.classification;
        json j = classification_json(c);
        if (gc.map)
            j["map"] = json{{"matrix", matrix_json(gc.map->matrix())},
                            {"det_sign", gc.map->det_sign()}};
        report.update(j);
        emit(report, out);
        return verdict_exit(c, accepted);
    } else {
        throw CLI::ValidationError("--mode must be n2, fd3, pd3 or generic");
    }
    report.update(classification_json(c));
    emit(report, out);
    return verdict_exit(c, accepted);
}

int run_recover(const std::string& mode, const Input& in, double tol, const std::string& out,
                json report) {
    if (mode == "n2") {
        Outcome<RecoveryReport> rep = recover_n2(in.doc.dbl, tol);
        if (!rep) {
            report["error"] = json{{"code", rep.failure().code}, {"message", rep.failure().message}};
            emit(report, out);
            return rep.failure().code == "NotDecoupleable" ? kExitRejected : kExitIndeterminate;
        }
        report.update(recovery_json(*rep));
        emit(report, out);
        return kExitAccepted;
    }
    if (mode == "generic") {
        GenericClassification gc = classify_fd_generic(in.doc.dbl, tol);
        report["verdict"] = to_string(gc.classification.verdict);
        if (gc.classification.verdict == Verdict::Indeterminate) {
            report["reason"] = to_string(gc.classification.reason);
            emit(report, out);
            return kExitIndeterminate;
        }
        if (gc.classification.verdict != Verdict::FullyDecoupleable) {
            emit(report, out);
            return kExitRejected;
        }
        RecoveryReport rep;
        rep.maps.push_back(*gc.map);
        rep.reduced = act(*gc.map, in.doc.dbl);
        rep.reduced_forms.push_back(rep.reduced);
        rep.branch_count = 1 << in.doc.dbl.dim();
        double off = 0;
        rep.reduced.for_each([&](int i, int j, int k, double v) {
            if (!(i == j && j == k)) off = std::max(off, std::abs(v));
        });
        rep.residual = off;
        report.update(recovery_json(rep));
        emit(report, out);
        return kExitAccepted;
    }
    if (mode == "pd3") {
        Classification c = in.doc.exact ? classify_pd_not_fd_n3(in.doc.rat, tol)
                                        : classify_pd_not_fd_n3(in.doc.dbl, tol);
        report["verdict"] = to_string(c.verdict);
        if (c.verdict == Verdict::Indeterminate) {
            report["reason"] = to_string(c.reason);
            emit(report, out);
            return kExitIndeterminate;
        }
        if (c.verdict != Verdict::PartiallyNotFully || !c.pd) {
            emit(report, out);
            return kExitRejected;
        }
        report["params"] = json{{"alpha", c.pd->alpha},
                                {"gamma1", c.pd->gamma1},
                                {"gamma2", c.pd->gamma2},
                                {"beta3", c.pd->beta3}};
        Outcome<RecoveryReport> rep = recover_pd_rotation(in.doc.dbl, *c.pd, tol);
        if (!rep) {
            report["error"] = json{{"code", rep.failure().code}, {"message", rep.failure().message}};
            emit(report, out);
            return rep.failure().code == "DegenerateEigenvalues" ? kExitIndeterminate
                                                                 : kExitRejected;
        }
        report.update(recovery_json(*rep));
        emit(report, out);
        return kExitAccepted;
    }
    throw CLI::ValidationError("--mode must be n2, generic or pd3");
}

int run_verify();

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tridec: orthogonal decoupleability of symmetric rank-3 tensors"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string in_path, out_path, mode, basis, group, kind, pattern;
    double tol = kDefaultTol;
    bool exact = false;
    int max_degree = 12, n = 3, budget = 32;
    long long seed = -1;

    auto add_io = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", in_path, "input tensor JSON")->required();
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--tol", tol, "float-mode relative tolerance")->check(CLI::PositiveNumber);
        cmd->add_flag("--exact", exact, "require exact rational evaluation");
    };

    CLI::App* c_inv = app.add_subcommand("invariants", "evaluate an integrity basis");
    c_inv->add_option("--basis", basis, "so2|o2|oa")
        ->required()
        ->check(CLI::IsMember({"so2", "o2", "oa"}));
    add_io(c_inv, true);

    CLI::App* c_cls = app.add_subcommand("classify", "membership verdict with residual table");
    c_cls->add_option("--mode", mode, "n2|fd3|pd3|generic")
        ->required()
        ->check(CLI::IsMember({"n2", "fd3", "pd3", "generic"}));
    add_io(c_cls, true);

    CLI::App* c_rec = app.add_subcommand("recover", "orthogonal maps to reduced form");
    c_rec->add_option("--mode", mode, "n2|generic|pd3")
        ->required()
        ->check(CLI::IsMember({"n2", "generic", "pd3"}));
    add_io(c_rec, true);

    CLI::App* c_mol = app.add_subcommand("molien", "Molien series coefficients");
    c_mol->add_option("--group", group, "so2|o2")
        ->required()
        ->check(CLI::IsMember({"so2", "o2"}));
    c_mol->add_option("--max-degree", max_degree, "series truncation degree (<= 40)");
    c_mol->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* c_smp = app.add_subcommand("sample", "seeded orbit sample tensor");
    c_smp->add_option("--kind", kind, "fd|pd|generic")
        ->required()
        ->check(CLI::IsMember({"fd", "pd", "generic"}));
    c_smp->add_option("--n", n, "dimension");
    c_smp->add_option("--seed", seed, "RNG seed (required)")->required();
    c_smp->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* c_orc = app.add_subcommand("oracle", "numerical orbit-search residual");
    c_orc->add_option("--pattern", pattern, "fd|pd")
        ->required()
        ->check(CLI::IsMember({"fd", "pd"}));
    c_orc->add_option("--budget", budget, "multi-start count (default 32)");
    add_io(c_orc, true);

    app.add_subcommand("verify", "run the seeded property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    g_started = std::chrono::steady_clock::now();

    try {
        if (c_inv->parsed() || c_cls->parsed() || c_rec->parsed() || c_orc->parsed()) {
            Input in = load_input(in_path, exact);
            json report = base_report(c_inv->parsed()   ? "invariants"
                                      : c_cls->parsed() ? "classify:" + mode
                                      : c_rec->parsed() ? "recover:" + mode
                                                        : "oracle:" + pattern,
                                      in);
            int rc = kExitAccepted;
            if (c_inv->parsed()) {
                report["basis"] = basis;
                rc = run_invariants(basis, in, out_path, report);
            } else if (c_cls->parsed()) {
                rc = run_classify(mode, in, tol, out_path, report);
            } else if (c_rec->parsed()) {
                rc = run_recover(mode, in, tol, out_path, report);
            } else {
                if (pattern != "fd" && pattern != "pd")
                    throw CLI::ValidationError("--pattern must be fd or pd");
                OracleBudget b;
                b.starts = budget;
                OracleResult r = orbit_search_oracle(
                    in.doc.dbl, pattern == "fd" ? Pattern::FD : Pattern::PD, b);
                report["min_residual"] = r.min_residual;
                report["angles"] = r.angles;
                report["reflected"] = r.reflected;
                report["budget"] = json{{"starts", b.starts}, {"iters", b.iters}};
                emit(report, out_path);
            }
            return rc;
        }
        if (c_mol->parsed()) {
            if (group != "so2" && group != "o2")
                throw CLI::ValidationError("--group must be so2 or o2");
            MolienSeries s = molien_series(group == "so2" ? Group2::SO2 : Group2::O2, max_degree);
            json report{{"tool", "tridec"},
                        {"version", kVersion},
                        {"mode", "molien:" + group},
                        {"max_degree", s.max_degree},
                        {"coefficients", s.coefficients},
                        {"raw", s.raw}};
            emit(report, out_path);
            return kExitAccepted;
        }
        if (c_smp->parsed()) {
            SampleKind k = kind == "fd"        ? SampleKind::FD
                           : kind == "pd"      ? SampleKind::PDnotFD
                           : kind == "generic" ? SampleKind::Generic
                                               : throw CLI::ValidationError("--kind must be fd, pd or generic");
            OrbitSample s = make_sample(k, n, uint64_t(seed));
            emit(tensor_json(s.point), out_path, /*stamp_elapsed=*/false);
            return kExitAccepted;
        }
        return run_verify();
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const DimensionMismatch& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

// --- verify: seeded property sweep -----------------------------------------

namespace {

struct VerifyRunner {
    int failures = 0;
    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    }
};

Rat vr_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

SymTensor3<Rat> vr_tensor(int n, std::mt19937_64& rng) {
    SymTensor3<Rat> t(n);
    t.for_each([&](int i, int j, int k, const Rat&) { t.at(i, j, k) = vr_rat(rng); });
    return t;
}

int run_verify() {
    VerifyRunner v;
    std::mt19937_64 rng(20240901);

    {
        bool ok = true;
        for (int rep = 0; rep < 100 && ok; ++rep) {
            int n = 2 + int(rng() % 2);
            SymTensor3<Rat> g = vr_tensor(n, rng);
            OrthogonalMap<Rat> s1 = rational_orthogonal(n, rng());
            OrthogonalMap<Rat> s2 = rational_orthogonal(n, rng());
            ok = act(s2, act(s1, g)) == act(s2 * s1, g);
        }
        v.check("group action composes exactly", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            SymTensor3<Rat> g = vr_tensor(3, rng);
            OrthogonalMap<Rat> s = rational_orthogonal(3, rng());
            Vec<Rat> x = {vr_rat(rng), vr_rat(rng), vr_rat(rng)};
            ok = act(s, g).eval_cubic(s.matrix() * x) == g.eval_cubic(x);
        }
        v.check("cubic form transforms contravariantly", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            SymTensor3<Rat> g = vr_tensor(3, rng);
            InvariantSetN3<Rat> a = oa_basis(g);
            InvariantSetN3<Rat> b = oa_basis(act(rational_orthogonal(3, rng()), g));
            ok = a.H2 == b.H2 && a.J2 == b.J2 && a.H4 == b.H4 && a.J4 == b.J4 && a.K4 == b.K4 &&
                 a.L4 == b.L4 && a.H6 == b.H6 && a.J6 == b.J6 && a.K6 == b.K6 && a.L6 == b.L6 &&
                 a.M6 == b.M6 && a.H8 == b.H8 && a.H10 == b.H10;
        }
        v.check("OA basis is O(3) invariant (exact rotations)", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 500 && ok; ++rep) {
            InvariantSetN2<Rat> s = so2_basis(vr_tensor(2, rng));
            ok = -s.h2 * s.j2 * s.j2 * s.j2 + Rat(4) * s.l4 * s.l4 + Rat(4) * s.m4 * s.m4 == 0 &&
                 Rat(16) * s.i2 == s.h2 + Rat(12) * s.j2 &&
                 Rat(1024) * s.i3 ==
                     s.h2 * s.h2 + Rat(8) * s.h2 * s.j2 + Rat(80) * s.j2 * s.j2 - Rat(128) * s.l4;
        }
        v.check("n=2 syzygy and cross-basis identities", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            std::vector<Rat> betas = {vr_rat(rng), vr_rat(rng) + Rat(3), vr_rat(rng) + Rat(12)};
            SymTensor3<Rat> g = act(rational_orthogonal(3, rng()), make_fd(betas));
            Classification c = classify_fd_n3(g);
            ok = c.verdict == Verdict::FullyDecoupleable && fd_necessary_quick(g);
        }
        v.check("FD round trip accepts with exact residuals", ok);
    }
    {
        bool ok = true;
        int done = 0;
        while (done < 50 && ok) {
            PdParams<Rat> p{Rat(2) + vr_rat(rng), vr_rat(rng), vr_rat(rng), vr_rat(rng) + Rat(11)};
            if (p.alpha * p.alpha == p.gamma1 * p.gamma1 + p.gamma2 * p.gamma2) continue;
            SymTensor3<Rat> g = act(rational_orthogonal(3, rng()),
                                    make_pd_canonical(p.alpha, p.gamma1, p.gamma2, p.beta3));
            ok = classify_pd_not_fd_n3(g).verdict == Verdict::PartiallyNotFully;
            ++done;
        }
        v.check("PD round trip accepts with exact residuals", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            OrbitSample s = make_sample(SampleKind::Generic, 3, rng());
            ok = classify_fd_n3(s.point).verdict == Verdict::NotDecoupleable &&
                 classify_pd_not_fd_n3(s.point).verdict == Verdict::NotDecoupleable;
        }
        v.check("generic tensors are rejected by both n=3 classifiers", ok);
    }
    {
        MolienSeries so2 = molien_series(Group2::SO2, 12);
        MolienSeries o2 = molien_series(Group2::O2, 12);
        v.check("Molien tables through degree 12",
                so2.coefficients ==
                        std::vector<long long>{1, 0, 2, 0, 5, 0, 8, 0, 13, 0, 18, 0, 25} &&
                    o2.coefficients ==
                        std::vector<long long>{1, 0, 2, 0, 4, 0, 6, 0, 9, 0, 12, 0, 16});
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 4 && ok; ++rep) {
            OrbitSample s = make_sample(SampleKind::FD, 3, rng());
            ok = orbit_search_oracle(s.point, Pattern::FD).min_residual <= 1e-9;
        }
        v.check("oracle reaches planted FD minima", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            OrbitSample s = make_sample(SampleKind::FD, 2, rng());
            Outcome<RecoveryReport> r = recover_n2(s.point);
            ok = r.ok() && r->branch_count == 8;
        }
        v.check("n=2 recovery returns eight verified branches", ok);
    }

    std::cout << (v.failures == 0 ? "verify: all checks passed\n"
                                  : "verify: FAILURES detected\n");
    return v.failures == 0 ? 0 : 1;
}

}  // namespace
