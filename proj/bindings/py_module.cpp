// Python bindings: float-mode tensors and the main operations, plus a
// string-based exact entry point for the integrity bases.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tridec/classify.hpp"
#include "tridec/molien.hpp"
#include "tridec/version.hpp"

namespace py = pybind11;
using namespace tridec;

namespace {

using DTensor = SymTensor3<double>;
using DMap = OrthogonalMap<double>;

DTensor tensor_from_entries(int n, const std::vector<std::tuple<int, int, int, double>>& entries) {
    DTensor t(n);
    for (const auto& [i, j, k, v] : entries) t.set(i - 1, j - 1, k - 1, v);
    return t;
}

std::vector<std::tuple<int, int, int, double>> tensor_entries(const DTensor& t) {
    std::vector<std::tuple<int, int, int, double>> out;
    t.for_each([&](int i, int j, int k, double v) {
        if (v != 0.0) out.emplace_back(i + 1, j + 1, k + 1, v);
    });
    return out;
}

std::vector<std::vector<double>> mat_rows(const Mat<double>& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

Mat<double> mat_from_rows(const std::vector<std::vector<double>>& rows) {
    int n = int(rows.size());
    Mat<double> m(n, rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != m.cols()) throw DimensionMismatch("ragged matrix");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

py::dict classification_dict(const Classification& c) {
    py::dict d;
    d["verdict"] = to_string(c.verdict);
    d["reason"] = to_string(c.reason);
    d["betas"] = c.betas;
    py::list rs;
    for (const auto& r : c.residuals) {
        py::dict e;
        e["name"] = r.name;
        e["degree"] = r.degree;
        e["value"] = r.value;
        if (!r.exact.empty()) e["exact"] = r.exact;
        rs.append(e);
    }
    d["residuals"] = rs;
    if (c.pd) {
        py::dict p;
        p["alpha"] = c.pd->alpha;
        p["gamma1"] = c.pd->gamma1;
        p["gamma2"] = c.pd->gamma2;
        p["beta3"] = c.pd->beta3;
        d["params"] = p;
    }
    return d;
}

py::dict recovery_dict(const RecoveryReport& r) {
    py::dict d;
    py::list maps, reduced;
    for (const auto& m : r.maps) maps.append(mat_rows(m.matrix()));
    for (const auto& t : r.reduced_forms) reduced.append(tensor_entries(t));
    d["maps"] = maps;
    d["reduced_forms"] = reduced;
    d["residual"] = r.residual;
    d["branch_count"] = r.branch_count;
    return d;
}

template <class T>
T unwrap(Outcome<T> o) {
    if (!o) throw std::runtime_error(o.failure().code + ": " + o.failure().message);
    return *o;
}

SymTensor3<Rat> exact_tensor(int n,
                             const std::vector<std::tuple<int, int, int, std::string>>& entries) {
    SymTensor3<Rat> t(n);
    for (const auto& [i, j, k, v] : entries) t.set(i - 1, j - 1, k - 1, rat_from_string(v));
    return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orthogonal decoupleability of symmetric rank-3 tensors";
    m.attr("__version__") = kVersion;

    py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<DomainExcluded>(m, "DomainExcluded", PyExc_ValueError);

    py::class_<DTensor>(m, "SymTensor3")
        .def(py::init(&tensor_from_entries), py::arg("n"), py::arg("entries"))
        .def_property_readonly("n", &DTensor::dim)
        .def("at", [](const DTensor& t, int i, int j, int k) { return t.at(i - 1, j - 1, k - 1); })
        .def("entries", &tensor_entries)
        .def("eval_cubic", [](const DTensor& t, const std::vector<double>& x) {
            return t.eval_cubic(x);
        })
        .def("frobenius", &DTensor::frobenius)
        .def("__repr__", [](const DTensor& t) {
            return "SymTensor3(n=" + std::to_string(t.dim()) + ")";
        });

    py::class_<DMap>(m, "OrthogonalMap")
        .def(py::init([](const std::vector<std::vector<double>>& rows) {
                 return DMap(mat_from_rows(rows));
             }),
             py::arg("rows"))
        .def_static("identity", &DMap::identity)
        .def_property_readonly("n", &DMap::dim)
        .def_property_readonly("det_sign", &DMap::det_sign)
        .def("matrix", [](const DMap& s) { return mat_rows(s.matrix()); });

    m.def("tensor_from_cubic",
          [](const std::map<std::vector<int>, double>& coeffs, int n) {
              CubicCoeffs<double> c(coeffs.begin(), coeffs.end());
              return tensor_from_cubic(c, n);
          },
          py::arg("coeffs"), py::arg("n"));
    m.def("act", [](const DMap& s, const DTensor& t) { return act(s, t); });

    m.def("covariants", [](const DTensor& g) {
        CovariantSuite<double> cs = covariants(g);
        py::dict d;
        d["u"] = cs.u;
        d["v"] = cs.v;
        d["w"] = cs.w;
        d["gamma_star2"] = mat_rows(cs.gamma_star2);
        d["d_star2"] = mat_rows(cs.d_star2);
        d["B"] = tensor_entries(cs.B);
        d["D"] = tensor_entries(cs.D);
        return d;
    });
    m.def("u_dot_gamma", [](const DTensor& g) { return mat_rows(u_dot_gamma(g)); });

    m.def("so2_basis", [](const DTensor& g) {
        InvariantSetN2<double> v = so2_basis(g);
        return py::dict(py::arg("j2") = v.j2, py::arg("h2") = v.h2, py::arg("l4") = v.l4,
                        py::arg("m4") = v.m4, py::arg("i1") = v.i1, py::arg("i2") = v.i2,
                        py::arg("i3") = v.i3);
    });
    m.def("oa_basis", [](const DTensor& g) {
        InvariantSetN3<double> b = oa_basis(g);
        py::dict d;
        d["H2"] = b.H2;
        d["J2"] = b.J2;
        d["H4"] = b.H4;
        d["J4"] = b.J4;
        d["K4"] = b.K4;
        d["L4"] = b.L4;
        d["H6"] = b.H6;
        d["J6"] = b.J6;
        d["K6"] = b.K6;
        d["L6"] = b.L6;
        d["M6"] = b.M6;
        d["H8"] = b.H8;
        d["H10"] = b.H10;
        return d;
    });
    m.def("oa_basis_exact",
          [](int n, const std::vector<std::tuple<int, int, int, std::string>>& entries) {
              InvariantSetN3<Rat> b = oa_basis(exact_tensor(n, entries));
              py::dict d;
              d["H2"] = scalar_repr(b.H2);
              d["J2"] = scalar_repr(b.J2);
              d["H4"] = scalar_repr(b.H4);
              d["J4"] = scalar_repr(b.J4);
              d["K4"] = scalar_repr(b.K4);
              d["L4"] = scalar_repr(b.L4);
              d["H6"] = scalar_repr(b.H6);
              d["J6"] = scalar_repr(b.J6);
              d["K6"] = scalar_repr(b.K6);
              d["L6"] = scalar_repr(b.L6);
              d["M6"] = scalar_repr(b.M6);
              d["H8"] = scalar_repr(b.H8);
              d["H10"] = scalar_repr(b.H10);
              return d;
          },
          py::arg("n"), py::arg("entries"));

    m.def("qtilde_full", [](const DTensor& g) {
        QTilde<double> q = qtilde_full(g);
        return std::vector<double>{q.q[0], q.q[1], q.q[2]};
    });
    m.def("qtilde_partial",
          [](const DTensor& g, double tol) {
              QTilde<double> q = qtilde_partial(g, tol);
              return std::vector<double>{q.q[0], q.q[1], q.q[2], q.q[3]};
          },
          py::arg("g"), py::arg("tol") = kDefaultTol);

    m.def("classify_n2",
          [](const DTensor& g, double tol) { return classification_dict(classify_n2(g, tol)); },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("classify_fd_n3",
          [](const DTensor& g, double tol) { return classification_dict(classify_fd_n3(g, tol)); },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("classify_pd_not_fd_n3",
          [](const DTensor& g, double tol) {
              return classification_dict(classify_pd_not_fd_n3(g, tol));
          },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("classify_fd_generic",
          [](const DTensor& g, double tol) {
              GenericClassification gc = classify_fd_generic(g, tol);
              py::object map = py::none();
              if (gc.map) map = py::cast(*gc.map);
              return py::make_tuple(classification_dict(gc.classification), map);
          },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("fd_necessary_quick",
          [](const DTensor& g, double tol) { return fd_necessary_quick(g, tol); }, py::arg("g"),
          py::arg("tol") = kDefaultTol);

    m.def("recover_n2",
          [](const DTensor& g, double tol) { return recovery_dict(unwrap(recover_n2(g, tol))); },
          py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("recover_rotation_via_covariant",
          [](const DTensor& g1, const DTensor& g2, const std::string& which, double tol) {
              CovariantMatrix sel = which == "d_star2" ? CovariantMatrix::DStar2
                                                       : CovariantMatrix::GammaStar2;
              return recovery_dict(unwrap(recover_rotation_via_covariant(g1, g2, sel, tol)));
          },
          py::arg("g1"), py::arg("g2"), py::arg("which") = "gamma_star2",
          py::arg("tol") = kDefaultTol);
    m.def("recover_pd_params",
          [](const std::vector<double>& q, double tol) {
              if (q.size() != 4) throw DimensionMismatch("need a quadruple");
              PdParams<double> p =
                  unwrap(recover_pd_params(QTilde<double>{{q[0], q[1], q[2], q[3]}, 4}, tol));
              return py::dict(py::arg("alpha") = p.alpha, py::arg("gamma1") = p.gamma1,
                              py::arg("gamma2") = p.gamma2, py::arg("beta3") = p.beta3);
          },
          py::arg("q"), py::arg("tol") = kDefaultTol);
    m.def("recover_pd_rotation",
          [](const DTensor& g, double alpha, double gamma1, double gamma2, double beta3,
             double tol) {
              PdParams<double> p{alpha, gamma1, gamma2, beta3};
              return recovery_dict(unwrap(recover_pd_rotation(g, p, tol)));
          },
          py::arg("g"), py::arg("alpha"), py::arg("gamma1"), py::arg("gamma2"), py::arg("beta3"),
          py::arg("tol") = kDefaultTol);

    m.def("molien_series",
          [](const std::string& group, int max_degree, int points) {
              MolienSeries s = molien_series(group == "so2" ? Group2::SO2 : Group2::O2, max_degree,
                                             points);
              return py::make_tuple(s.coefficients, s.raw);
          },
          py::arg("group"), py::arg("max_degree"), py::arg("points") = 0);
    m.def("rep_matrix", &rep_matrix, py::arg("theta"), py::arg("reflected") = false);

    m.def("make_fd", [](const std::vector<double>& betas) { return make_fd(betas); });
    m.def("make_pd_canonical", &make_pd_canonical<double>, py::arg("alpha"), py::arg("gamma1"),
          py::arg("gamma2"), py::arg("beta3"));
    m.def("haar_orthogonal", &haar_orthogonal, py::arg("n"), py::arg("seed"));
    m.def("orbit_search_oracle",
          [](const DTensor& g, const std::string& pattern, int starts, int iters) {
              OracleBudget b{starts, iters};
              OracleResult r =
                  orbit_search_oracle(g, pattern == "fd" ? Pattern::FD : Pattern::PD, b);
              return py::dict(py::arg("min_residual") = r.min_residual,
                              py::arg("angles") = r.angles, py::arg("reflected") = r.reflected);
          },
          py::arg("g"), py::arg("pattern"), py::arg("starts") = 32, py::arg("iters") = 200);
    m.def("pattern_residual",
          [](const DTensor& g, const std::string& pattern) {
              return pattern_residual(g, pattern == "fd" ? Pattern::FD : Pattern::PD);
          },
          py::arg("g"), py::arg("pattern"));
}
