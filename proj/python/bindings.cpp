#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyprime/census.hpp"
#include "polyprime/io.hpp"

namespace py = pybind11;
using namespace polyprime;

namespace {

// FieldPtr is shared_ptr<const Field>, which pybind11 will not accept as a
// class holder; expose fields through a small value wrapper instead.
struct PyField {
    FieldPtr ptr;
};

Mat make_mat(const FieldPtr& f, const std::vector<std::vector<uint32_t>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

PolyMat make_polymat(const FieldPtr& f,
                     const std::vector<std::vector<std::vector<uint32_t>>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    PolyMat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Poly(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

CensusParams make_params(const FieldPtr& f, int m, int n, int p, int N, int k, int s,
                         const std::vector<int>& deg) {
    CensusParams par;
    par.field = f;
    par.m = m;
    par.n = n;
    par.p = p;
    par.N = N;
    par.k = k;
    par.s = s;
    par.deg = deg;
    return par;
}

py::dict census_dict(const CensusResult& r) {
    py::dict d;
    d["total"] = r.total;
    d["hits"] = r.hits;
    d["numerator"] = r.probability.num;
    d["denominator"] = r.probability.den;
    d["probability"] = r.probability.to_double();
    return d;
}

py::dict mc_dict(const McEstimate& e) {
    py::dict d;
    d["trials"] = e.trials;
    d["hits"] = e.hits;
    d["seed"] = e.seed;
    d["probability"] = e.point;
    d["ci_low"] = e.ci_low;
    d["ci_high"] = e.ci_high;
    d["stderr"] = e.stderr_est;
    return d;
}

}  // namespace

PYBIND11_MODULE(_polyprime, mod) {
    mod.doc() = "exact algebra for polynomial matrices over finite fields";

    py::class_<PyField>(mod, "Field")
        .def_static("parse", [](const std::string& spec) { return PyField{Field::parse(spec)}; },
                    py::arg("spec"))
        .def_property_readonly("size", [](const PyField& f) { return f.ptr->size(); })
        .def("__repr__", [](const PyField& f) { return "GF(" + f.ptr->name() + ")"; });

    py::class_<Poly>(mod, "Poly")
        .def(py::init([](const PyField& f, const std::vector<uint32_t>& coeffs) {
                 return Poly(f.ptr, coeffs);
             }),
             py::arg("field"), py::arg("coeffs"))
        .def_property_readonly("degree", &Poly::degree)
        .def("is_monic", &Poly::is_monic)
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__repr__", &Poly::str);
    mod.def("poly_gcd", &poly_gcd, py::arg("a"), py::arg("b"));
    mod.def("is_irreducible", &is_irreducible, py::arg("p"));

    py::class_<Mat>(mod, "Mat")
        .def(py::init([](const PyField& f, const std::vector<std::vector<uint32_t>>& rows) {
                 return make_mat(f.ptr, rows);
             }),
             py::arg("field"), py::arg("rows"))
        .def_property_readonly("rows", &Mat::rows)
        .def_property_readonly("cols", &Mat::cols)
        .def("rank", &Mat::rank)
        .def("__eq__", [](const Mat& a, const Mat& b) { return a == b; })
        .def("__getitem__", [](const Mat& m, std::pair<int, int> ij) {
            if (ij.first < 0 || ij.first >= m.rows() || ij.second < 0 || ij.second >= m.cols())
                throw py::index_error();
            return m.at(ij.first, ij.second);
        });

    py::class_<PolyMat>(mod, "PolyMat")
        .def(py::init([](const PyField& f, const std::vector<std::vector<std::vector<uint32_t>>>& rows) {
                 return make_polymat(f.ptr, rows);
             }),
             py::arg("field"), py::arg("rows"))
        .def_property_readonly("rows", &PolyMat::rows)
        .def_property_readonly("cols", &PolyMat::cols)
        .def("det", &PolyMat::det)
        .def("is_unimodular", &PolyMat::is_unimodular)
        .def("__mul__", [](const PolyMat& a, const PolyMat& b) { return a * b; })
        .def("__eq__", [](const PolyMat& a, const PolyMat& b) { return a == b; })
        .def("__getitem__",
             [](const PolyMat& m, std::pair<int, int> ij) {
                 if (ij.first < 0 || ij.first >= m.rows() || ij.second < 0 ||
                     ij.second >= m.cols())
                     throw py::index_error();
                 return m.at(ij.first, ij.second);
             })
        .def("__repr__", &PolyMat::str);

    mod.def(
        "hermite_form", [](const PolyMat& m) { return hermite_form(m).first.matrix; },
        py::arg("matrix"), "canonical lower-triangular column-operation form");
    mod.def(
        "kronecker_hermite_form",
        [](const PolyMat& m) { return kronecker_hermite_form(m).first.matrix; }, py::arg("matrix"),
        "column-proper canonical form");
    mod.def("is_left_prime", &is_left_prime, py::arg("matrix"));
    mod.def("is_right_prime", &is_right_prime, py::arg("matrix"));
    mod.def("are_left_coprime", &are_left_coprime, py::arg("matrices"));
    mod.def("mutually_left_coprime", &mutually_left_coprime, py::arg("matrices"));
    mod.def(
        "gcrd",
        [](const PolyMat& a, const PolyMat& b) {
            GcrdResult g = gcrd(a, b);
            return py::make_tuple(g.r, g.la, g.lb);
        },
        py::arg("a"), py::arg("b"), "returns (R, La, Lb) with R = La*A + Lb*B");

    py::class_<StateSpace>(mod, "StateSpace")
        .def(py::init<Mat, Mat, Mat, Mat>(), py::arg("A"), py::arg("B"), py::arg("C"),
             py::arg("D"))
        .def_readonly("A", &StateSpace::a)
        .def_readonly("B", &StateSpace::b)
        .def_readonly("C", &StateSpace::c)
        .def_readonly("D", &StateSpace::d);
    mod.def("is_reachable", &is_reachable, py::arg("A"), py::arg("B"));
    mod.def("is_observable", &is_observable, py::arg("A"), py::arg("C"));
    mod.def("is_minimal", &is_minimal, py::arg("system"));
    mod.def(
        "right_coprime_factorization",
        [](const StateSpace& sys) {
            MatrixFraction fr = right_coprime_factorization(sys);
            return py::make_tuple(fr.p, fr.q.matrix);
        },
        py::arg("system"), "returns (P, Q) with T = P*Q^-1 right coprime, Q canonical");
    mod.def(
        "code_from_system", [](const StateSpace& sys) { return code_from_system(sys).generator; },
        py::arg("system"));
    mod.def("is_noncatastrophic", &is_noncatastrophic, py::arg("generator"));
    mod.def("code_order", &code_order, py::arg("generator"));
    mod.def("code_degree", &code_degree, py::arg("generator"));

    mod.def("property_names", &property_names);
    mod.def(
        "exact_probability",
        [](const std::string& prop, const PyField& f, int m, int n, int p, int N, int k, int s,
           const std::vector<int>& deg, uint64_t budget, int workers) {
            return census_dict(exact_probability(property_from_name(prop),
                                                 make_params(f.ptr, m, n, p, N, k, s, deg), budget,
                                                 workers));
        },
        py::arg("property"), py::arg("field"), py::arg("m") = 1, py::arg("n") = 1,
        py::arg("p") = 1, py::arg("N") = 2, py::arg("k") = 1, py::arg("s") = 2,
        py::arg("deg") = std::vector<int>{}, py::arg("budget") = kDefaultBudget,
        py::arg("workers") = 1);
    mod.def(
        "mc_estimate",
        [](const std::string& prop, const PyField& f, uint64_t trials, uint64_t seed, int m,
           int n, int p, int N, int k, int s, const std::vector<int>& deg, int workers) {
            return mc_dict(mc_estimate(property_from_name(prop),
                                       make_params(f.ptr, m, n, p, N, k, s, deg), trials, seed,
                                       workers));
        },
        py::arg("property"), py::arg("field"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("m") = 1, py::arg("n") = 1, py::arg("p") = 1, py::arg("N") = 2, py::arg("k") = 1,
        py::arg("s") = 2, py::arg("deg") = std::vector<int>{}, py::arg("workers") = 1);

    py::register_exception<BudgetExceeded>(mod, "BudgetExceeded");
}
