// Python bindings for the Cayley-Bacharach property checker.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbcheck/cbp.hpp"
#include "cbcheck/problem.hpp"
#include "cbcheck/separator.hpp"

namespace py = pybind11;
using namespace cbcheck;

namespace {

CheckOptions make_options(const std::string& det_mode, std::uint64_t seed,
                          unsigned max_extension) {
    CheckOptions o;
    if (det_mode == "symbolic") o.mode = DetMode::Symbolic;
    else if (det_mode == "evaluated") o.mode = DetMode::Evaluated;
    else if (!det_mode.empty())
        throw py::value_error("det_mode must be '', 'symbolic', or 'evaluated'");
    o.seed = seed;
    o.max_extension = max_extension;
    return o;
}

py::list elems_to_list(const std::vector<FieldElement>& v) {
    py::list out;
    for (const auto& e : v) out.append(e.to_string());
    return out;
}

py::dict report_to_dict(const PropertyReport& rep) {
    py::dict d;
    d["dim"] = rep.dim;
    d["hf"] = rep.hf;
    d["ri"] = rep.ri;
    d["delta"] = rep.delta;
    d["cbp"] = rep.cbp;
    d["locally_gorenstein"] = rep.locally_gorenstein;
    d["gor_and_cbp"] = rep.gor_and_cbp;
    d["strict_cbp"] = rep.strict_cbp;
    d["strict_gorenstein"] = rep.strict_gorenstein;
    d["symmetric_hf"] = rep.symmetric_hf;
    if (rep.cbp_failure_witness) d["cbp_failure_witness"] = elems_to_list(*rep.cbp_failure_witness);
    if (rep.gorenstein_generator)
        d["gorenstein_generator"] = elems_to_list(rep.gorenstein_generator->coeffs);
    if (rep.det_witness_point) d["det_witness_point"] = elems_to_list(*rep.det_witness_point);
    if (rep.field_used) d["field_used"] = rep.field_used->to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(pycbcheck, m) {
    m.doc() = "Cayley-Bacharach and Gorenstein property checks for "
              "zero-dimensional affine algebras";

    py::register_exception<InconsistencyError>(m, "InconsistencyError");

    py::class_<Problem>(m, "Problem")
        .def_property_readonly("field",
                               [](const Problem& p) { return p.field->to_string(); })
        .def_property_readonly("vars",
                               [](const Problem& p) { return p.ring->vars(); })
        .def_property_readonly("generators", [](const Problem& p) {
            std::vector<std::string> out;
            for (const auto& g : p.ideal->gens()) out.push_back(g.to_string());
            return out;
        })
        .def_property_readonly("n_components",
                               [](const Problem& p) { return p.components.size(); });

    m.def("parse_problem_text", &parse_problem_text, py::arg("text"));
    m.def("parse_problem_file", &parse_problem_file, py::arg("path"));

    m.def("groebner_basis", [](const Problem& p) {
        std::vector<std::string> out;
        for (const auto& g : p.ideal->groebner_basis(TermOrdering::degrevlex()).gens())
            out.push_back(g.to_string());
        return out;
    });

    m.def("hilbert", [](const Problem& p) {
        QuotientAlgebra A = QuotientAlgebra::build(*p.ideal);
        py::dict d;
        d["dim"] = A.dim();
        d["hf"] = A.hilbert();
        d["ri"] = A.regularity_index();
        d["delta"] = A.last_difference();
        d["orders"] = A.orders();
        std::vector<std::string> basis;
        for (size_t i = 0; i < A.dim(); ++i) basis.push_back(A.basis_poly(i).to_string());
        d["basis"] = basis;
        return d;
    });

    m.def("check_cbp", [](const Problem& p) {
        QuotientAlgebra A = QuotientAlgebra::build(*p.ideal);
        return check_cbp(A).value;
    });

    m.def("check_strict_cbp",
          [](const Problem& p) { return check_strict_cbp(*p.ideal).value; });

    m.def("check_strict_gorenstein",
          [](const Problem& p) { return check_strict_gorenstein(*p.ideal); });

    m.def(
        "check_locally_gorenstein",
        [](const Problem& p, const std::string& det_mode, std::uint64_t seed,
           unsigned max_extension) {
            QuotientAlgebra A = QuotientAlgebra::build(*p.ideal);
            return check_locally_gorenstein(A, make_options(det_mode, seed, max_extension))
                .value;
        },
        py::arg("problem"), py::arg("det_mode") = "", py::arg("seed") = 1,
        py::arg("max_extension") = 16);

    m.def(
        "analyze",
        [](const Problem& p, const std::string& det_mode, std::uint64_t seed,
           unsigned max_extension) {
            return report_to_dict(analyze(*p.ideal, make_options(det_mode, seed, max_extension)));
        },
        py::arg("problem"), py::arg("det_mode") = "", py::arg("seed") = 1,
        py::arg("max_extension") = 16);

    m.def("sepdeg", [](const Problem& p) {
        if (p.components.empty())
            throw py::value_error("the problem has no component blocks");
        QuotientAlgebra A = QuotientAlgebra::build(*p.ideal);
        DecompositionInput D = DecompositionInput::validate(*p.ideal, p.components);
        py::list comps;
        bool all = true;
        for (size_t i = 0; i < D.size(); ++i) {
            SocleSpace S = socle_space(*p.ideal, D, i, A);
            bool maxd = check_max_sepdeg(*p.ideal, D, i, A);
            all = all && maxd;
            py::dict c;
            c["ell"] = D.residue_degree(i);
            c["socle_dim"] = S.m;
            c["k"] = S.k;
            c["max_sepdeg"] = maxd;
            if (S.k == 1) c["sepdeg"] = sepdeg_gorenstein_case(*p.ideal, D, i, A);
            comps.append(std::move(c));
        }
        py::dict d;
        d["components"] = comps;
        d["cbp_via_separators"] = all;
        return d;
    });
}
