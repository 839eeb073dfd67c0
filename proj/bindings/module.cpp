#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieforge/analysis.hpp"
#include "lieforge/emit.hpp"
#include "lieforge/linalg.hpp"

namespace py = pybind11;
using namespace lieforge;

namespace {

Rational rat_arg(const std::string& s) { return rational_from_string(s); }

std::vector<int> series_dims(const std::vector<Subspace>& chain) {
    std::vector<int> dims;
    dims.reserve(chain.size());
    for (const auto& s : chain) dims.push_back(s.dimension());
    return dims;
}

std::vector<std::string> check_to_list(const CheckReport& r) { return r.witnesses; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact structure-constant engine for Iu_n and gl_{n+}^eps";

    py::register_exception<Error>(m, "LieforgeError");

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_property_readonly("name", &LieAlgebra::name)
        .def_property_readonly("n", &LieAlgebra::n)
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def("basis",
             [](const LieAlgebra& L) {
                 std::vector<std::string> out;
                 for (const auto& l : L.basis()) out.push_back(l.str());
                 return out;
             })
        .def("bracket",
             [](const LieAlgebra& L, const std::string& u, const std::string& v) {
                 Element e = L.bracket(Element::unit(parse_sc_label(u)),
                                       Element::unit(parse_sc_label(v)));
                 return render_element(L, e);
             },
             py::arg("u"), py::arg("v"),
             "bracket of two basis generators, rendered canonically")
        .def("verify_jacobi", [](const LieAlgebra& L) { return L.verify_jacobi().ok(); })
        .def("jacobi_violations",
             [](const LieAlgebra& L) { return L.verify_jacobi().violations.size(); })
        .def("specialize",
             [](const LieAlgebra& L, const std::string& v) { return L.specialize(rat_arg(v)); },
             py::arg("eps"))
        .def("truncated", &LieAlgebra::truncated, py::arg("k"))
        .def("same_structure", &LieAlgebra::same_structure)
        .def("__repr__", [](const LieAlgebra& L) {
            return "<LieAlgebra " + L.name() + " dim=" + std::to_string(L.dim()) + ">";
        });

    m.def("build_un", &build_un, py::arg("n"));
    m.def("build_ln_eps", &build_ln_eps, py::arg("n"));
    m.def("build_gln", &build_gln, py::arg("n"));
    m.def("build_Iu", &build_Iu_direct, py::arg("n"));
    m.def("build_glpluseps", &build_glpluseps_direct, py::arg("n"));
    m.def("coadjoint_semidirect",
          [](const LieAlgebra& A, const std::string& diag_weight) {
              return coadjoint_semidirect(A, standard_duality(A.n(), rat_arg(diag_weight)));
          },
          py::arg("A"), py::arg("diag_weight") = "2");
    m.def("manin_double",
          [](const LieAlgebra& U, const LieAlgebra& L) {
              return manin_double(U, L, standard_pairing(U.n()));
          },
          py::arg("U"), py::arg("L"), "the double against the standard pairing");
    m.def("sl_restrict", [](const LieAlgebra& L) { return sl_restrict(L).algebra; });
    m.def("diamond", [] { return diamond().algebra; });

    m.def("derived_series_dims",
          [](const LieAlgebra& L) { return series_dims(derived_series(L)); });
    m.def("layer_series_dims", [](const LieAlgebra& L) { return series_dims(layer_series(L)); });
    m.def("center_dim", [](const LieAlgebra& L) { return center(L).dimension(); });
    m.def("is_solvable", &is_solvable);

    m.def("is_automorphism",
          [](const LieAlgebra& L, const Permutation& sigma, bool anti) {
              LinearMap mp = perm_map(sigma, anti ? Orientation::Anti : Orientation::Auto);
              return anti ? is_antiautomorphism(L, mp).ok() : is_automorphism(L, mp).ok();
          },
          py::arg("L"), py::arg("sigma"), py::arg("anti") = false,
          "does the index permutation induce an (anti)automorphism?");
    m.def("enumerate_symmetries",
          [](const LieAlgebra& L, int n, int guard) {
              SymmetrySearch s = enumerate_symmetries(L, n, guard);
              std::vector<std::string> autos, antis;
              for (const auto& p : s.autos) autos.push_back(perm_str(p));
              for (const auto& p : s.antis) antis.push_back(perm_str(p));
              return py::make_tuple(autos, antis, s.closed);
          },
          py::arg("L"), py::arg("n"), py::arg("guard") = 8);

    m.def("length_of", [](const std::string& l, int n) { return length_of(parse_sc_label(l), n); },
          py::arg("label"), py::arg("n"));
    m.def("layer_of", [](const std::string& l, int n) { return layer_of(parse_sc_label(l), n); },
          py::arg("label"), py::arg("n"));
    m.def("psi_preserves_length",
          [](int n) { return check_to_list(psi_preserves_length(n)).empty(); });
    m.def("verify_layer_table", [](int n) {
        LayerTableReport r = verify_layer_table(n);
        py::dict out;
        out["filtration"] = check_to_list(r.filtration);
        out["grading"] = check_to_list(r.grading);
        out["vanishing"] = check_to_list(r.vanishing);
        out["generation"] = check_to_list(r.generation);
        out["membership"] = check_to_list(r.membership);
        out["psi_shift"] = check_to_list(r.psi_shift);
        return out;
    });
    m.def("verify_metric_layers", [](int n) {
        MetricReport r = verify_metric_layers(n);
        py::dict out;
        out["layer_pairing"] = check_to_list(r.layer_pairing);
        out["invariance"] = check_to_list(r.invariance);
        return out;
    });

    m.def("emit_sc", &emit_sc, py::arg("L"), py::arg("name"));
    m.def("parse_sc", &parse_sc, py::arg("text"));
}
