#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spckit/bits.hpp"
#include "spckit/boolmat.hpp"
#include "spckit/complex.hpp"
#include "spckit/errors.hpp"
#include "spckit/gain_graph.hpp"
#include "spckit/group.hpp"
#include "spckit/io.hpp"
#include "spckit/lattice.hpp"
#include "spckit/models.hpp"
#include "spckit/spc.hpp"
#include "spckit/verify.hpp"

namespace py = pybind11;
using namespace spckit;

namespace {

std::vector<int> mask_points(Mask m) {
    std::vector<int> out;
    for (int v = 1; m; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> masks_points(const std::vector<Mask>& ms) {
    std::vector<std::vector<int>> out;
    out.reserve(ms.size());
    for (Mask m : ms) out.push_back(mask_points(m));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dowling and Rhodes lattices over a finite group, the complexes they "
              "represent, and Boolean matrix representations";

    py::register_exception<Error>(m, "SpckitError");

    py::class_<FiniteGroup>(m, "Group")
        .def_static("from_spec", [](const std::string& s) { return FiniteGroup::from_spec(s); },
                    py::arg("spec"))
        .def_static("trivial", &FiniteGroup::trivial)
        .def_static("cyclic", &FiniteGroup::cyclic, py::arg("m"))
        .def_static("klein4", &FiniteGroup::klein4)
        .def_static("symmetric", &FiniteGroup::symmetric, py::arg("k"))
        .def_static("direct_product", &FiniteGroup::direct_product)
        .def_property_readonly("order", &FiniteGroup::order)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("labels", &FiniteGroup::labels)
        .def("__eq__", [](const FiniteGroup& a, const FiniteGroup& b) { return a == b; })
        .def("__repr__", [](const FiniteGroup& g) {
            return "<Group order=" + std::to_string(g.order()) + ">";
        });

    py::class_<FiniteLattice>(m, "Lattice")
        .def_property_readonly("size", &FiniteLattice::size)
        .def("leq", &FiniteLattice::leq)
        .def("meet", &FiniteLattice::meet)
        .def("join", &FiniteLattice::join)
        .def_property_readonly("bottom", &FiniteLattice::bottom)
        .def_property_readonly("top", &FiniteLattice::top)
        .def("label", &FiniteLattice::label)
        .def("labels", [](const FiniteLattice& l) {
            std::vector<std::string> out;
            for (int i = 0; i < l.size(); ++i) out.push_back(l.label(i));
            return out;
        })
        .def("atoms", &FiniteLattice::atoms)
        .def("covers", &FiniteLattice::covers)
        .def("join_irreducibles", &FiniteLattice::join_irreducibles)
        .def("meet_irreducibles", &FiniteLattice::meet_irreducibles)
        .def("is_geometric", &FiniteLattice::is_geometric)
        .def("to_json", [](const FiniteLattice& l) { return lattice_to_json(l); })
        .def("to_dot", [](const FiniteLattice& l) { return lattice_to_dot(l); })
        .def("__len__", &FiniteLattice::size)
        .def("__repr__", [](const FiniteLattice& l) {
            return "<Lattice size=" + std::to_string(l.size()) + ">";
        });

    py::class_<SimplicialComplex>(m, "Complex")
        .def_property_readonly("ground_size", &SimplicialComplex::ground_size)
        .def("labels", &SimplicialComplex::labels)
        .def("facets", [](const SimplicialComplex& h) { return masks_points(h.facets()); })
        .def("circuits", [](const SimplicialComplex& h) { return masks_points(h.circuits()); })
        .def("sets", [](const SimplicialComplex& h) { return masks_points(h.sets()); })
        .def("flats", [](const SimplicialComplex& h) { return masks_points(flats(h)); })
        .def_property_readonly("rank", &SimplicialComplex::rank)
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("is_matroid", [](const SimplicialComplex& h) { return is_matroid(h); })
        .def("is_boolean_representable",
             [](const SimplicialComplex& h) { return is_boolean_representable(h); })
        .def("to_json", [](const SimplicialComplex& h) { return complex_to_json(h); })
        .def("__eq__",
             [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& h) {
            return "<Complex ground=" + std::to_string(h.ground_size()) +
                   " rank=" + std::to_string(h.rank()) + ">";
        });

    py::class_<BooleanMatrix>(m, "BooleanMatrix")
        .def_static("from_text", &BooleanMatrix::from_text, py::arg("text"))
        .def_property_readonly("rows", &BooleanMatrix::rows)
        .def_property_readonly("cols", &BooleanMatrix::cols)
        .def("get", &BooleanMatrix::get, py::arg("row"), py::arg("col"))
        .def("to_text", &BooleanMatrix::to_text)
        .def("complex", [](const BooleanMatrix& mtx) { return complex_of_matrix(mtx, {}); })
        .def("__eq__", [](const BooleanMatrix& a, const BooleanMatrix& b) { return a == b; })
        .def("__repr__", [](const BooleanMatrix& mtx) {
            return "<BooleanMatrix " + std::to_string(mtx.rows()) + "x" +
                   std::to_string(mtx.cols()) + ">";
        });

    m.def("enumerate_spc",
          [](int n, const FiniteGroup& g, std::uint64_t bound) {
              std::vector<std::string> out;
              for (const auto& s : enumerate_spc(n, g, bound)) out.push_back(s.to_text());
              return out;
          },
          py::arg("n"), py::arg("group"), py::arg("bound") = 4096);

    m.def("dowling_lattice",
          [](int n, const FiniteGroup& g) { return build_dowling(n, g).lattice; },
          py::arg("n"), py::arg("group"));
    m.def("rhodes_hat_lattice",
          [](int n, const FiniteGroup& g) { return build_rhodes_hat(n, g).lattice; },
          py::arg("n"), py::arg("group"));
    m.def("rhodes_poset",
          [](int n, const FiniteGroup& g) {
              auto p = build_rhodes(n, g);
              py::dict d;
              d["count"] = p.elements.size();
              d["is_lattice"] = p.is_lattice;
              if (p.no_lub_pair)
                  d["no_lub_pair"] = py::make_tuple(p.elements[p.no_lub_pair->first].to_text(),
                                                    p.elements[p.no_lub_pair->second].to_text());
              return d;
          },
          py::arg("n"), py::arg("group"));
    m.def("ln_lattice", [](int n) { return build_Ln(n).lattice; }, py::arg("n"));
    m.def("powerset_lattice", &powerset_lattice, py::arg("n"));
    m.def("partition_lattice", &partition_lattice, py::arg("m"));
    m.def("lattice_isomorphic",
          [](const FiniteLattice& a, const FiniteLattice& b) {
              return lattice_isomorphic(a, b).has_value();
          });

    m.def("rhodes_complex", &rhodes_complex, py::arg("n"), py::arg("group"));
    m.def("rhodes_hat_complex", &rhodes_hat_complex, py::arg("n"), py::arg("group"));
    m.def("dowling_complex", &dowling_complex, py::arg("n"), py::arg("group"));
    m.def("uniform_matroid", &uniform_matroid, py::arg("k"), py::arg("m"));

    m.def("frame_matroid_of_delta",
          [](int n, const FiniteGroup& g) { return frame_matroid(delta(n, g)); },
          py::arg("n"), py::arg("group"));
    m.def("lift_matroid_of_delta",
          [](int n, const FiniteGroup& g) { return lift_matroid(delta(n, g)); },
          py::arg("n"), py::arg("group"));
    m.def("lift_facets_formula", &lift_facets_formula, py::arg("n"), py::arg("gorder"));
    m.def("lift_facets_formula_corrected", &lift_facets_formula_corrected, py::arg("n"),
          py::arg("gorder"));

    m.def("flats_matrix", [](const SimplicialComplex& h) { return mat_of_flats(h); });
    m.def("ln_matrix",
          [](int n, const FiniteGroup& g) {
              return matrix_from_lattice_rep(ln_representation(n, g));
          },
          py::arg("n"), py::arg("group"));
    m.def("powerset_matrix",
          [](int n) { return matrix_from_lattice_rep(powerset_representation(n)); },
          py::arg("n"));
    m.def("mindeg_lower_bound", &mindeg_lower_bound, py::arg("complex"));

    m.def("verify_suites", &suite_names);
    m.def("run_verify_suite",
          [](const std::string& name, std::uint32_t seed) {
              auto r = run_suite(name, seed);
              return py::make_tuple(r.passed, r.details);
          },
          py::arg("name"), py::arg("seed") = 12345u);
}
