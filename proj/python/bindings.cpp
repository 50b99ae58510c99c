// Python bindings for the dessinlab core: permutation triples, invariant
// reports, mutations and enumeration.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessinlab/algebra.hpp"
#include "dessinlab/dessin.hpp"
#include "dessinlab/errors.hpp"
#include "dessinlab/io.hpp"
#include "dessinlab/mutation.hpp"
#include "dessinlab/quiver.hpp"

namespace py = pybind11;
using namespace dessinlab;

namespace {

CleanDessin dessin_from_text(int n, const std::string& sigma,
                             const std::optional<std::string>& alpha) {
    DessinDocument doc;
    doc.n = n;
    doc.sigma_text = sigma;
    doc.alpha_text = alpha;
    return doc.to_dessin();
}

py::dict passport_dict(const Passport& p) {
    py::dict d;
    d["black_degrees"] = p.black_degrees;
    d["face_degrees"] = p.face_degrees;
    d["edge_count"] = p.edge_count;
    d["genus"] = p.genus;
    return d;
}

} // namespace

PYBIND11_MODULE(_dessinlab, m) {
    m.doc() = "clean dessins d'enfants, Brauer graph algebra invariants, and "
              "Kauer mutations";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<resource_limit_error>(m, "ResourceLimitError",
                                                 PyExc_RuntimeError);
    py::register_exception<formula_not_applicable>(m, "FormulaNotApplicable",
                                                   PyExc_ValueError);

    py::class_<CleanDessin>(m, "Dessin")
        .def(py::init(&dessin_from_text), py::arg("n"), py::arg("sigma"),
             py::arg("alpha") = std::nullopt,
             "Build a clean dessin from cycle notation; alpha defaults to "
             "(1 2)(3 4)...")
        .def_property_readonly("n", &CleanDessin::edge_count)
        .def_property_readonly("sigma",
                               [](const CleanDessin& d) {
                                   return format_permutation(d.sigma(), true);
                               })
        .def_property_readonly("alpha",
                               [](const CleanDessin& d) {
                                   return format_permutation(d.alpha(), true);
                               })
        .def_property_readonly("phi",
                               [](const CleanDessin& d) {
                                   return format_permutation(d.phi(), true);
                               })
        .def_property_readonly("genus", &CleanDessin::genus)
        .def_property_readonly(
            "passport", [](const CleanDessin& d) { return passport_dict(d.passport()); })
        .def("canonical_digest", &canonical_digest)
        .def("report",
             [](const CleanDessin& d, bool verify) {
                 return report_json(compute_report(d, verify), canonical_digest(d));
             },
             py::arg("verify") = false, "Invariant report as a JSON string")
        .def("document", [](const CleanDessin& d) { return format_document(d); })
        .def("dot", [](const CleanDessin& d) { return export_dot(d); })
        .def("quiver_dot",
             [](const CleanDessin& d) { return export_dot(Quiver::of(d)); })
        .def("classify_edge",
             [](const CleanDessin& d, int dart) {
                 const EdgeRef e = d.classify_edge(dart);
                 py::dict out;
                 out["darts"] = py::make_tuple(e.dart_low, e.dart_high);
                 out["leaf"] = e.leaf;
                 out["loop"] = e.loop;
                 out["trivial_loop"] = e.trivial_loop;
                 return out;
             })
        .def("mutate",
             [](const CleanDessin& d, int dart) {
                 MutationStep step = mutate(d, dart);
                 return py::make_tuple(std::move(step.result), to_string(step.kind));
             },
             py::arg("dart"), "Returns (mutated dessin, case tag)")
        .def("period_bound", &period_bound, py::arg("dart"))
        .def("exact_period", &exact_period, py::arg("dart"))
        .def("star_reduce",
             [](const CleanDessin& d) { return star_reduce(d); },
             "Darts to mutate, in order, to reach a generalized star")
        .def("is_generalized_star", &is_generalized_star)
        .def("triangulate", &triangulate)
        .def("tube_ranks", &tube_ranks)
        .def("dim_lambda", &dim_formula)
        .def("dim_center", &center_formula)
        .def("dim_hh1", &hh1_formula)
        .def("__eq__",
             [](const CleanDessin& a, const CleanDessin& b) { return a == b; })
        .def("__repr__", [](const CleanDessin& d) {
            return "Dessin(n=" + std::to_string(d.edge_count()) + ", sigma=\"" +
                   format_permutation(d.sigma()) + "\", alpha=\"" +
                   format_permutation(d.alpha()) + "\")";
        });

    m.def("is_isomorphic", &is_isomorphic);
    m.def("conjugator",
          [](const CleanDessin& a, const CleanDessin& b) -> std::optional<std::string> {
              const auto g = find_conjugator(a, b);
              if (!g) return std::nullopt;
              return format_permutation(*g, true);
          },
          "Cycle notation of a conjugator carrying the first dessin to the "
          "second, or None");
    m.def("derived_equivalent",
          [](const CleanDessin& a, const CleanDessin& b) {
              const EquivalenceResult res = derived_equivalent(a, b);
              return py::make_tuple(to_string(res.verdict), res.witness_path);
          },
          "Returns (verdict, witness darts or None)");
    m.def("mutation_class_size",
          [](const CleanDessin& d) { return mutation_class(d).members.size(); });
    m.def("enumerate_dessins",
          [](int edges, std::optional<int> genus, std::optional<int> vertices,
             std::optional<int> face_count, std::optional<std::vector<int>> faces,
             std::optional<std::vector<int>> black_degrees) {
              PassportFilter f;
              f.genus = genus;
              f.black_count = vertices;
              f.face_count = face_count;
              f.face_degrees = std::move(faces);
              f.black_degrees = std::move(black_degrees);
              return enumerate_dessins(edges, f);
          },
          py::arg("edges"), py::arg("genus") = std::nullopt,
          py::arg("vertices") = std::nullopt, py::arg("face_count") = std::nullopt,
          py::arg("faces") = std::nullopt, py::arg("black_degrees") = std::nullopt);
    m.def("clean_cover",
          [](int darts, const std::string& sigma, const std::string& alpha) {
              return clean_cover(parse_permutation(sigma, darts),
                                 parse_permutation(alpha, darts));
          },
          py::arg("darts"), py::arg("sigma"), py::arg("alpha"),
          "Clean double cover of an arbitrary transitive pair");
    m.def("random_dessin", &random_dessin, py::arg("edges"), py::arg("seed"));
}
