#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polysum/io.hpp"
#include "polysum/minkowski_dual.hpp"
#include "polysum/minkowski_primal.hpp"
#include "polysum/oracle.hpp"
#include "polysum/shapes.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact scalars cross the boundary as fractions.Fraction (or int / "p/q"
// strings on the way in). Floats are rejected: no rounding ever occurs.
template <>
struct type_caster<polysum::Rational> {
public:
    PYBIND11_TYPE_CASTER(polysum::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;
        if (PyLong_Check(src.ptr())) {
            value = polysum::Rational(
                polysum::Integer(py::str(src).cast<std::string>(), 10));
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            auto q = polysum::tryParseRational(src.cast<std::string>());
            if (!q) return false;
            value = *q;
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            std::string n = py::str(src.attr("numerator")).cast<std::string>();
            std::string d = py::str(src.attr("denominator")).cast<std::string>();
            polysum::Integer den(d, 10);
            if (den == 0) return false;
            value = polysum::makeRational(polysum::Integer(n, 10), den);
            return true;
        }
        return false;
    }

    static handle cast(const polysum::Rational& q, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(polysum::str(q)).release();
    }
};

template <>
struct type_caster<polysum::Vector> {
public:
    PYBIND11_TYPE_CASTER(polysum::Vector, const_name("list[Fraction]"));

    bool load(handle src, bool convert) {
        if (py::isinstance<py::str>(src) || !py::isinstance<py::sequence>(src))
            return false;
        auto seq = py::reinterpret_borrow<py::sequence>(src);
        std::vector<polysum::Rational> xs;
        xs.reserve(py::len(seq));
        for (auto item : seq) {
            make_caster<polysum::Rational> c;
            if (!c.load(item, convert)) return false;
            xs.push_back(cast_op<polysum::Rational&&>(std::move(c)));
        }
        value = polysum::Vector(std::move(xs));
        return true;
    }

    static handle cast(const polysum::Vector& v, return_value_policy, handle) {
        py::tuple out(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i)
            out[i] = py::cast(v[i]);
        return out.release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace polysum;

Polytope makeFromHalfSpaces(std::size_t dim,
                            const std::vector<std::pair<Vector, Rational>>& hs) {
    std::vector<HalfSpace> list;
    list.reserve(hs.size());
    for (const auto& [n, b] : hs) list.emplace_back(n, b);
    return Polytope::fromHalfSpaces(dim, list);
}

MinkowskiDecomposition dispatchSum(const Polytope& A, const Polytope& B,
                                   const std::string& method, std::uint64_t seed) {
    if (method == "dual") return sumDualBrute(A, B);
    if (method == "dual-opt") return sumDualOptimized(A, B);
    if (method == "primal") return sumPrimal(A, B, seed);
    throw std::invalid_argument("method must be dual, dual-opt or primal");
}

}  // namespace

PYBIND11_MODULE(_polysum, m) {
    m.doc() = "exact Minkowski sums of convex polytopes";

    auto base = py::register_exception<Error>(m, "PolysumError", PyExc_RuntimeError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base);
    py::register_exception<Unbounded>(m, "Unbounded", base);
    py::register_exception<EmptyPolytope>(m, "EmptyPolytope", base);
    py::register_exception<NotFullDimensional>(m, "NotFullDimensional", base);
    py::register_exception<ApexMismatch>(m, "ApexMismatch", base);
    py::register_exception<NotMinkowskiVertex>(m, "NotMinkowskiVertex", base);
    py::register_exception<NoParallelEdge>(m, "NoParallelEdge", base);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base);
    py::register_exception<CapDisconnected>(m, "CapDisconnected", base);
    py::register_exception<TraversalIncomplete>(m, "TraversalIncomplete", base);
    py::register_exception<ParseError>(m, "FileParseError", base);

    py::class_<HalfSpace>(m, "HalfSpace")
        .def(py::init<Vector, Rational>(), py::arg("normal"), py::arg("offset"))
        .def_property_readonly("normal", &HalfSpace::normal)
        .def_property_readonly("offset", &HalfSpace::offset)
        .def("contains", &HalfSpace::contains)
        .def("is_tight_at", &HalfSpace::isTightAt)
        .def("__eq__", [](const HalfSpace& a, const HalfSpace& b) { return a == b; })
        .def("__repr__", [](const HalfSpace& h) { return str(h); });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("violations", &ValidationReport::violations)
        .def("ok", &ValidationReport::ok)
        .def("__bool__", &ValidationReport::ok);

    py::class_<Polytope>(m, "Polytope")
        .def_static("from_halfspaces", &makeFromHalfSpaces, py::arg("dim"),
                    py::arg("halfspaces"),
                    "halfspaces: list of (normal, offset) with <normal,x> <= offset")
        .def_static(
            "from_halfspace_objects",
            [](std::size_t dim, const std::vector<HalfSpace>& hs) {
                return Polytope::fromHalfSpaces(dim, hs);
            },
            py::arg("dim"), py::arg("halfspaces"))
        .def_static("from_vertices", &Polytope::fromVertices, py::arg("dim"),
                    py::arg("points"))
        .def_property_readonly("dim", &Polytope::dim)
        .def_property_readonly("vertices", &Polytope::vertices)
        .def_property_readonly(
            "facets",
            [](const Polytope& p) {
                std::vector<std::pair<Vector, Rational>> out;
                for (const auto& h : p.facets())
                    out.emplace_back(h.normal(), h.offset());
                return out;
            },
            "list of (normal, offset) pairs")
        .def_property_readonly("incidence", &Polytope::incidence)
        .def("neighbours", &Polytope::neighbours, py::arg("vertex"))
        .def("interior_point", &Polytope::interiorPoint)
        .def("contains", &Polytope::contains)
        .def("validate", &Polytope::validate)
        .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; })
        .def("__repr__", [](const Polytope& p) {
            return "<Polytope dim=" + std::to_string(p.dim()) + " vertices=" +
                   std::to_string(p.vertices().size()) + " facets=" +
                   std::to_string(p.facets().size()) + ">";
        });

    py::class_<Cone>(m, "Cone")
        .def_static("from_support_normals", &Cone::fromSupportNormals,
                    py::arg("dim"), py::arg("apex"), py::arg("normals"))
        .def_static("from_generators", &Cone::fromGenerators, py::arg("dim"),
                    py::arg("apex"), py::arg("rays"),
                    py::arg("lineality") = std::vector<Vector>{})
        .def_property_readonly("dim", &Cone::dim)
        .def_property_readonly("apex", &Cone::apex)
        .def_property_readonly("rays", &Cone::rays)
        .def_property_readonly(
            "supports",
            [](const Cone& c) {
                std::vector<std::pair<Vector, Rational>> out;
                for (const auto& h : c.supports())
                    out.emplace_back(h.normal(), h.offset());
                return out;
            })
        .def_property_readonly("lineality", &Cone::lineality)
        .def_property_readonly("cone_dim", &Cone::coneDim)
        .def_property_readonly("pointed", &Cone::pointed)
        .def_property_readonly("full_dimensional", &Cone::fullDimensional)
        .def("contains_direction", &Cone::containsDirection, py::arg("direction"),
             py::arg("strict") = false)
        .def("translated_to", &Cone::translatedTo)
        .def("__eq__", [](const Cone& a, const Cone& b) { return a == b; })
        .def("__repr__", [](const Cone& c) {
            return "<Cone dim=" + std::to_string(c.dim()) + " rays=" +
                   std::to_string(c.rays().size()) + " cone_dim=" +
                   std::to_string(c.coneDim()) + ">";
        });

    py::class_<MinkowskiDecomposition>(m, "MinkowskiDecomposition")
        .def_readonly("sum", &MinkowskiDecomposition::sum)
        .def_readonly("witnesses", &MinkowskiDecomposition::witnesses)
        .def_readonly("method", &MinkowskiDecomposition::method)
        .def_readonly("cone_intersections",
                      &MinkowskiDecomposition::coneIntersections);

    py::class_<PolyhedralCap>(m, "PolyhedralCap")
        .def_readonly("anchor", &PolyhedralCap::anchor)
        .def_readonly("members", &PolyhedralCap::members);

    m.def("cube", &shapes::cube, py::arg("n"), py::arg("lo") = Rational(0),
          py::arg("hi") = Rational(1));
    m.def("simplex", &shapes::simplex, py::arg("n"));
    m.def("cross_polytope", &shapes::crossPolytope, py::arg("n"));

    m.def("primal_cone", &primalCone, py::arg("polytope"), py::arg("vertex"));
    m.def("dual_cone", &dualCone, py::arg("polytope"), py::arg("vertex"));
    m.def(
        "normal_fan",
        [](const Polytope& p) { return normalFan(p).cones; },
        "one dual cone per vertex, same indexing");
    m.def("intersect_cones", &intersectCones);
    m.def("convex_hull_of_cones", &convexHullOfCones);
    m.def("polar_dual", &polarDual);

    m.def("is_minkowski_vertex_pair", &isMinkowskiVertexPair, py::arg("A"),
          py::arg("B"), py::arg("a"), py::arg("b"));
    m.def("facets_from_refined_cone",
          [](const Cone& refined, const Vector& sumPoint) {
              std::vector<std::pair<Vector, Rational>> out;
              for (const auto& h : facetsFromRefinedCone(refined, sumPoint))
                  out.emplace_back(h.normal(), h.offset());
              return out;
          });
    m.def("sum_dual_brute", &sumDualBrute);
    m.def("sum_dual_optimized", &sumDualOptimized, py::arg("A"), py::arg("B"),
          py::arg("verify_caps") = false);
    m.def("sum_primal", &sumPrimal, py::arg("A"), py::arg("B"),
          py::arg("seed") = kDefaultSeed);
    m.def("minkowski_sum", &dispatchSum, py::arg("A"), py::arg("B"),
          py::arg("method") = "dual-opt", py::arg("seed") = kDefaultSeed);

    m.def("polyhedral_cap",
          [](const Polytope& A, const Polytope& B, std::size_t anchor) {
              return polyhedralCap(A, B, anchor);
          });
    m.def("connected_in_graph", &connectedInGraph);

    m.def("seed_minkowski_vertex", &seedMinkowskiVertex, py::arg("A"), py::arg("B"),
          py::arg("seed") = kDefaultSeed);
    m.def("unique_argmax",
          [](const Polytope& p, const Vector& u) -> py::object {
              auto r = uniqueArgmax(p, u);
              return r ? py::cast(*r) : py::none();
          });
    m.def("minkowski_vertex_cone", &minkowskiVertexCone);
    m.def("neighbour_candidates", &neighbourCandidates);

    m.def("oracle_sum",
          py::overload_cast<const Polytope&, const Polytope&>(&oracleSum));
    m.def("oracle_sum_points",
          py::overload_cast<std::size_t, const std::vector<Vector>&,
                            const std::vector<Vector>&>(&oracleSum),
          py::arg("dim"), py::arg("points_a"), py::arg("points_b"));
    m.def("oracle_membership",
          py::overload_cast<const Polytope&, const Polytope&, const Vector&>(
              &oracleMembership));

    m.def("parse_polytope",
          [](const std::string& text) { return polytopeFromFile(parsePolyhedronFile(text)); });
    m.def("write_polytope",
          [](const Polytope& p, const std::string& rep) {
              if (rep != "H" && rep != "V")
                  throw std::invalid_argument("rep must be 'H' or 'V'");
              return writePolyhedronFile(
                  p, rep == "H" ? Representation::H : Representation::V);
          },
          py::arg("polytope"), py::arg("rep") = "H");
}
