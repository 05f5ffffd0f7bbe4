#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "ehrlatt/commands.hpp"
#include "ehrlatt/ehrhart.hpp"
#include "ehrlatt/enumeration.hpp"
#include "ehrlatt/error.hpp"
#include "ehrlatt/facet_oracle.hpp"
#include "ehrlatt/polytope.hpp"
#include "ehrlatt/reflexivity.hpp"
#include "ehrlatt/surface.hpp"

namespace py = pybind11;
using namespace ehrlatt;

namespace {

// Values cross the boundary as decimal strings so Python ints stay arbitrary precision.
py::int_ to_py(const Integer& z) {
    return py::int_(py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10)));
}

Integer from_py(const py::handle& h) {
    return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::object to_py(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

py::list to_py(const IntVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const std::vector<IntVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_py(v));
    return out;
}

py::list to_py(const RatVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

std::vector<LatticePoint> points_from_py(const py::iterable& pts) {
    std::vector<LatticePoint> out;
    for (const auto& row : pts) {
        LatticePoint p;
        for (const auto& x : py::reinterpret_borrow<py::iterable>(row)) p.push_back(from_py(x));
        out.push_back(std::move(p));
    }
    return out;
}

Polytope make_polytope(const py::iterable& pts, std::size_t d) {
    return build_polytope(points_from_py(pts), d);
}

py::dict counts_to_py(const CountTriple& c) {
    py::dict out;
    out["k"] = c.k;
    out["total"] = to_py(c.total);
    out["interior"] = to_py(c.interior);
    out["boundary"] = to_py(c.boundary);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact lattice point counts, Ehrhart polynomials and lattice surface area";

    static PyObject* error_type =
        PyErr_NewException("ehrlatt._core.EhrlattError", PyExc_ValueError, nullptr);
    m.attr("EhrlattError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
            PyErr_SetString(error_type, msg.c_str());
        }
    });

    py::class_<Polytope>(m, "Polytope")
        .def(py::init(&make_polytope), py::arg("points"), py::arg("dim"))
        .def_property_readonly("dim", &Polytope::dim)
        .def_property_readonly("vertices", [](const Polytope& p) { return to_py(p.vertices()); })
        .def_property_readonly("dropped_points",
                               [](const Polytope& p) { return to_py(p.dropped_points()); })
        .def_property_readonly("facets",
                               [](const Polytope& p) {
                                   py::list out;
                                   for (const auto& h : p.facets())
                                       out.append(py::make_tuple(to_py(h.normal), to_py(h.offset)));
                                   return out;
                               })
        .def("dilate", [](const Polytope& p, const py::int_& k) { return dilate(p, from_py(k)); })
        .def("contains",
             [](const Polytope& p, const py::iterable& x, bool strict) {
                 LatticePoint pt;
                 for (const auto& v : x) pt.push_back(from_py(v));
                 return contains(p, pt, strict);
             },
             py::arg("x"), py::arg("strict") = false)
        .def("to_vertex_file", &format_vertex_file)
        .def("__repr__", [](const Polytope& p) {
            return "Polytope(dim=" + std::to_string(p.dim()) +
                   ", vertices=" + std::to_string(p.vertices().size()) +
                   ", facets=" + std::to_string(p.facets().size()) + ")";
        });

    m.def("parse_vertex_file", [](const std::string& text) {
        std::istringstream in(text);
        const VertexFile vf = parse_vertex_file(in);
        return build_polytope(vf.points, vf.dim);
    }, py::arg("text"));
    m.def("read_vertex_file", [](const std::string& path) {
        const VertexFile vf = read_vertex_file(path);
        return build_polytope(vf.points, vf.dim);
    }, py::arg("path"));

    m.def("count_points",
          [](const Polytope& p, bool strict, unsigned threads) {
              return to_py(count_points(p, strict, CountOptions{threads}));
          },
          py::arg("polytope"), py::arg("strict") = false, py::arg("threads") = 0);
    m.def("count_triple",
          [](const Polytope& p, unsigned k, unsigned threads) {
              return counts_to_py(count_triple(p, k, CountOptions{threads}));
          },
          py::arg("polytope"), py::arg("k") = 1, py::arg("threads") = 0);

    m.def("ehrhart_polynomial",
          [](const Polytope& p, unsigned threads) {
              return to_py(interpolate(p, CountOptions{threads}).coeffs());
          },
          py::arg("polytope"), py::arg("threads") = 0,
          "Coefficients e_0..e_d of the Ehrhart polynomial, lowest degree first.");
    m.def("volume", [](const Polytope& p) { return to_py(volume_direct(p)); }, py::arg("polytope"));

    m.def("surface_from_determinants",
          [](const Polytope& p, unsigned threads) {
              return to_py(surface_from_determinants(p, CountOptions{threads}));
          },
          py::arg("polytope"), py::arg("threads") = 0);
    m.def("surface_from_ehrhart",
          [](const Polytope& p, unsigned threads) {
              return to_py(surface_from_ehrhart(interpolate(p, CountOptions{threads})));
          },
          py::arg("polytope"), py::arg("threads") = 0);
    m.def("surface_direct", [](const Polytope& p) { return to_py(surface_direct(p)); },
          py::arg("polytope"));
    m.def("surface_closed_form",
          [](const Polytope& p, unsigned threads) {
              return to_py(surface_closed_form(p, CountOptions{threads}));
          },
          py::arg("polytope"), py::arg("threads") = 0);
    m.def("pick_area", [](const Polytope& p) { return to_py(pick_area(p)); }, py::arg("polytope"));

    m.def("is_fano", &is_fano, py::arg("polytope"));
    m.def("is_reflexive", &is_reflexive, py::arg("polytope"));
    m.def("dual_vertices", [](const Polytope& p) {
        const DualDescription dual = dual_polytope(p);
        py::list out;
        for (const auto& v : dual.vertices) out.append(to_py(v));
        return out;
    }, py::arg("polytope"));
    m.def("corollary_volume", [](const Polytope& p) { return to_py(corollary_volume(p)); },
          py::arg("polytope"));

    m.def("run_command",
          [](const std::string& command, const std::string& contents, unsigned k,
             const std::string& method, bool structured) {
              cli::CommandOptions opts;
              opts.k = k;
              opts.method = method;
              const cli::CommandResult r = cli::run_command(command, contents, opts);
              const auto fmt = structured ? cli::OutputFormat::Structured : cli::OutputFormat::Text;
              return py::make_tuple(cli::render(r.report, fmt), static_cast<int>(r.exit_code));
          },
          py::arg("command"), py::arg("contents"), py::arg("k") = 1, py::arg("method") = "det",
          py::arg("structured") = false,
          "Run a CLI command on vertex-file contents; returns (rendered_report, exit_code).");
}
