#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isored/errors.hpp"
#include "isored/io.hpp"
#include "isored/massspring.hpp"
#include "isored/numerics.hpp"
#include "isored/reduction.hpp"
#include "isored/regions.hpp"

#include <sstream>

namespace py = pybind11;
using namespace isored;

namespace {

WMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in, "<python>");
}

WMatrix matrix_from_entries(const std::vector<std::vector<std::string>>& rows) {
    int n = static_cast<int>(rows.size());
    WMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw isored::domain_error("entry grid is not square");
        for (int j = 0; j < n; ++j)
            m.at(i, j) =
                parse_ratfunc(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

std::string matrix_text(const WMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

std::vector<std::pair<Complex, int>> roots_as_pairs(const RootMultiset& roots) {
    std::vector<std::pair<Complex, int>> out;
    for (const auto& e : roots.normalized().entries) out.emplace_back(e.root, e.multiplicity);
    return out;
}

GridSpec grid_from_args(double re_min, double re_max, double im_min, double im_max, int nx,
                        int ny) {
    GridSpec spec{re_min, re_max, im_min, im_max, nx, ny};
    spec.validate();
    return spec;
}

py::dict raster_to_dict(const RegionRaster& r) {
    py::dict out;
    out["kind"] = raster_kind_name(r.kind);
    out["nx"] = r.spec.nx;
    out["ny"] = r.spec.ny;
    out["window"] = py::make_tuple(r.spec.re_min, r.spec.re_max, r.spec.im_min, r.spec.im_max);
    out["values"] = r.values;
    out["flags"] = std::vector<int>(r.flags.begin(), r.flags.end());
    return out;
}

} // namespace

PYBIND11_MODULE(_isored, mod) {
    mod.doc() = "isospectral reduction of matrices over the rational function field";

    py::register_exception<isored::error>(mod, "IsoredError");

    py::class_<WMatrix>(mod, "Matrix")
        .def(py::init(&matrix_from_text), py::arg("text"))
        .def_static("from_entries", &matrix_from_entries, py::arg("rows"))
        .def_property_readonly("dim", &WMatrix::dim)
        .def("entry",
             [](const WMatrix& m, int i, int j) { return print_ratfunc(m.at(i, j)); })
        .def("all_w_pi", &WMatrix::all_w_pi)
        .def("__eq__", [](const WMatrix& a, const WMatrix& b) { return a == b; })
        .def("__str__", &matrix_text)
        .def("__repr__", [](const WMatrix& m) {
            return "Matrix(" + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + ")";
        });

    mod.def("parse_ratfunc", [](const std::string& t) { return print_ratfunc(parse_ratfunc(t)); },
            py::arg("text"), "parse and reprint a rational function in canonical form");

    mod.def(
        "reduce",
        [](const WMatrix& m, const std::vector<int>& keep) {
            return isospectral_reduce(m, IndexSet(keep));
        },
        py::arg("matrix"), py::arg("keep"));
    mod.def(
        "sequential_reduce",
        [](const WMatrix& m, const std::vector<std::vector<int>>& chain) {
            std::vector<IndexSet> sets;
            for (const auto& c : chain) sets.emplace_back(c);
            return sequential_reduce(m, sets);
        },
        py::arg("matrix"), py::arg("chain"));

    mod.def("spectrum", [](const WMatrix& m) { return roots_as_pairs(spectrum(m)); },
            py::arg("matrix"));
    mod.def("inverse_spectrum",
            [](const WMatrix& m) { return roots_as_pairs(inverse_spectrum(m)); },
            py::arg("matrix"));
    mod.def("spectral_inverse", [](const WMatrix& m) { return spectral_inverse(m); },
            py::arg("matrix"));
    mod.def("char_function", [](const WMatrix& m) { return print_ratfunc(char_ratfunc(m)); },
            py::arg("matrix"));

    mod.def(
        "resolvent_norm",
        [](const WMatrix& m, Complex z, double p) { return resolvent_norm(m, z, norm_from_value(p)); },
        py::arg("matrix"), py::arg("z"), py::arg("p") = 2.0);

    mod.def(
        "pseudospectrum",
        [](const WMatrix& m, double re_min, double re_max, double im_min, double im_max, int nx,
           int ny, double p) {
            return raster_to_dict(pseudospectrum_raster(
                m, grid_from_args(re_min, re_max, im_min, im_max, nx, ny), norm_from_value(p)));
        },
        py::arg("matrix"), py::arg("re_min"), py::arg("re_max"), py::arg("im_min"),
        py::arg("im_max"), py::arg("nx") = 200, py::arg("ny") = 200, py::arg("p") = 2.0);
    mod.def(
        "pseudoresonance",
        [](const WMatrix& m, double re_min, double re_max, double im_min, double im_max, int nx,
           int ny, double p) {
            return raster_to_dict(pseudoresonance_raster(
                m, grid_from_args(re_min, re_max, im_min, im_max, nx, ny), norm_from_value(p)));
        },
        py::arg("matrix"), py::arg("re_min"), py::arg("re_max"), py::arg("im_min"),
        py::arg("im_max"), py::arg("nx") = 200, py::arg("ny") = 200, py::arg("p") = 2.0);
    mod.def(
        "gershgorin",
        [](const WMatrix& m, double re_min, double re_max, double im_min, double im_max, int nx,
           int ny, bool use_spectral_inverse) {
            return raster_to_dict(gershgorin_raster(
                m, grid_from_args(re_min, re_max, im_min, im_max, nx, ny), use_spectral_inverse));
        },
        py::arg("matrix"), py::arg("re_min"), py::arg("re_max"), py::arg("im_min"),
        py::arg("im_max"), py::arg("nx") = 200, py::arg("ny") = 200,
        py::arg("use_spectral_inverse") = false);

    mod.def(
        "path_stiffness",
        [](int n) { return stiffness_matrix(SpringNetwork::path(n)); }, py::arg("n"),
        "stiffness matrix of the unit-spring path network on n nodes");
    mod.def(
        "frequency_response",
        [](int n, const std::vector<int>& boundary) {
            return frequency_response(SpringNetwork::path(n), IndexSet(boundary));
        },
        py::arg("n"), py::arg("boundary"));
    mod.def(
        "boundary_force",
        [](int n, const std::vector<int>& boundary, double omega, const ComplexVector& u) {
            return boundary_force(SpringNetwork::path(n), IndexSet(boundary), omega, u);
        },
        py::arg("n"), py::arg("boundary"), py::arg("omega"), py::arg("u"));
}
