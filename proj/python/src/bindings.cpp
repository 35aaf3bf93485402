#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "tridiag_hira/bessel.hpp"
#include "tridiag_hira/errors.hpp"
#include "tridiag_hira/experiments.hpp"
#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/tridiag.hpp"

namespace py = pybind11;
using namespace tridiag_hira;

namespace {

// Coordinates as (mantissa, exponent) pairs survive where plain doubles underflow.
std::vector<std::pair<double, int>> scaled_pairs(const EigenvectorResult<double>& r) {
    std::vector<std::pair<double, int>> out;
    out.reserve(r.X.size());
    for (std::size_t j = 1; j <= r.X.size(); ++j) {
        int e = 0;
        const double m = std::frexp(r.scaled.mantissa(j), &e);
        out.emplace_back(m, e + r.scaled.exponent(j));
    }
    return out;
}

py::dict case_dict(const EigenCase& ec) {
    py::dict d;
    d["k"] = ec.k;
    d["lambda"] = ec.lambda;
    d["hira"] = ec.hira.X;
    d["simplified"] = ec.simplified.X;
    d["invpow"] = ec.invpow.Y;
    std::vector<double> ref;
    for (const auto& v : ec.reference()) ref.push_back(to_double(v));
    d["reference"] = ref;
    d["oracle_trusted"] = ec.oracle.trusted;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "High relative accuracy eigenvectors of unit off-diagonal tridiagonal matrices";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<TridiagMatrix>(m, "Matrix")
        .def_static("power_law", [](double a, double c, std::size_t n) { return TridiagMatrix(power_law_profile(a, c, n)); },
                    py::arg("a"), py::arg("c"), py::arg("n"))
        .def_static("bessel", [](double x, std::size_t N) { return TridiagMatrix(bessel_profile(x, N)); }, py::arg("x"),
                    py::arg("N"))
        .def_static("from_values",
                    [](std::vector<double> f) { return TridiagMatrix(DiagonalProfile::from_values(std::move(f))); },
                    py::arg("f"))
        .def("__len__", &TridiagMatrix::size)
        .def("diag", &TridiagMatrix::diag, py::arg("j"))
        .def_property_readonly("diagonal",
                               [](const TridiagMatrix& M) { return std::vector<double>(M.diagonal().begin(), M.diagonal().end()); })
        .def("apply", [](const TridiagMatrix& M, const std::vector<double>& v) { return tridiag_hira::apply(M, v); })
        .def("residual", [](const TridiagMatrix& M, double lam, const std::vector<double>& v) { return residual_inf(M, lam, v); });

    py::class_<RegionPartition>(m, "Partition")
        .def_readonly("n", &RegionPartition::n)
        .def_readonly("k", &RegionPartition::k)
        .def_readonly("l", &RegionPartition::l)
        .def_readonly("p", &RegionPartition::p)
        .def_readonly("m", &RegionPartition::m)
        .def_readonly("r", &RegionPartition::r)
        .def("general", &RegionPartition::general)
        .def("degeneracy", &RegionPartition::degeneracy)
        .def("tag", [](const RegionPartition& p, std::size_t j) { return std::string(tag_name(p.tag(j))); });

    py::class_<EigenvectorResult<double>>(m, "Eigenvector")
        .def_property_readonly("method", [](const EigenvectorResult<double>& r) { return std::string(method_name(r.method)); })
        .def_readonly("fallback", &EigenvectorResult<double>::fallback)
        .def_readonly("fallback_reason", &EigenvectorResult<double>::fallback_reason)
        .def_readonly("lambda_", &EigenvectorResult<double>::lambda)
        .def_readonly("partition", &EigenvectorResult<double>::partition)
        .def_readonly("X", &EigenvectorResult<double>::X)
        .def_property_readonly("scaled", &scaled_pairs);

    py::class_<BesselRun>(m, "BesselRun")
        .def_readonly("x", &BesselRun::x)
        .def_readonly("n", &BesselRun::n)
        .def_readonly("N", &BesselRun::N)
        .def_readonly("values", &BesselRun::values)
        .def_readonly("fallback", &BesselRun::fallback);

    m.def("sturm_bisect", [](const TridiagMatrix& M, std::size_t k, double tol) { return sturm_bisect(M, k, tol); }, py::arg("M"),
          py::arg("k"), py::arg("tol") = kDefaultBisectTol);
    m.def("classify_regions", [](const TridiagMatrix& M, double lam) { return classify_regions(M, lam); }, py::arg("M"),
          py::arg("lam"));
    m.def("hira_eigenvector", [](const TridiagMatrix& M, double lam) { return hira_eigenvector(M, lam); }, py::arg("M"),
          py::arg("lam"));
    m.def("simplified_eigenvector", [](const TridiagMatrix& M, double lam) { return simplified_eigenvector(M, lam); },
          py::arg("M"), py::arg("lam"));
    m.def(
        "inverse_power",
        [](const TridiagMatrix& M, double lam0, std::size_t iters, double stop_tol, std::uint64_t seed) {
            auto [lam, trace] = inverse_power(M, lam0, iters, stop_tol, seed);
            return py::make_tuple(lam, trace.Y, trace.eta);
        },
        py::arg("M"), py::arg("lam0"), py::arg("iters") = 30, py::arg("stop_tol") = 0.0,
        py::arg("seed") = kDefaultSeed);
    m.def("sign_agreements", [](const std::vector<double>& v) { return sign_agreements(v); });

    m.def("bessel_backward", &bessel_backward<double>, py::arg("x"), py::arg("n"), py::arg("N"));
    m.def("bessel_via_hira", &bessel_via_hira, py::arg("x"), py::arg("n"), py::arg("N"));
    m.def("choose_N", &choose_N, py::arg("x"), py::arg("n"));

    m.def(
        "experiment1", [](double c, std::uint64_t seed) {
            ExperimentOptions opts;
            opts.seed = seed;
            return case_dict(run_experiment1(c, opts).eigen);
        },
        py::arg("c"), py::arg("seed") = kDefaultSeed);
    m.def(
        "experiment2", [](std::size_t row) { return case_dict(experiment2_case(row)); }, py::arg("row"));
}
