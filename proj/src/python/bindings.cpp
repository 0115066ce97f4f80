#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "tsikit/barcode.hpp"
#include "tsikit/entropy.hpp"
#include "tsikit/harness.hpp"
#include "tsikit/incremental.hpp"
#include "tsikit/metrics.hpp"
#include "tsikit/rips.hpp"
#include "tsikit/rng.hpp"
#include "tsikit/summaries.hpp"
#include "tsikit/summary_report.hpp"
#include "tsikit/synth.hpp"

namespace py = pybind11;
using namespace tsikit;

namespace {

py::object opt_obj(const std::optional<double>& v) {
    if (v) return py::float_(*v);
    return py::none();
}

py::dict report_dict(const SummaryReport& r) {
    py::dict d;
    d["degree"] = r.degree;
    d["n"] = r.n;
    d["total_persistence"] = r.total_persistence;
    d["mean"] = opt_obj(r.mean);
    d["tsi"] = r.tsi;
    d["tsigi"] = opt_obj(r.tsigi);
    py::list ms;
    for (const auto& m : r.moments) ms.append(opt_obj(m));
    d["moments"] = ms;
    d["entropy"] = opt_obj(r.entropy);
    d["renyi2"] = opt_obj(r.renyi2);
    d["cvtsi"] = opt_obj(r.cvtsi);
    d["cvtsi_over_n"] = opt_obj(r.cvtsi_over_n);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Summary statistics for persistence barcodes";

    py::class_<PointCloud>(m, "PointCloud")
        .def(py::init(&PointCloud::from_rows), py::arg("rows"))
        .def("__len__", &PointCloud::size)
        .def_property_readonly("dim", &PointCloud::dim)
        .def("rows", &PointCloud::rows);

    py::class_<Barcode>(m, "Barcode")
        .def(py::init([](const std::vector<double>& lifetimes, int degree) {
                 return Barcode::from_lifetimes(lifetimes, degree);
             }),
             py::arg("lifetimes"), py::arg("degree") = 1)
        .def_static("from_bars",
                    [](const std::vector<std::tuple<int, double, double>>& rows) {
                        std::vector<Bar> bars;
                        bars.reserve(rows.size());
                        for (const auto& [d, b, x] : rows) bars.push_back({d, b, x});
                        return Barcode(std::move(bars));
                    },
                    py::arg("bars"))
        .def("__len__", &Barcode::n)
        .def_property_readonly("lifetimes",
                               [](const Barcode& b) { return b.lifetimes(); })
        .def_property_readonly("total_persistence", &Barcode::total_persistence)
        .def_property_readonly("bars", [](const Barcode& b) {
            std::vector<std::tuple<int, double, double>> out;
            out.reserve(b.bars().size());
            for (const Bar& bar : b.bars())
                out.emplace_back(bar.degree, bar.birth, bar.death);
            return out;
        });

    m.def("tsi", &tsi, py::arg("barcode"));
    m.def("tsi_bounds", &tsi_bounds, py::arg("n"), py::arg("total"));
    m.def("scale", &scale, py::arg("barcode"), py::arg("c"));
    m.def("shift_deaths", &shift_deaths, py::arg("barcode"), py::arg("c"));
    m.def("tsigi", &tsigi, py::arg("barcode"));
    m.def("moment", &moment, py::arg("barcode"), py::arg("k"));
    m.def("persistent_entropy", &persistent_entropy, py::arg("barcode"));
    m.def("renyi_entropy", &renyi_entropy, py::arg("barcode"), py::arg("alpha"));
    m.def("cvtsi", &cvtsi, py::arg("barcode"));
    m.def("collision_probability", &collision_probability, py::arg("barcode"));
    m.def("cvtsi_from_renyi2", &cvtsi_from_renyi2, py::arg("n"), py::arg("h2"));

    py::class_<RunningStats>(m, "RunningStats")
        .def(py::init([](const std::vector<double>& lifetimes) {
                 return RunningStats::from_lifetimes(lifetimes);
             }),
             py::arg("lifetimes") = std::vector<double>{})
        .def("insert", &RunningStats::insert, py::arg("ell"))
        .def("erase", &RunningStats::erase, py::arg("ell"))
        .def_property_readonly("n", &RunningStats::n)
        .def("mean", &RunningStats::mean)
        .def("tsi", &RunningStats::tsi)
        .def("cvtsi", &RunningStats::cvtsi)
        .def_property_readonly("values", &RunningStats::values);

    m.def("tsi_after_insert", &tsi_after_insert, py::arg("stats"), py::arg("ell"));
    m.def("tsi_after_delete", &tsi_after_delete, py::arg("stats"), py::arg("ell"));
    m.def("increases_tsi", &increases_tsi, py::arg("stats"), py::arg("ell"));
    m.def("cvtsi_after_insert", &cvtsi_after_insert, py::arg("stats"), py::arg("ell"));

    m.def("wasserstein_to_empty", &wasserstein_to_empty, py::arg("barcode"), py::arg("p"));
    m.def("bottleneck", &bottleneck, py::arg("barcode1"), py::arg("barcode2"));

    m.def(
        "rips_persistence",
        [](const std::vector<std::vector<double>>& rows, int max_dim,
           std::optional<double> max_radius) {
            return rips_persistence(PointCloud::from_rows(rows), max_dim, max_radius);
        },
        py::arg("points"), py::arg("max_dim") = 1, py::arg("max_radius") = std::nullopt);

    m.def(
        "summarize",
        [](const Barcode& b, int degree, int k_moments) {
            return report_dict(summarize(b, degree, k_moments));
        },
        py::arg("barcode"), py::arg("degree") = 1, py::arg("k_moments") = 3);

    m.def(
        "circle_equidistant",
        [](double r, std::size_t n, std::array<double, 2> center) {
            return circle_equidistant(r, n, center);
        },
        py::arg("r"), py::arg("n"), py::arg("center") = std::array<double, 2>{0.0, 0.0});
    m.def(
        "circle_uniform",
        [](double r, std::size_t n, std::array<double, 2> center, std::uint64_t seed) {
            return circle_uniform(r, n, center, RngSeed{seed});
        },
        py::arg("r"), py::arg("n"), py::arg("center") = std::array<double, 2>{0.0, 0.0},
        py::arg("seed") = 0);
    m.def(
        "add_gaussian_noise",
        [](const PointCloud& pc, double sigma, std::uint64_t seed) {
            return add_gaussian_noise(pc, sigma, RngSeed{seed});
        },
        py::arg("cloud"), py::arg("sigma"), py::arg("seed") = 0);
    m.def(
        "add_uniform_outliers",
        [](const PointCloud& pc, double r, std::size_t base_n, std::uint64_t seed) {
            return add_uniform_outliers(pc, r, base_n, RngSeed{seed});
        },
        py::arg("cloud"), py::arg("r"), py::arg("base_n") = 100, py::arg("seed") = 0);
    m.def(
        "gbm_path",
        [](double mu, double sigma, double s0, double dt, std::size_t steps,
           std::uint64_t seed) {
            return gbm_path({mu, sigma, s0, dt, steps}, RngSeed{seed});
        },
        py::arg("mu") = 0.0, py::arg("sigma") = 0.1, py::arg("s0") = 1.0,
        py::arg("dt") = 1.0 / 2500.0, py::arg("steps") = 250, py::arg("seed") = 0);
    m.def("takens_embed", &takens_embed, py::arg("series"), py::arg("dim") = 3,
          py::arg("tau") = 3);
    m.def("disjoint_circles_equidistant", &disjoint_circles_equidistant, py::arg("n_large"));
    m.def("intertwined_circles_equidistant", &intertwined_circles_equidistant,
          py::arg("per_circle"));

    m.def(
        "run_experiment_csv",
        [](const std::string& config_json) {
            const ExperimentConfig cfg = ExperimentConfig::from_json(config_json);
            const auto points = run_experiment(cfg);
            return curve_csv(cfg.kind, points);
        },
        py::arg("config_json"));
}
