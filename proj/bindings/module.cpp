#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "levysb/identities.hpp"
#include "levysb/mc_stats.hpp"
#include "levysb/models.hpp"
#include "levysb/pwl.hpp"
#include "levysb/rw3214.hpp"
#include "levysb/sb_engine.hpp"
#include "levysb/stick_breaking.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace levysb;

namespace {

LevyModel model_from_json(const std::string& text) {
    return LevyModel::from_json(text);
}

py::dict triplet_batch(const LevyModel& model, double horizon,
                       std::size_t n_sticks, std::uint64_t n,
                       std::uint64_t seed) {
    std::vector<double> final_v(n), sup_v(n), argmax_v(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        const Triplet t = sample_extremal_triplet(model, horizon, n_sticks, rng);
        final_v[i] = t.final;
        sup_v[i] = t.supremum;
        argmax_v[i] = t.argmax_time;
    }
    py::dict out;
    out["final"] = final_v;
    out["sup"] = sup_v;
    out["argmax"] = argmax_v;
    return out;
}

py::list minorant_faces(const LevyModel& model, double horizon,
                        std::size_t n_sticks, std::uint64_t seed) {
    RngStream rng(seed, 0);
    const MinorantSample s = sample_minorant(model, horizon, n_sticks, rng);
    py::list faces;
    for (const Face& f : s.minorant.faces())
        faces.append(py::make_tuple(f.length, f.height));
    return faces;
}

py::dict face_distribution_dict(const FaceDistribution& d) {
    py::dict out;
    for (const auto& [key, prob] : d.probabilities) {
        py::tuple k(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) {
            const double length = static_cast<double>(key[i].first) * d.horizon /
                                  static_cast<double>(d.n);
            k[i] = py::make_tuple(length, key[i].second);
        }
        out[k] = boost::rational_cast<double>(prob);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "stick-breaking samplers for Levy path functionals and the "
              "fluctuation identities they satisfy";

    py::class_<LevyModel>(m, "LevyModel")
        .def_static("from_json", &model_from_json, py::arg("text"))
        .def_static("brownian", &LevyModel::brownian, py::arg("mu"),
                    py::arg("sigma"))
        .def_static("stable", &LevyModel::stable, py::arg("alpha"),
                    py::arg("beta"), py::arg("scale"), py::arg("drift"),
                    py::arg("self_similar") = true)
        .def("to_json", &LevyModel::to_json)
        .def("reflected", &LevyModel::reflected)
        .def("prob_positive",
             [](const LevyModel& m_, double t) { return m_.prob_positive(t).value; },
             py::arg("t"))
        .def("char_exponent", &LevyModel::char_exponent, py::arg("v"))
        .def("sample_increment",
             [](const LevyModel& m_, double dt, std::uint64_t seed,
                std::uint64_t stream) {
                 RngStream rng(seed, stream);
                 return m_.sample_increment(dt, rng);
             },
             py::arg("dt"), py::arg("seed"), py::arg("stream") = 0);

    m.def("sample_triplets", &triplet_batch, py::arg("model"), py::arg("horizon"),
          py::arg("n_sticks"), py::arg("n"), py::arg("seed"),
          "n draws of (final, sup, argmax) as parallel lists");
    m.def("sample_minorant_faces", &minorant_faces, py::arg("model"),
          py::arg("horizon"), py::arg("n_sticks"), py::arg("seed"),
          "slope-ordered (length, height) faces of one minorant sample");
    m.def("sample_sticks",
          [](double horizon, std::size_t n, std::uint64_t seed) {
              RngStream rng(seed, 0);
              const StickSeq s = sample_sticks(horizon, n, rng);
              return py::make_tuple(s.lengths, s.remainder);
          },
          py::arg("horizon"), py::arg("n"), py::arg("seed"));

    m.def("spitzer_time",
          [](const LevyModel& model, double t) { return spitzer_time(model, t); },
          py::arg("model"), py::arg("t"));
    m.def("spitzer_sup",
          [](const LevyModel& model, double t) { return spitzer_sup(model, t); },
          py::arg("model"), py::arg("t"));
    m.def("laplace_sup_exp_horizon",
          [](const LevyModel& model, double theta, double u) {
              return laplace_sup_exp_horizon(model, theta, u).value;
          },
          py::arg("model"), py::arg("theta"), py::arg("u"));
    m.def("laplace_inf_exp_horizon",
          [](const LevyModel& model, double theta, double u) {
              return laplace_inf_exp_horizon(model, theta, u).value;
          },
          py::arg("model"), py::arg("theta"), py::arg("u"));
    m.def("wh_product_check",
          [](const LevyModel& model, double theta, std::complex<double> u,
             std::complex<double> v) {
              return wh_product_check(model, theta, u, v);
          },
          py::arg("model"), py::arg("theta"), py::arg("u"), py::arg("v"));
    m.def("vertex_sigma_laplace",
          [](const LevyModel& model, double theta, double s, double u) {
              return vertex_sigma_laplace(model, theta, s, u);
          },
          py::arg("model"), py::arg("theta"), py::arg("s"), py::arg("u"));
    m.def("rogozin_partial_integrals",
          [](const LevyModel& model, std::vector<double> eps) {
              const auto report = rogozin_regularity(model, std::move(eps));
              py::dict out;
              out["partial_integrals"] = report.partial_integrals;
              out["regular"] = report.regular ? py::cast(*report.regular)
                                              : py::none().cast<py::object>();
              return out;
          },
          py::arg("model"), py::arg("epsilons"));

    m.def("enumerate_minorant_distribution",
          [](std::vector<double> x, double horizon) {
              return face_distribution_dict(
                  enumerate_minorant_distribution(x, horizon));
          },
          py::arg("increments"), py::arg("horizon"));
    m.def("enumerate_sb_distribution",
          [](std::vector<double> x, double horizon) {
              return face_distribution_dict(enumerate_sb_distribution(x, horizon));
          },
          py::arg("increments"), py::arg("horizon"));
    m.def("face_law_total_variation",
          [](std::vector<double> x, double horizon) {
              return total_variation(enumerate_minorant_distribution(x, horizon),
                                     enumerate_sb_distribution(x, horizon));
          },
          py::arg("increments"), py::arg("horizon"));
    m.def("transform_3214",
          [](std::vector<double> times, std::vector<double> values, double g,
             double u, double d) {
              const PwlPath out = transform_3214(
                  PwlPath(std::move(times), std::move(values)), g, u, d);
              return py::make_tuple(out.times(), out.values());
          },
          py::arg("times"), py::arg("values"), py::arg("g"), py::arg("u"),
          py::arg("d"));

    m.def("ks_one_sample",
          [](std::vector<double> xs, const std::function<double(double)>& cdf) {
              const auto r = ks_one_sample(xs, cdf);
              return py::make_tuple(r.statistic, r.p_approx);
          },
          py::arg("sample"), py::arg("cdf"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
