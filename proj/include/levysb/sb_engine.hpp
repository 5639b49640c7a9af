#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "levysb/models.hpp"
#include "levysb/pwl.hpp"
#include "levysb/rng.hpp"
#include "levysb/stick_breaking.hpp"

namespace levysb {

/// Extremal triplet of a path over [0,T]: final value, supremum and the
/// first time the supremum is attained.
struct Triplet {
    double final = 0.0;
    double supremum = 0.0;
    double argmax_time = 0.0;
};

/// A sampled convex minorant. Face heights sum to the sampled final value.
struct MinorantSample {
    PwlConvex minorant;
    double residual_remainder = 0.0;
    bool residual_face_included = false;
};

/// Exact-in-law draw of (X_T, sup X, argmax) via the stick-breaking series:
/// sticks l_1..l_n carry heights xi_k sampled over duration l_k, and the
/// remainder L_n contributes one residual increment sampled over L_n. The
/// final value telescopes exactly; sup/argmax carry a truncation bias of
/// order E L_n = T * 2^-n.
Triplet sample_extremal_triplet(const LevyModel& model, double horizon,
                                std::size_t n_sticks, RngStream& rng);

/// Exact-in-law draw of the convex minorant on [0,T]: faces (l_k, xi_k)
/// composed by slope, plus the residual face over the remainder.
MinorantSample sample_minorant(const LevyModel& model, double horizon,
                               std::size_t n_sticks, RngStream& rng);

/// Minorant on an independent Exp(theta) horizon; the face points (l, xi)
/// form a Poisson point process with mean measure t^-1 e^{-theta t}
/// P(X_t in dx) dt. Returns the drawn horizon with the sample.
std::pair<double, MinorantSample> sample_minorant_exp_horizon(
    const LevyModel& model, double theta, double min_length, RngStream& rng,
    std::size_t max_sticks = kDefaultMaxSticks);

/// Vertex process of a sampled minorant, read off the faces:
/// sigma_s = sum of lengths of faces with slope <= s, eta_s the matching
/// height sum; (sigma_s, eta_s) lies on the minorant graph.
std::vector<std::pair<double, double>> vertex_process(
    const MinorantSample& sample, std::span<const double> slopes);

/// Joint (argmin time, infimum) of the drift-adjusted processes X_t - s_i t
/// over one Exp(theta) horizon, for strictly increasing slopes s_1 < ... < s_n:
/// (tau_i, inf_i) = (sigma_{s_i}, eta_{s_i} - s_i sigma_{s_i}).
std::vector<std::pair<double, double>> sample_multi_drift_infima(
    const LevyModel& model, double theta, std::span<const double> slopes,
    double min_length, RngStream& rng);

}  // namespace levysb
