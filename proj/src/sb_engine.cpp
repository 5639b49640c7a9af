#include "levysb/sb_engine.hpp"

#include <algorithm>
#include <cmath>

#include "levysb/errors.hpp"

namespace levysb {

namespace {

struct FaceDraws {
    std::vector<double> lengths;
    std::vector<double> heights;
    double remainder = 0.0;
    bool residual_included = false;
};

/// Sticks plus their marks: l_1..l_N with heights sampled over each stick,
/// then the remainder as one residual stick when it is still positive.
FaceDraws draw_marked_sticks(const LevyModel& model, double horizon,
                             std::size_t n_sticks, double min_length,
                             RngStream& rng) {
    FaceDraws out;
    double remainder = horizon;
    for (std::size_t k = 0; k < n_sticks && remainder >= min_length; ++k) {
        const double stick = rng.uniform() * remainder;
        if (!(stick > 0.0)) break;
        out.lengths.push_back(stick);
        out.heights.push_back(model.sample_increment(stick, rng));
        remainder -= stick;
        if (remainder < 0.0) remainder = 0.0;
    }
    out.remainder = remainder;
    if (remainder > 0.0) {
        out.lengths.push_back(remainder);
        out.heights.push_back(model.sample_increment(remainder, rng));
        out.residual_included = true;
    }
    return out;
}

}  // namespace

Triplet sample_extremal_triplet(const LevyModel& model, double horizon,
                                std::size_t n_sticks, RngStream& rng) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidHorizon();
    if (n_sticks == 0) throw ZeroCount();
    const FaceDraws draws = draw_marked_sticks(
        model, horizon, n_sticks, horizon * kDefaultMinLengthFactor, rng);
    Triplet t;
    for (std::size_t k = 0; k < draws.lengths.size(); ++k) {
        const double xi = draws.heights[k];
        t.final += xi;
        if (xi > 0.0) {
            t.supremum += xi;
            t.argmax_time += draws.lengths[k];
        }
    }
    return t;
}

MinorantSample sample_minorant(const LevyModel& model, double horizon,
                               std::size_t n_sticks, RngStream& rng) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidHorizon();
    if (n_sticks == 0) throw ZeroCount();
    const FaceDraws draws = draw_marked_sticks(
        model, horizon, n_sticks, horizon * kDefaultMinLengthFactor, rng);
    return MinorantSample{build_convex_from_faces(draws.lengths, draws.heights),
                          draws.remainder, draws.residual_included};
}

std::pair<double, MinorantSample> sample_minorant_exp_horizon(
    const LevyModel& model, double theta, double min_length, RngStream& rng,
    std::size_t max_sticks) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidRate();
    const double horizon = rng.exponential() / theta;
    const double floor_len =
        min_length > 0.0 ? min_length : horizon * kDefaultMinLengthFactor;
    const FaceDraws draws =
        draw_marked_sticks(model, horizon, max_sticks, floor_len, rng);
    return {horizon,
            MinorantSample{build_convex_from_faces(draws.lengths, draws.heights),
                           draws.remainder, draws.residual_included}};
}

std::vector<std::pair<double, double>> vertex_process(
    const MinorantSample& sample, std::span<const double> slopes) {
    for (std::size_t i = 1; i < slopes.size(); ++i)
        if (!(slopes[i] > slopes[i - 1]))
            throw UnsortedSlopes("slopes must be strictly increasing");
    const auto& faces = sample.minorant.faces();
    std::vector<std::pair<double, double>> out;
    out.reserve(slopes.size());
    // Faces are slope-sorted, so each query is a prefix sum; walk both in one pass.
    std::size_t k = 0;
    double sigma = 0.0, eta = 0.0;
    for (double s : slopes) {
        while (k < faces.size() && faces[k].slope() <= s) {
            sigma += faces[k].length;
            eta += faces[k].height;
            ++k;
        }
        out.emplace_back(sigma, eta);
    }
    return out;
}

std::vector<std::pair<double, double>> sample_multi_drift_infima(
    const LevyModel& model, double theta, std::span<const double> slopes,
    double min_length, RngStream& rng) {
    const auto [horizon, sample] =
        sample_minorant_exp_horizon(model, theta, min_length, rng);
    (void)horizon;
    auto vertices = vertex_process(sample, slopes);
    std::vector<std::pair<double, double>> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto [sigma, eta] = vertices[i];
        out.emplace_back(sigma, eta - slopes[i] * sigma);
    }
    return out;
}

}  // namespace levysb
