#include "levysb/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "levysb/errors.hpp"

namespace levysb {

namespace {

double interpolate(const std::vector<double>& times,
                   const std::vector<double>& values, double t) {
    if (!(t >= times.front() && t <= times.back()))
        throw OutOfDomain("t outside [0, horizon]");
    auto it = std::lower_bound(times.begin(), times.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times.begin());
    if (i < times.size() && times[i] == t) return values[i];
    const double t0 = times[i - 1], t1 = times[i];
    const double w = (t - t0) / (t1 - t0);
    return values[i - 1] + w * (values[i] - values[i - 1]);
}

void check_finite(std::span<const double> xs) {
    for (double x : xs)
        if (!std::isfinite(x)) throw NonFiniteInput();
}

}  // namespace

PwlPath::PwlPath(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size()) throw MismatchedLengths();
    if (times_.empty()) throw NonPositiveLength("empty path");
    check_finite(times_);
    check_finite(values_);
    if (times_.front() != 0.0) throw OutOfDomain("first time must be 0");
    if (values_.front() != 0.0) throw OutOfDomain("first value must be 0");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1]))
            throw NonPositiveLength("times must be strictly increasing");
}

double PwlPath::evaluate(double t) const { return interpolate(times_, values_, t); }

void PwlPath::write_csv(std::ostream& os) const {
    os << "t,value\n";
    char buf[64];
    for (std::size_t i = 0; i < times_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", times_[i], values_[i]);
        os << buf;
    }
}

PwlConvex::PwlConvex(std::vector<Face> slope_ordered_faces)
    : faces_(std::move(slope_ordered_faces)) {
    if (faces_.empty()) throw NonPositiveLength("a convex function needs at least one face");
    cum_times_.reserve(faces_.size() + 1);
    cum_values_.reserve(faces_.size() + 1);
    cum_times_.push_back(0.0);
    cum_values_.push_back(0.0);
    for (const Face& f : faces_) {
        if (!(f.length > 0.0)) throw NonPositiveLength();
        if (!std::isfinite(f.length) || !std::isfinite(f.height))
            throw NonFiniteInput();
        cum_times_.push_back(cum_times_.back() + f.length);
        cum_values_.push_back(cum_values_.back() + f.height);
    }
    horizon_ = cum_times_.back();
}

double PwlConvex::evaluate(double t) const {
    return interpolate(cum_times_, cum_values_, t);
}

double PwlConvex::minimum() const {
    // Convexity: the minimum sits at the vertex where slopes turn positive.
    return *std::min_element(cum_values_.begin(), cum_values_.end());
}

PwlPath PwlConvex::as_path() const { return PwlPath(cum_times_, cum_values_); }

void PwlConvex::write_csv(std::ostream& os) const {
    os << "length,height\n";
    char buf[64];
    for (const Face& f : faces_) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.length, f.height);
        os << buf;
    }
}

PwlConvex build_convex_from_faces(std::span<const double> lengths,
                                  std::span<const double> heights) {
    if (lengths.size() != heights.size()) throw MismatchedLengths();
    if (lengths.empty()) throw MismatchedLengths("empty face list");
    check_finite(lengths);
    check_finite(heights);
    for (double l : lengths)
        if (!(l > 0.0)) throw NonPositiveLength();

    // Sorting by (slope, original index) reproduces the start times
    // a_n = sum of strictly-smaller-slope lengths plus earlier-index
    // equal-slope lengths. Slope ties compare exact IEEE quotients;
    // analytically-equal slopes computed differently may split.
    std::vector<std::size_t> order(lengths.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return heights[a] / lengths[a] < heights[b] / lengths[b];
    });
    std::vector<Face> faces;
    faces.reserve(order.size());
    for (std::size_t i : order) faces.push_back(Face{lengths[i], heights[i]});
    return PwlConvex(std::move(faces));
}

std::vector<std::size_t> lower_hull_indices(std::span<const double> x,
                                            std::span<const double> y) {
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < x.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            // Keep b only if it lies strictly below segment a->i.
            const double cross = (x[b] - x[a]) * (y[i] - y[a]) -
                                 (y[b] - y[a]) * (x[i] - x[a]);
            if (cross > 0.0) break;
            hull.pop_back();
        }
        hull.push_back(i);
    }
    return hull;
}

PwlConvex lower_convex_minorant_of_path(const PwlPath& path) {
    const auto& t = path.times();
    const auto& v = path.values();
    const auto hull = lower_hull_indices(t, v);
    std::vector<Face> faces;
    faces.reserve(hull.size() - 1);
    for (std::size_t k = 1; k < hull.size(); ++k)
        faces.push_back(Face{t[hull[k]] - t[hull[k - 1]], v[hull[k]] - v[hull[k - 1]]});
    if (faces.empty())  // single-breakpoint path cannot occur (ctor enforces >= 2 for T>0)
        throw NonPositiveLength("degenerate path");
    return PwlConvex(std::move(faces));
}

namespace {

template <typename F, typename G>
double sup_distance_impl(const F& f, const G& g,
                         const std::vector<double>& tf,
                         const std::vector<double>& tg) {
    const double Tf = tf.back(), Tg = tg.back();
    if (std::abs(Tf - Tg) > 1e-12 * std::max({1.0, std::abs(Tf), std::abs(Tg)}))
        throw HorizonMismatch();
    // The difference of two piecewise linear functions is piecewise linear,
    // so the sup is attained on the merged breakpoint set.
    double best = 0.0;
    auto scan = [&](const std::vector<double>& ts) {
        for (double t : ts) {
            const double tt = std::min(t, std::min(Tf, Tg));
            best = std::max(best, std::abs(f.evaluate(tt) - g.evaluate(tt)));
        }
    };
    scan(tf);
    scan(tg);
    return best;
}

}  // namespace

double sup_distance(const PwlPath& f, const PwlPath& g) {
    return sup_distance_impl(f, g, f.times(), g.times());
}

double sup_distance(const PwlConvex& f, const PwlConvex& g) {
    const PwlPath pf = f.as_path(), pg = g.as_path();
    return sup_distance_impl(pf, pg, pf.times(), pg.times());
}

double sup_distance(const PwlConvex& f, const PwlPath& g) {
    const PwlPath pf = f.as_path();
    return sup_distance_impl(pf, g, pf.times(), g.times());
}

PwlPath reordered_overlay(std::span<const double> lengths,
                          std::span<const double> heights,
                          std::span<const double> heights_order) {
    if (lengths.size() != heights.size() || lengths.size() != heights_order.size())
        throw MismatchedLengths();
    if (lengths.empty()) throw MismatchedLengths("empty face list");
    check_finite(lengths);
    check_finite(heights);
    check_finite(heights_order);
    for (double l : lengths)
        if (!(l > 0.0)) throw NonPositiveLength();

    // Arrangement of F_{l,h'}: faces ordered by (slope of h', index); the
    // overlay walks that arrangement accumulating the h heights instead.
    std::vector<std::size_t> order(lengths.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return heights_order[a] / lengths[a] < heights_order[b] / lengths[b];
    });
    std::vector<double> times{0.0}, values{0.0};
    times.reserve(order.size() + 1);
    values.reserve(order.size() + 1);
    for (std::size_t i : order) {
        times.push_back(times.back() + lengths[i]);
        values.push_back(values.back() + heights[i]);
    }
    return PwlPath(std::move(times), std::move(values));
}

}  // namespace levysb
