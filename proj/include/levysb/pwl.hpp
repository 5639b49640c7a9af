#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace levysb {

/// One linear segment of a piecewise linear function, described by its
/// horizontal length and vertical height. slope() = height/length.
struct Face {
    double length = 0.0;
    double height = 0.0;

    double slope() const { return height / length; }
};

/// Continuous piecewise linear path on [0,T], anchored at (0,0), stored as
/// strictly increasing breakpoint times with matching values.
class PwlPath {
public:
    PwlPath(std::vector<double> times, std::vector<double> values);

    double horizon() const { return times_.back(); }
    std::size_t breakpoint_count() const { return times_.size(); }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }

    /// Linear interpolation; exact at breakpoints. Throws OutOfDomain.
    double evaluate(double t) const;

    /// CSV rows `t,value`.
    void write_csv(std::ostream& os) const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

/// Piecewise linear convex function on [0,T] with value 0 at t=0, stored as
/// faces in non-decreasing slope order (ties keep insertion order).
class PwlConvex {
public:
    /// Faces must already be slope-ordered; lengths positive.
    explicit PwlConvex(std::vector<Face> slope_ordered_faces);

    double horizon() const { return horizon_; }
    const std::vector<Face>& faces() const { return faces_; }

    /// Time/value at the right end of face i (prefix sums); index n = vertex n.
    double vertex_time(std::size_t i) const { return cum_times_[i]; }
    double vertex_value(std::size_t i) const { return cum_values_[i]; }

    double evaluate(double t) const;
    double minimum() const;
    double total_height() const { return cum_values_.back(); }

    PwlPath as_path() const;

    /// CSV rows `length,height` in slope order.
    void write_csv(std::ostream& os) const;

private:
    std::vector<Face> faces_;
    std::vector<double> cum_times_;   // 0 = t of vertex 0, ... size faces+1
    std::vector<double> cum_values_;
    double horizon_ = 0.0;
};

/// The unique convex piecewise linear function with the given face multiset:
/// faces are arranged by increasing slope, equal slopes by original index.
/// Equal-slope faces are kept separate (no merging).
PwlConvex build_convex_from_faces(std::span<const double> lengths,
                                  std::span<const double> heights);

/// Convex minorant of a piecewise linear path (lower convex hull of its
/// breakpoints). Touches the path at every vertex of the result.
PwlConvex lower_convex_minorant_of_path(const PwlPath& path);

/// Exact sup-norm distance between two piecewise linear functions with the
/// same horizon, computed over the merged breakpoint set.
double sup_distance(const PwlPath& f, const PwlPath& g);
double sup_distance(const PwlConvex& f, const PwlConvex& g);
double sup_distance(const PwlConvex& f, const PwlPath& g);
inline double sup_distance(const PwlPath& f, const PwlConvex& g) {
    return sup_distance(g, f);
}

/// Overlay function G: linear on the intervals of the slope-arrangement
/// induced by `heights_order`, with the vertical increments taken from
/// `heights`. With heights_order == heights this is build_convex_from_faces.
PwlPath reordered_overlay(std::span<const double> lengths,
                          std::span<const double> heights,
                          std::span<const double> heights_order);

/// Lower convex hull of (x[i], y[i]) with x strictly increasing; returns the
/// indices of the hull vertices, first and last always included. Interior
/// collinear points are dropped, so consecutive hull slopes strictly increase.
std::vector<std::size_t> lower_hull_indices(std::span<const double> x,
                                            std::span<const double> y);

}  // namespace levysb
