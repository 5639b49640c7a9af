#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "levysb/pwl.hpp"
#include "levysb/rng.hpp"

namespace levysb {

/// A random-walk skeleton: n increments interpolated on the grid kT/n,
/// visited in the order given by the permutation (identity by default).
struct Walk {
    std::vector<double> increments;
    double horizon = 0.0;
    std::vector<std::size_t> perm;  // empty means identity

    std::size_t size() const { return increments.size(); }
};

/// Continuous piecewise linear interpolation of the permuted partial sums.
PwlPath walk_path(const Walk& w);

/// The 3214 path rearrangement with cut points 0 <= g <= u <= d <= T:
/// segments [u,d], [g,u], [0,g], [d,T] are laid out in that order, forward
/// oriented, with vertical shifts keeping the result continuous
/// (value on (d-g, d] is f(d) - f(g) + f(t-(d-g))).
PwlPath transform_3214(const PwlPath& f, double g, double u, double d);

struct Inverted3214 {
    double g = 0.0;
    double u = 0.0;
    double d = 0.0;
    PwlPath path;
};

/// Inverse of the 3214 transform given d-g: recovers d-u as the unique
/// above-chord rotation of the increments on [0, d-g] and d as the right
/// end of the last minorant face of tf on [d-g, T] with slope below the
/// chord slope tf(d-g)/(d-g).
Inverted3214 invert_3214(const PwlPath& tf, double d_minus_g);

/// The unique k* in {1..n} whose left-rotation keeps all partial sums of x
/// on or above the chord to sum(x); equals the argmin of the centred walk.
std::size_t cyclic_shift_above_chord(std::span<const double> x);

/// Exhaustive subset check that no two subsets of x share a mean
/// (tolerance 1e-12); only feasible for n <= 20.
bool has_no_subset_mean_ties(std::span<const double> x, double tol = 1e-12);

/// One draw of the discrete stick-breaking faces of Thm-style recursion
/// on the grid: uniform permutation, remainders L_k = floor(L_{k-1} V_k n/T) T/n,
/// faces (l_k, R(L_{k-1}) - R(L_k)). The multiset is distributed as the faces
/// of the convex minorant of the permuted walk.
std::vector<Face> sample_discrete_sb_faces(std::span<const double> x, double horizon,
                                           RngStream& rng);

using Rational = boost::rational<long long>;

/// Canonical face multiset: (length in grid cells, height) sorted by slope,
/// adjacent equal-slope faces merged (1e-9 slope tolerance), heights summed
/// over value-sorted contributions so equal multisets collide exactly.
using FaceKey = std::vector<std::pair<std::int64_t, double>>;

struct FaceDistribution {
    std::map<FaceKey, Rational> probabilities;
    double horizon = 0.0;
    std::size_t n = 0;
};

/// Exact distribution of the canonical face multiset of the convex minorant
/// of the uniformly permuted walk; brute force over all n! permutations (n <= 8).
FaceDistribution enumerate_minorant_distribution(std::span<const double> x,
                                                 double horizon);

/// Exact distribution of the discrete stick-breaking face multiset: the V_k
/// only matter through floor(L V n / T), a uniform choice among grid cells,
/// so the law is a finite rational tree crossed with the n! permutations (n <= 6).
FaceDistribution enumerate_sb_distribution(std::span<const double> x,
                                           double horizon);

/// Total variation distance after tolerance-clustering of nearby keys.
double total_variation(const FaceDistribution& a, const FaceDistribution& b,
                       double tol = 1e-9);

/// Exact comparison of the finite laws of (U, R) and (D-G, Theta_{G,U,D} R)
/// over the n * n! outcomes; returns the largest elementwise gap after
/// sorted matching (0 when the laws agree).
double transform_law_gap(std::span<const double> x, double horizon);

}  // namespace levysb
