#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "levysb/rng.hpp"

namespace levysb {

/// A finite realisation of the uniform stick-breaking recursion
/// L_0 = T, l_n = V_n * L_{n-1}, L_n = L_{n-1} - l_n with V_n iid U(0,1).
struct StickSeq {
    double horizon = 0.0;
    std::vector<double> lengths;
    double remainder = 0.0;

    std::size_t count() const { return lengths.size(); }

    /// CSV rows `index,length,remainder_after`.
    void write_csv(std::ostream& os) const;
};

/// Default caller cap on the number of sticks; E L_n = T * 2^-n puts the
/// remainder beyond double precision at 64.
inline constexpr std::size_t kDefaultMaxSticks = 64;

/// Relative threshold below which the remainder is dropped, T * 2^-52.
inline constexpr double kDefaultMinLengthFactor = 0x1.0p-52;

/// n sticks of the uniform recursion on [0,T]; stops early only if the
/// remainder underflows to zero.
StickSeq sample_sticks(double horizon, std::size_t n, RngStream& rng);

/// Deterministic replay: draw k is used as the stick fraction V_k.
StickSeq sample_sticks_from(double horizon, std::size_t n,
                            std::span<const double> draws);

/// Dyadic-grid stick-breaking at resolution T/2^k: remainders follow
/// L_n = floor(L_{n-1} * U_n * 2^k / T) * T / 2^k until the first zero
/// remainder. Lengths are integer multiples of T/2^k and there are at
/// most 2^k of them.
StickSeq sample_dyadic_sticks(double horizon, unsigned resolution_exponent,
                              RngStream& rng);

/// Deterministic replay: draw k is used as the remainder fraction U_k.
StickSeq sample_dyadic_sticks_from(double horizon, unsigned resolution_exponent,
                                   std::span<const double> draws);

/// Sticks on an exponential horizon: T ~ Exp(theta), then the uniform
/// recursion until the remainder falls below min_length (or max_sticks).
/// The sticks above min_length form a Poisson point process with mean
/// measure t^-1 e^{-theta t} dt restricted to (min_length, inf).
StickSeq sample_exponential_horizon_sticks(double theta, double min_length,
                                           RngStream& rng,
                                           std::size_t max_sticks = kDefaultMaxSticks);

}  // namespace levysb
