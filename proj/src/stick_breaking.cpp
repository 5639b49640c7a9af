#include "levysb/stick_breaking.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "levysb/errors.hpp"

namespace levysb {

void StickSeq::write_csv(std::ostream& os) const {
    os << "index,length,remainder_after\n";
    char buf[80];
    double rem = horizon;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        rem -= lengths[i];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i + 1, lengths[i],
                      i + 1 == lengths.size() ? remainder : rem);
        os << buf;
    }
}

namespace {

StickSeq run_recursion(double horizon, std::size_t n,
                       const std::function<double()>& draw) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidHorizon();
    if (n == 0) throw ZeroCount();
    StickSeq seq;
    seq.horizon = horizon;
    seq.lengths.reserve(n);
    double remainder = horizon;
    for (std::size_t k = 0; k < n && remainder > 0.0; ++k) {
        const double stick = draw() * remainder;
        if (!(stick > 0.0)) break;  // underflow guard
        seq.lengths.push_back(stick);
        remainder -= stick;
        if (remainder < 0.0) remainder = 0.0;
    }
    seq.remainder = remainder;
    return seq;
}

}  // namespace

StickSeq sample_sticks(double horizon, std::size_t n, RngStream& rng) {
    return run_recursion(horizon, n, [&rng] { return rng.uniform(); });
}

StickSeq sample_sticks_from(double horizon, std::size_t n,
                            std::span<const double> draws) {
    std::size_t i = 0;
    return run_recursion(horizon, n, [&draws, &i] {
        if (i >= draws.size()) throw ZeroCount("ran out of injected draws");
        return draws[i++];
    });
}

namespace {

StickSeq run_dyadic(double horizon, unsigned k,
                    const std::function<double()>& draw) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidHorizon();
    if (k > 52) throw InvalidHorizon("resolution exponent above 52 exceeds double grid");
    const double cell = std::ldexp(horizon, -static_cast<int>(k));
    StickSeq seq;
    seq.horizon = horizon;
    // Work in grid cells: L = m * T/2^k, so floor(L*U*2^k/T) = floor(m*U).
    std::uint64_t m = std::uint64_t{1} << k;
    while (m > 0) {
        const auto next = static_cast<std::uint64_t>(
            std::floor(static_cast<double>(m) * draw()));
        seq.lengths.push_back(static_cast<double>(m - next) * cell);
        m = next;
    }
    seq.remainder = 0.0;
    return seq;
}

}  // namespace

StickSeq sample_dyadic_sticks(double horizon, unsigned resolution_exponent,
                              RngStream& rng) {
    return run_dyadic(horizon, resolution_exponent, [&rng] { return rng.uniform(); });
}

StickSeq sample_dyadic_sticks_from(double horizon, unsigned resolution_exponent,
                                   std::span<const double> draws) {
    std::size_t i = 0;
    return run_dyadic(horizon, resolution_exponent, [&draws, &i] {
        if (i >= draws.size()) throw ZeroCount("ran out of injected draws");
        return draws[i++];
    });
}

StickSeq sample_exponential_horizon_sticks(double theta, double min_length,
                                           RngStream& rng,
                                           std::size_t max_sticks) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidRate();
    if (!(min_length > 0.0)) throw InvalidThreshold();
    const double horizon = rng.exponential() / theta;
    StickSeq seq;
    seq.horizon = horizon;
    double remainder = horizon;
    while (seq.lengths.size() < max_sticks && remainder >= min_length) {
        const double stick = rng.uniform() * remainder;
        if (!(stick > 0.0)) break;
        seq.lengths.push_back(stick);
        remainder -= stick;
        if (remainder < 0.0) remainder = 0.0;
    }
    seq.remainder = remainder;
    return seq;
}

}  // namespace levysb
