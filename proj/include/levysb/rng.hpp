#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace levysb {

/// Counter-based random stream (Philox4x32-10).
///
/// A stream is identified by (seed, stream_index). Draws are produced by
/// encrypting an incrementing 128-bit counter, so any (seed, stream_index)
/// pair reproduces the same sequence and distinct stream indices give
/// statistically independent streams. This is the reproducibility contract
/// every sampler in the library relies on: parallel fan-out assigns one
/// stream index per task and never shares mutable state.
class RngStream {
public:
    RngStream(std::uint64_t seed = 0, std::uint64_t stream_index = 0)
        : seed_(seed), stream_(stream_index) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }

    /// New independent stream with the same seed.
    RngStream substream(std::uint64_t stream_index) const {
        return RngStream(seed_, stream_index);
    }

    /// Mirror the stream: uniforms become 1-u (antithetic pairing).
    void set_antithetic(bool on) { antithetic_ = on; }

    std::uint64_t next_u64() {
        if (buffered_ == 0) refill();
        --buffered_;
        const std::uint32_t lo = block_[2 * buffered_];
        const std::uint32_t hi = block_[2 * buffered_ + 1];
        return (static_cast<std::uint64_t>(hi) << 32) | lo;
    }

    /// Uniform draw on the open interval (0,1).
    double uniform() {
        const std::uint64_t bits = next_u64() >> 12;  // 52 bits
        double u = (static_cast<double>(bits) + 0.5) * 0x1.0p-52;
        return antithetic_ ? 1.0 - u : u;
    }

    /// Standard normal via Box-Muller (two uniforms per pair, cached).
    double normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_normal_ = r * std::sin(a);
        have_cached_normal_ = true;
        return r * std::cos(a);
    }

    /// Exponential with unit rate.
    double exponential() { return -std::log(uniform()); }

    /// Poisson count, exact inversion (chunked for large means).
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        // Split large means so the running product never underflows.
        while (mean > 500.0) {
            total += poisson_small(500.0);
            mean -= 500.0;
        }
        return total + poisson_small(mean);
    }

    /// Standard Cauchy.
    double cauchy() {
        return std::tan(3.1415926535897932384626433832795 * (uniform() - 0.5));
    }

private:
    std::uint64_t poisson_small(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double prod = uniform();
        while (prod > limit) {
            prod *= uniform();
            ++k;
        }
        return k;
    }

    // Philox4x32-10 block cipher (Salmon et al.): the 128-bit counter holds
    // (draw counter, stream index), the 64-bit key holds the seed.
    void refill() {
        std::uint32_t c0 = static_cast<std::uint32_t>(counter_ & 0xffffffffu);
        std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(stream_ & 0xffffffffu);
        std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
        std::uint32_t k0 = static_cast<std::uint32_t>(seed_ & 0xffffffffu);
        std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * c0;
            const std::uint64_t p1 = 0xCD9E8D57ull * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        block_ = {c0, c1, c2, c3};
        ++counter_;
        buffered_ = 2;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::array<std::uint32_t, 4> block_{};
    std::uint64_t counter_ = 0;
    int buffered_ = 0;
    bool antithetic_ = false;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace levysb
