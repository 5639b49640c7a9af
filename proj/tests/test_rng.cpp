#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "levysb/rng.hpp"

using namespace levysb;

TEST_CASE("philox known-answer block") {
    // Reference output of Philox4x32-10 for counter 0, key 0.
    RngStream r(0, 0);
    const std::uint64_t a = r.next_u64();
    const std::uint64_t b = r.next_u64();
    const std::uint32_t words[4] = {
        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
        static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32)};
    CHECK(words[0] == 0x6627e8d5u);
    CHECK(words[1] == 0xe169c58du);
    CHECK(words[2] == 0xbc57ac4cu);
    CHECK(words[3] == 0x9b00dbd8u);
}

TEST_CASE("streams reproduce and split") {
    RngStream a(42, 7);
    RngStream b(42, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream c(42, 8);
    RngStream d = RngStream(42, 0).substream(8);
    for (int i = 0; i < 10; ++i) CHECK(c.next_u64() == d.next_u64());
}

TEST_CASE("uniform lies in the open interval and mirrors under antithetic") {
    RngStream plain(1, 2);
    RngStream mirror(1, 2);
    mirror.set_antithetic(true);
    for (int i = 0; i < 1000; ++i) {
        const double u = plain.uniform();
        const double v = mirror.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        CHECK(v == doctest::Approx(1.0 - u).epsilon(1e-15));
    }
}

TEST_CASE("normal moments") {
    RngStream r(3, 0);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        sum += z;
        sumsq += z * z;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("poisson zero mass at unit mean") {
    RngStream r(4, 0);
    const int n = 100000;
    int zeros = 0;
    for (int i = 0; i < n; ++i)
        if (r.poisson(1.0) == 0) ++zeros;
    const double p = static_cast<double>(zeros) / n;
    const double target = std::exp(-1.0);
    const double se = std::sqrt(target * (1.0 - target) / n);
    CHECK(std::abs(p - target) < 3.0 * se);
}

TEST_CASE("poisson large mean splits without bias") {
    RngStream r(5, 0);
    const int n = 20000;
    double sum = 0.0;
    const double mean = 1234.5;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(r.poisson(mean));
    const double se = std::sqrt(mean / n);
    CHECK(std::abs(sum / n - mean) < 4.0 * se);
}
