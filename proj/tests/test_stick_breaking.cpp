#include <cmath>
#include <vector>

#include "doctest.h"
#include "levysb/errors.hpp"
#include "levysb/stick_breaking.hpp"

using namespace levysb;

TEST_CASE("injected geometric halving") {
    const std::vector<double> v(8, 0.5);
    const StickSeq s = sample_sticks_from(1.0, 8, v);
    REQUIRE(s.count() == 8);
    CHECK(s.lengths[0] == doctest::Approx(0.5));
    CHECK(s.lengths[1] == doctest::Approx(0.25));
    CHECK(s.lengths[2] == doctest::Approx(0.125));
    CHECK(s.remainder == doctest::Approx(std::ldexp(1.0, -8)));
}

TEST_CASE("boundary draw consumes the whole horizon") {
    const std::vector<double> v{1.0, 0.5, 0.5};
    const StickSeq s = sample_sticks_from(1.0, 3, v);
    REQUIRE(s.count() == 1);
    CHECK(s.lengths[0] == 1.0);
    CHECK(s.remainder == 0.0);
}

TEST_CASE("input guards") {
    RngStream rng(1, 0);
    CHECK_THROWS_AS(sample_sticks(0.0, 4, rng), InvalidHorizon);
    CHECK_THROWS_AS(sample_sticks(-1.0, 4, rng), InvalidHorizon);
    CHECK_THROWS_AS(sample_sticks(1.0, 0, rng), ZeroCount);
    CHECK_THROWS_AS(sample_exponential_horizon_sticks(0.0, 1e-6, rng), InvalidRate);
    CHECK_THROWS_AS(sample_exponential_horizon_sticks(1.0, 0.0, rng),
                    InvalidThreshold);
}

TEST_CASE("64 sticks capture the horizon to 2^-50") {
    for (int seed = 0; seed < 200; ++seed) {
        RngStream rng(11, seed);
        const StickSeq s = sample_sticks(1.0, 64, rng);
        double sum = 0.0;
        for (double l : s.lengths) sum += l;
        CHECK(sum <= 1.0);
        CHECK(sum >= 1.0 - std::ldexp(1.0, -50));
        CHECK(sum + s.remainder == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t i = 0; i < s.lengths.size(); ++i) CHECK(s.lengths[i] > 0.0);
    }
}

TEST_CASE("dyadic hand examples") {
    SUBCASE("single draw kills the remainder") {
        const std::vector<double> u{0.3};
        const StickSeq s = sample_dyadic_sticks_from(1.0, 1, u);
        REQUIRE(s.count() == 1);
        CHECK(s.lengths[0] == 1.0);
    }
    SUBCASE("two half sticks") {
        const std::vector<double> u{0.6, 0.6};
        const StickSeq s = sample_dyadic_sticks_from(1.0, 1, u);
        REQUIRE(s.count() == 2);
        CHECK(s.lengths[0] == 0.5);
        CHECK(s.lengths[1] == 0.5);
    }
    SUBCASE("resolution zero is one grid cell") {
        RngStream rng(12, 0);
        for (int i = 0; i < 20; ++i) {
            const StickSeq s = sample_dyadic_sticks(3.5, 0, rng);
            REQUIRE(s.count() == 1);
            CHECK(s.lengths[0] == 3.5);
        }
    }
}

TEST_CASE("dyadic lengths refine to the continuous recursion") {
    // The dyadic draw is the remainder fraction, the continuous draw the
    // stick fraction, so couple them through u <-> 1-u.
    RngStream rng(13, 0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> u(64), v(64);
        for (int i = 0; i < 64; ++i) {
            u[i] = rng.uniform();
            v[i] = 1.0 - u[i];
        }
        const StickSeq cont = sample_sticks_from(1.0, 64, v);
        for (unsigned k = 8; k <= 16; k += 2) {
            const StickSeq dyadic = sample_dyadic_sticks_from(1.0, k, u);
            const double bound = std::ldexp(1.0, -static_cast<int>(k));
            const std::size_t m = std::min(dyadic.count(), cont.count());
            for (std::size_t i = 0; i < m; ++i)
                CHECK(std::abs(dyadic.lengths[i] - cont.lengths[i]) <=
                      static_cast<double>(i + 1) * bound);
        }
    }
}

TEST_CASE("stick occupation of a window matches log(b/a)") {
    const double a = 0.1, b = 0.5;
    const int runs = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < runs; ++i) {
        RngStream rng(14, i);
        const StickSeq s = sample_sticks(1.0, 64, rng);
        int hits = 0;
        for (double l : s.lengths)
            if (l >= a && l <= b) ++hits;
        sum += hits;
        sumsq += static_cast<double>(hits) * hits;
    }
    const double mean = sum / runs;
    const double var = sumsq / runs - mean * mean;
    const double se = std::sqrt(var / runs);
    CHECK(std::abs(mean - std::log(b / a)) < 3.0 * se);
}

TEST_CASE("exponential horizon sticks") {
    const int runs = 100000;
    double horizon_sum = 0.0;
    double count_sum = 0.0, count_sumsq = 0.0;
    std::vector<std::uint64_t> counts(runs);
    double cov_acc = 0.0, mean_a = 0.0, mean_b = 0.0;
    std::vector<double> window_a(runs), window_b(runs);
    for (int i = 0; i < runs; ++i) {
        RngStream rng(15, i);
        const StickSeq s = sample_exponential_horizon_sticks(1.0, 1e-9, rng, 256);
        horizon_sum += s.horizon;
        std::uint64_t c = 0, c2 = 0;
        for (double l : s.lengths) {
            if (l >= 0.5 && l <= 1.0) ++c;
            if (l > 1.0 && l <= 2.0) ++c2;
        }
        counts[i] = c;
        count_sum += static_cast<double>(c);
        count_sumsq += static_cast<double>(c) * c;
        window_a[i] = static_cast<double>(c);
        window_b[i] = static_cast<double>(c2);
    }
    SUBCASE("horizon has mean 1/theta") {
        CHECK(std::abs(horizon_sum / runs - 1.0) < 3.0 / std::sqrt(double(runs)));
    }
    SUBCASE("window count mean matches the mean measure") {
        // Independent oracle: midpoint quadrature of t^-1 e^-t over [0.5, 1].
        double expected = 0.0;
        const int steps = 200000;
        const double h = 0.5 / steps;
        for (int k = 0; k < steps; ++k) {
            const double t = 0.5 + (k + 0.5) * h;
            expected += std::exp(-t) / t * h;
        }
        CHECK(expected == doctest::Approx(0.340390).epsilon(1e-4));
        const double mean = count_sum / runs;
        const double var = count_sumsq / runs - mean * mean;
        const double se = std::sqrt(var / runs);
        CHECK(std::abs(mean - expected) < 3.0 * se);
    }
    SUBCASE("counts pass the dispersion test") {
        double mean = count_sum / runs;
        double var = (count_sumsq - runs * mean * mean) / (runs - 1.0);
        const double index = var / mean;
        CHECK(index > 0.97);
        CHECK(index < 1.03);
    }
    SUBCASE("disjoint windows are uncorrelated") {
        for (int i = 0; i < runs; ++i) {
            mean_a += window_a[i];
            mean_b += window_b[i];
        }
        mean_a /= runs;
        mean_b /= runs;
        double prod_sd = 0.0;
        for (int i = 0; i < runs; ++i) {
            const double p = (window_a[i] - mean_a) * (window_b[i] - mean_b);
            cov_acc += p;
            prod_sd += p * p;
        }
        const double cov = cov_acc / runs;
        const double se = std::sqrt((prod_sd / runs - cov * cov) / runs);
        CHECK(std::abs(cov) < 3.0 * se);
    }
}
