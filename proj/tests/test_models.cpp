#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "levysb/errors.hpp"
#include "levysb/mc_stats.hpp"
#include "levysb/models.hpp"

using namespace levysb;

namespace {

std::vector<double> draws(const LevyModel& m, double dt, int n, std::uint64_t seed) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        RngStream rng(seed, i);
        out[i] = m.sample_increment(dt, rng);
    }
    return out;
}

}  // namespace

TEST_CASE("pure drift increments are deterministic") {
    const LevyModel m = LevyModel::brownian(2.0, 0.0);
    RngStream rng(1, 0);
    CHECK(m.sample_increment(0.5, rng) == doctest::Approx(1.0));
    CHECK_THROWS_AS(m.sample_increment(0.0, rng), InvalidDt);
    CHECK_THROWS_AS(m.sample_increment(-1.0, rng), InvalidDt);
}

TEST_CASE("compound poisson keeps its atom at zero") {
    const LevyModel m =
        LevyModel::compound_poisson(1.0, NormalJump{0.0, 1.0}, 0.0);
    const int n = 100000;
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
        RngStream rng(2, i);
        if (m.sample_increment(1.0, rng) == 0.0) ++zeros;
    }
    const double target = std::exp(-1.0);
    const double se = std::sqrt(target * (1 - target) / n);
    CHECK(std::abs(double(zeros) / n - target) < 3.0 * se);
}

TEST_CASE("standard Brownian moments") {
    const LevyModel m = LevyModel::brownian(0.0, 1.0);
    const int n = 1000000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        RngStream rng(3, i);
        const double x = m.sample_increment(1.0, rng);
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(double(n)));
    CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("prob_positive analytic values") {
    CHECK(LevyModel::brownian(0.0, 1.0).prob_positive(0.37).value == 0.5);
    const double phi1 = 0.5 * std::erfc(-1.0 / std::sqrt(2.0));
    CHECK(LevyModel::brownian(1.0, 1.0).prob_positive(1.0).value ==
          doctest::Approx(phi1).epsilon(1e-12));
    CHECK(LevyModel::stable(1.0, 0.0, 1.0, 1.0).prob_positive(3.0).value ==
          doctest::Approx(0.75));
    const LevyModel cp = LevyModel::compound_poisson(1.0, ExponentialJump{}, 0.0);
    CHECK(cp.prob_positive(1.0).value == doctest::Approx(1.0 - std::exp(-1.0)));
    CHECK_THROWS_AS(cp.prob_positive(0.0), InvalidT);
}

TEST_CASE("prob_positive falls back to Monte Carlo with a standard error") {
    const LevyModel m = LevyModel::stable(1.5, 0.5, 1.0, 0.0);
    const auto v = m.prob_positive(1.0, 20000);
    CHECK(v.n == 20000);
    CHECK(v.std_error > 0.0);
    CHECK(v.value > 0.3);
    CHECK(v.value < 0.7);
}

TEST_CASE("mean positive part") {
    CHECK(LevyModel::brownian(0.0, 1.0).mean_positive_part(1.0).value ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
    CHECK(LevyModel::brownian(5.0, 1e-9).mean_positive_part(1.0).value ==
          doctest::Approx(5.0).epsilon(1e-6));
    CHECK(LevyModel::brownian(2.0, 1.0).mean_positive_part(4.0).value ==
          doctest::Approx(2.0 * std::sqrt(4.0) *
                              (std::exp(-8.0) / std::sqrt(2.0 * M_PI)) / 2.0 +
                          0.0)
              .epsilon(1.0));  // loose sanity; exact form checked below
    const double d = 2.0;  // BM(1,1) at t=4: d = mu sqrt(t)/sigma
    const double phi = std::exp(-0.5 * d * d) / std::sqrt(2.0 * M_PI);
    const double Phi = 0.5 * std::erfc(-d / std::sqrt(2.0));
    CHECK(LevyModel::brownian(1.0, 1.0).mean_positive_part(4.0).value ==
          doctest::Approx(std::sqrt(4.0) * phi + 4.0 * Phi).epsilon(1e-12));
    CHECK_THROWS_AS(LevyModel::stable(0.8, 0.0, 1.0, 0.0).mean_positive_part(1.0),
                    HeavyTail);
}

TEST_CASE("characteristic exponents") {
    using namespace std::complex_literals;
    CHECK(LevyModel::brownian(0.0, 1.0).char_exponent(1i) ==
          doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(LevyModel::brownian(2.0, 3.0).char_exponent(0.0 + 0.0i)) == 0.0);
    const auto cp = LevyModel::compound_poisson(2.0, ExponentialJump{1.0, 1}, 0.0);
    const std::complex<double> psi = cp.char_exponent(1i);
    CHECK(psi.real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(psi.imag() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(cp.char_exponent(std::complex<double>(0.5, 0.5)),
                    UnsupportedArgument);
}

TEST_CASE("empirical characteristic function matches char_exponent") {
    using namespace std::complex_literals;
    for (const LevyModel& m :
         {LevyModel::brownian(0.3, 1.0),
          LevyModel::compound_poisson(1.0, NormalJump{0.2, 1.0}, 0.5),
          LevyModel::stable(1.4, 0.4, 0.8, 0.1)}) {
        const int n = 200000;
        std::complex<double> acc = 0.0;
        double re_sq = 0.0, im_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            RngStream rng(4, i);
            const std::complex<double> z =
                std::exp(1i * m.sample_increment(1.0, rng));
            acc += z;
            re_sq += z.real() * z.real();
            im_sq += z.imag() * z.imag();
        }
        const std::complex<double> emp = acc / double(n);
        const std::complex<double> ref = std::exp(m.char_exponent(1i));
        const double se_re = std::sqrt(
            (re_sq / n - emp.real() * emp.real()) / n);
        const double se_im = std::sqrt(
            (im_sq / n - emp.imag() * emp.imag()) / n);
        CHECK(std::abs(emp.real() - ref.real()) < 3.0 * se_re);
        CHECK(std::abs(emp.imag() - ref.imag()) < 3.0 * se_im);
    }
}

TEST_CASE("increment additivity across the zoo") {
    for (const LevyModel& m :
         {LevyModel::brownian(0.5, 1.0),
          LevyModel::compound_poisson(1.0, ExponentialJump{1.0, 1}, -0.3),
          LevyModel::stable(1.3, 0.3, 1.0, 0.0)}) {
        const int n = 100000;
        std::vector<double> split(n), whole(n);
        for (int i = 0; i < n; ++i) {
            RngStream a(5, 2 * i);
            RngStream b(5, 2 * i + 1);
            split[i] = m.sample_increment(0.5, a) + m.sample_increment(0.5, b);
            RngStream c(6, i);
            whole[i] = m.sample_increment(1.0, c);
        }
        const auto ks = ks_two_sample(split, whole);
        CHECK(ks.p_approx > 0.01);
    }
}

TEST_CASE("reflection negates the law") {
    const LevyModel m =
        LevyModel::compound_poisson(1.0, ExponentialJump{2.0, 1}, 0.7);
    const LevyModel r = m.reflected();
    const int n = 50000;
    std::vector<double> a(n), b(n);
    for (int i = 0; i < n; ++i) {
        RngStream ra(7, i), rb(8, i);
        a[i] = -m.sample_increment(1.0, ra);
        b[i] = r.sample_increment(1.0, rb);
    }
    CHECK(ks_two_sample(a, b).p_approx > 0.01);
    CHECK(*m.certified_drift_limit() ==
          doctest::Approx(-*r.certified_drift_limit()).epsilon(1e-12));
}

TEST_CASE("json round trip") {
    const std::string text =
        R"({"type":"cp","lambda":2.5,"drift":-0.5,"jump":{"type":"two_point","p":0.3,"up":1.5,"down":-0.5}})";
    const LevyModel m = LevyModel::from_json(text);
    const LevyModel again = LevyModel::from_json(m.to_json());
    CHECK(m.to_json() == again.to_json());
    CHECK_THROWS_AS(LevyModel::from_json("{\"type\":\"what\"}"), NonFiniteInput);
    CHECK_THROWS_AS(LevyModel::from_json("not json"), NonFiniteInput);
    CHECK_THROWS_AS(LevyModel::from_json(R"({"type":"bm","mu":0,"sigma":0})"),
                    NonFiniteInput);
    CHECK_THROWS_AS(
        LevyModel::from_json(R"({"type":"stable","alpha":2.5})"),
        NonFiniteInput);
}

TEST_CASE("tail classification of the zoo") {
    CHECK(*LevyModel::brownian(-1.0, 1.0).tail_classification() ==
          TailClass::SupremumFinite);
    CHECK(*LevyModel::brownian(1.0, 1.0).tail_classification() ==
          TailClass::InfimumFinite);
    CHECK(*LevyModel::brownian(0.0, 1.0).tail_classification() ==
          TailClass::Oscillates);
    CHECK(*LevyModel::stable(1.0, 0.0, 1.0, 1.0).tail_classification() ==
          TailClass::Oscillates);
    CHECK(!LevyModel::stable(1.0, 0.5, 1.0, 0.0).tail_classification());
    const LevyModel cp =
        LevyModel::compound_poisson(2.0, ExponentialJump{1.0, 1}, -2.0);
    CHECK(*cp.tail_classification() == TailClass::Oscillates);  // mean zero
}

TEST_CASE("regularity verdicts") {
    CHECK(*LevyModel::brownian(0.0, 1.0).regularity_verdict());
    CHECK_FALSE(*LevyModel::brownian(-1.0, 0.0).regularity_verdict());
    CHECK_FALSE(
        *LevyModel::compound_poisson(1.0, ExponentialJump{}, 0.0).regularity_verdict());
    CHECK(*LevyModel::stable(1.5, 0.9, 1.0, -5.0).regularity_verdict());
    CHECK(*LevyModel::stable(1.0, 0.0, 1.0, 9.0).regularity_verdict());
    CHECK_FALSE(*LevyModel::stable(0.7, 0.0, 1.0, -1.0).regularity_verdict());
}
