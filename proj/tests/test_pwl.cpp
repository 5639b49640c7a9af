#include <cmath>
#include <vector>

#include "doctest.h"
#include "levysb/errors.hpp"
#include "levysb/pwl.hpp"
#include "levysb/rng.hpp"

using namespace levysb;

namespace {

PwlConvex make(std::vector<double> l, std::vector<double> h) {
    return build_convex_from_faces(l, h);
}

}  // namespace

TEST_CASE("single face is a line") {
    const PwlConvex f = make({2.0}, {3.0});
    CHECK(f.horizon() == 2.0);
    CHECK(f.evaluate(1.0) == doctest::Approx(1.5));
    CHECK(f.evaluate(2.0) == doctest::Approx(3.0));
}

TEST_CASE("faces are arranged by slope") {
    const PwlConvex f = make({1.0, 1.0}, {1.0, -1.0});
    CHECK(f.evaluate(0.0) == 0.0);
    CHECK(f.evaluate(1.0) == doctest::Approx(-1.0));
    CHECK(f.evaluate(2.0) == doctest::Approx(0.0));
    CHECK(f.evaluate(1.5) == doctest::Approx(-0.5));
    CHECK(f.faces()[0].height == -1.0);
    CHECK(f.faces()[1].height == 1.0);
}

TEST_CASE("equal slopes keep index order and are not merged") {
    const PwlConvex f = make({1.0, 1.0}, {2.0, 2.0});
    REQUIRE(f.faces().size() == 2);
    CHECK(f.vertex_time(1) == 1.0);  // a_2 = 1 by the earlier-index rule
    CHECK(f.evaluate(0.75) == doctest::Approx(1.5));
    CHECK(f.evaluate(2.0) == doctest::Approx(4.0));
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(make({1.0, 1.0}, {1.0}), MismatchedLengths);
    CHECK_THROWS_AS(make({}, {}), MismatchedLengths);
    CHECK_THROWS_AS(make({1.0, 0.0}, {1.0, 1.0}), NonPositiveLength);
    CHECK_THROWS_AS(make({1.0, -2.0}, {1.0, 1.0}), NonPositiveLength);
    CHECK_THROWS_AS(make({1.0}, {std::nan("")}), NonFiniteInput);
    const PwlConvex f = make({1.0}, {1.0});
    CHECK_THROWS_AS(f.evaluate(-0.1), OutOfDomain);
    CHECK_THROWS_AS(f.evaluate(1.1), OutOfDomain);
}

TEST_CASE("minorant of a path is the lower hull") {
    SUBCASE("chord below a spike") {
        const PwlPath p({0.0, 1.0, 2.0}, {0.0, 5.0, 0.0});
        const PwlConvex c = lower_convex_minorant_of_path(p);
        REQUIRE(c.faces().size() == 1);
        CHECK(c.faces()[0].length == 2.0);
        CHECK(c.faces()[0].height == 0.0);
    }
    SUBCASE("v shape is its own minorant") {
        const PwlPath p({0.0, 1.0, 2.0}, {0.0, -1.0, 0.0});
        const PwlConvex c = lower_convex_minorant_of_path(p);
        REQUIRE(c.faces().size() == 2);
        CHECK(c.faces()[0].height == -1.0);
        CHECK(c.faces()[1].height == 1.0);
    }
    SUBCASE("monotone chain by hand") {
        const PwlPath p({0.0, 1.0, 2.0, 3.0}, {0.0, -1.0, -1.0, 1.0});
        const PwlConvex c = lower_convex_minorant_of_path(p);
        REQUIRE(c.faces().size() == 3);
        CHECK(c.faces()[0].height == doctest::Approx(-1.0));
        CHECK(c.faces()[1].height == doctest::Approx(0.0));
        CHECK(c.faces()[2].height == doctest::Approx(2.0));
    }
}

TEST_CASE("sup distance is computed on merged breakpoints") {
    const PwlConvex f = make({1.0, 1.0}, {1.0, -1.0});
    CHECK(sup_distance(f, f) == 0.0);

    const PwlConvex line = make({1.0}, {1.0});
    const PwlConvex zero = make({1.0}, {0.0});
    CHECK(sup_distance(line, zero) == doctest::Approx(1.0));

    const PwlConvex chord = make({2.0}, {0.0});
    CHECK(sup_distance(f, chord) == doctest::Approx(1.0));

    CHECK_THROWS_AS(sup_distance(line, chord), HorizonMismatch);
}

TEST_CASE("reordered overlay") {
    SUBCASE("identical orders reproduce the convex function") {
        const std::vector<double> l{0.5, 1.0, 0.25}, h{0.3, -1.0, 0.4};
        const PwlPath overlay = reordered_overlay(l, h, h);
        CHECK(sup_distance(build_convex_from_faces(l, h), overlay) <= 1e-15);
    }
    SUBCASE("heights laid over the other arrangement") {
        const std::vector<double> l{1.0, 1.0}, h{1.0, -1.0}, h2{-1.0, 1.0};
        const PwlPath overlay = reordered_overlay(l, h, h2);
        CHECK(overlay.evaluate(1.0) == doctest::Approx(1.0));
        CHECK(overlay.evaluate(2.0) == doctest::Approx(0.0));
        CHECK(overlay.evaluate(0.5) == doctest::Approx(0.5));
    }
}

namespace {

struct RandomInstance {
    std::vector<double> lengths, h, h2;
};

RandomInstance random_instance(RngStream& rng, std::size_t max_n) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * max_n);
    RandomInstance out;
    for (std::size_t i = 0; i < n; ++i) {
        out.lengths.push_back(0.05 + rng.uniform());
        out.h.push_back(2.0 * rng.uniform() - 1.0);
        out.h2.push_back(2.0 * rng.uniform() - 1.0);
    }
    return out;
}

}  // namespace

TEST_CASE("uniqueness: any permutation builds the same function") {
    RngStream rng(2024, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto inst = random_instance(rng, 20);
        const std::size_t n = inst.lengths.size();
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            const auto j = static_cast<std::size_t>(rng.uniform() * i);
            std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
        }
        std::vector<double> pl(n), ph(n);
        for (std::size_t i = 0; i < n; ++i) {
            pl[i] = inst.lengths[perm[i]];
            ph[i] = inst.h[perm[i]];
        }
        const double d = sup_distance(build_convex_from_faces(inst.lengths, inst.h),
                                      build_convex_from_faces(pl, ph));
        CHECK(d < 1e-12);
    }
}

TEST_CASE("convexity: slopes never decrease") {
    RngStream rng(2025, 0);
    for (int trial = 0; trial < 200; ++trial) {
        auto inst = random_instance(rng, 20);
        const PwlConvex f = build_convex_from_faces(inst.lengths, inst.h);
        for (std::size_t i = 1; i < f.faces().size(); ++i)
            CHECK(f.faces()[i - 1].slope() <= f.faces()[i].slope());
    }
}

TEST_CASE("minorant touches the path at its vertices and stays below") {
    RngStream rng(2026, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 15);
        std::vector<double> times{0.0}, values{0.0};
        for (std::size_t i = 0; i < n; ++i) {
            times.push_back(times.back() + 0.05 + rng.uniform());
            values.push_back(values.back() + 2.0 * rng.uniform() - 1.0);
        }
        const PwlPath path(times, values);
        const PwlConvex c = lower_convex_minorant_of_path(path);
        for (double t : times)
            CHECK(c.evaluate(t) <= path.evaluate(t) + 1e-12);
        // Contact at every vertex of the minorant.
        for (std::size_t k = 0; k + 1 < c.faces().size() + 1; ++k) {
            const double t = c.vertex_time(k);
            CHECK(c.vertex_value(k) ==
                  doctest::Approx(path.evaluate(t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sandwich inequality") {
    RngStream rng(2027, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto inst = random_instance(rng, 20);
        const PwlConvex fh = build_convex_from_faces(inst.lengths, inst.h);
        const PwlConvex fh2 = build_convex_from_faces(inst.lengths, inst.h2);
        const PwlPath overlay = reordered_overlay(inst.lengths, inst.h, inst.h2);
        double up = 0.0, down = 0.0;
        for (std::size_t i = 0; i < inst.h.size(); ++i) {
            up += std::max(inst.h[i] - inst.h2[i], 0.0);
            down += std::max(inst.h2[i] - inst.h[i], 0.0);
        }
        const double bound = std::max(up, down) + 1e-12;
        CHECK(sup_distance(fh, fh2) <= bound);
        CHECK(sup_distance(fh2, overlay) <= bound);
    }
}

TEST_CASE("finite-face continuity under shrinking perturbations") {
    RngStream rng(2028, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = random_instance(rng, 12);
        const std::size_t n = inst.lengths.size();
        double total = 0.0;
        for (double l : inst.lengths) total += l;
        std::vector<double> dir_l(n), dir_h(n);
        for (std::size_t i = 0; i < n; ++i) {
            dir_l[i] = rng.uniform() - 0.5;
            dir_h[i] = rng.uniform() - 0.5;
        }
        const PwlConvex base = build_convex_from_faces(inst.lengths, inst.h);
        double previous = 1e300;
        for (double delta : {1e-2, 1e-4, 1e-6}) {
            std::vector<double> pl(n), ph(n);
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                pl[i] = inst.lengths[i] * (1.0 + delta * dir_l[i]);
                sum += pl[i];
                ph[i] = inst.h[i] + delta * dir_h[i];
            }
            for (std::size_t i = 0; i < n; ++i) pl[i] *= total / sum;
            const double d = sup_distance(base, build_convex_from_faces(pl, ph));
            CHECK(d <= previous + 1e-15);
            previous = d;
        }
        CHECK(previous < 1e-4);
    }
}
