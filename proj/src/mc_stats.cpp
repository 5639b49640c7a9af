#include "levysb/mc_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "levysb/errors.hpp"

namespace levysb {

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

Estimate estimate_mean(const std::function<double(RngStream&)>& sampler,
                       std::uint64_t n, std::uint64_t seed, unsigned workers) {
    if (n < 2) throw TooFewSamples("estimate_mean needs n >= 2");
    std::vector<double> draws(n);
    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            RngStream stream(seed, i);
            draws[i] = sampler(stream);
        }
    };
    if (workers <= 1) {
        fill(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(fill, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    const double sum = pairwise_sum(draws);
    const double mean = sum / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double d = draws[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

double kolmogorov_p(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 25 || b.size() < 25)
        throw TooFewSamples("ks_two_sample needs >= 25 points per sample");
    std::vector<double> xs(a.begin(), a.end());
    std::vector<double> ys(b.begin(), b.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double na = static_cast<double>(xs.size());
    const double nb = static_cast<double>(ys.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        const double x = std::min(xs[i], ys[j]);
        while (i < xs.size() && xs[i] <= x) ++i;
        while (j < ys.size() && ys[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    const double lambda = (ne + 0.12 + 0.11 / ne) * d;
    return {d, kolmogorov_p(lambda)};
}

KsResult ks_one_sample(std::span<const double> a,
                       const std::function<double(double)>& cdf) {
    if (a.size() < 25) throw TooFewSamples("ks_one_sample needs >= 25 points");
    std::vector<double> xs(a.begin(), a.end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    const double sn = std::sqrt(n);
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    return {d, kolmogorov_p(lambda)};
}

DispersionResult poisson_dispersion(std::span<const std::uint64_t> counts) {
    if (counts.size() < 1000)
        throw TooFewSamples("poisson_dispersion needs >= 1000 counts");
    const double n = static_cast<double>(counts.size());
    double sum = 0.0;
    for (auto c : counts) sum += static_cast<double>(c);
    const double mean = sum / n;
    if (mean <= 0.0) throw ZeroMean();
    double ss = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - mean;
        ss += d * d;
    }
    const double var = ss / (n - 1.0);
    const double index = var / mean;
    // (n-1) * index is approximately chi^2 with n-1 degrees of freedom.
    const double z = (index - 1.0) * std::sqrt((n - 1.0) / 2.0);
    return {index, z};
}

CorrelationResult independence_corr(std::span<const double> xs,
                                    std::span<const double> ys) {
    if (xs.size() != ys.size()) throw MismatchedLengths();
    if (xs.size() < 1000) throw TooFewSamples("independence_corr needs >= 1000 pairs");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) throw DegenerateMarginal();
    const double r = sxy / std::sqrt(sxx * syy);
    const double z = 0.5 * std::log((1.0 + r) / (1.0 - r)) * std::sqrt(n - 3.0);
    return {r, z};
}

std::string report_json(const std::string& test, double statistic, double p,
                        std::uint64_t n, std::uint64_t seed, bool pass) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"test\":\"%s\",\"statistic\":%.10g,\"p\":%.10g,\"n\":%llu,"
                  "\"seed\":%llu,\"verdict\":\"%s\"}",
                  test.c_str(), statistic, p,
                  static_cast<unsigned long long>(n),
                  static_cast<unsigned long long>(seed), pass ? "pass" : "fail");
    return std::string(buf);
}

}  // namespace levysb
