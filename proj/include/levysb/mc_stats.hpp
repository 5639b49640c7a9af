#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "levysb/rng.hpp"

namespace levysb {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

/// Mean and standard error of n draws of sampler(stream), where draw i uses
/// substream i of (seed). The result is bit-identical for fixed (seed, n)
/// regardless of worker count: draws are indexed and reduced pairwise in a
/// fixed tree order.
Estimate estimate_mean(const std::function<double(RngStream&)>& sampler,
                       std::uint64_t n, std::uint64_t seed, unsigned workers = 1);

/// Pairwise (tree) summation, deterministic for a given length.
double pairwise_sum(std::span<const double> xs);

/// Asymptotic Kolmogorov p-value for the one-sided statistic already scaled
/// by the effective sample size (Stephens' correction applied by callers).
double kolmogorov_p(double lambda);

struct KsResult {
    double statistic = 0.0;
    double p_approx = 1.0;
};

/// Two-sample Kolmogorov-Smirnov; both samples need >= 25 points.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// One-sample Kolmogorov-Smirnov against a reference CDF.
KsResult ks_one_sample(std::span<const double> a,
                       const std::function<double(double)>& cdf);

struct DispersionResult {
    double index = 0.0;  // variance / mean
    double z = 0.0;      // normal score under the Poisson null
};

/// Poisson dispersion test on >= 1000 counts.
DispersionResult poisson_dispersion(std::span<const std::uint64_t> counts);

struct CorrelationResult {
    double corr = 0.0;
    double z = 0.0;  // Fisher z-score
};

/// Pearson correlation with Fisher z, >= 1000 pairs.
CorrelationResult independence_corr(std::span<const double> xs,
                                    std::span<const double> ys);

/// JSON report object {test, statistic, p, n, seed, verdict}.
std::string report_json(const std::string& test, double statistic, double p,
                        std::uint64_t n, std::uint64_t seed, bool pass);

}  // namespace levysb
