#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "levysb/rng.hpp"

namespace levysb {

/// Numeric result with its Monte Carlo uncertainty. Analytic values carry
/// std_error = 0 and n = 0.
struct ValueWithError {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

struct BrownianMotion {
    double mu = 0.0;
    double sigma = 1.0;  // >= 0; sigma == 0 is a pure drift
};

struct NormalJump {
    double mean = 0.0;
    double sd = 1.0;
};

struct ExponentialJump {
    double rate = 1.0;
    int sign = +1;  // jump = sign * Exp(rate)
};

struct TwoPointJump {
    double p = 0.5;  // P(jump == up)
    double up = 1.0;
    double down = -1.0;
};

using JumpLaw = std::variant<NormalJump, ExponentialJump, TwoPointJump>;

struct CompoundPoissonDrift {
    double lambda = 1.0;
    JumpLaw jumps = ExponentialJump{};
    double drift = 0.0;
};

/// Strictly stable noise plus drift, sampled by Chambers-Mallows-Stuck.
/// Parameters are interpreted in the parametrisation that makes increments
/// exactly self-similar (S(alpha,beta,c,delta;1)): X_dt has scale
/// c*dt^(1/alpha) and location drift*dt. When self_similar is false the
/// drift is read in the Nolan-0 location convention and translated once at
/// construction. For alpha == 1 the scaling picks up the usual log
/// correction: X_dt = c*dt*S + drift*dt - (2/pi)*beta*c*dt*log(c*dt).
struct Stable {
    double alpha = 2.0;   // (0, 2]
    double beta = 0.0;    // [-1, 1]
    double scale = 1.0;   // > 0
    double drift = 0.0;
    bool self_similar = true;
};

/// Rogozin long-horizon classification.
enum class TailClass {
    SupremumFinite,   // I+ finite: sup finite, X_t -> -inf
    InfimumFinite,    // I- finite: inf finite, X_t -> +inf
    Oscillates,       // both infinite
};

/// A process descriptor: exact increment sampling plus the analytic marginal
/// functionals the identity checks consume. Immutable after construction.
class LevyModel {
public:
    using Variant = std::variant<BrownianMotion, CompoundPoissonDrift, Stable>;

    explicit LevyModel(Variant v);

    static LevyModel brownian(double mu, double sigma) {
        return LevyModel(BrownianMotion{mu, sigma});
    }
    static LevyModel compound_poisson(double lambda, JumpLaw jumps, double drift) {
        return LevyModel(CompoundPoissonDrift{lambda, std::move(jumps), drift});
    }
    static LevyModel stable(double alpha, double beta, double scale, double drift,
                            bool self_similar = true) {
        return LevyModel(Stable{alpha, beta, scale, drift, self_similar});
    }

    const Variant& variant() const { return variant_; }
    const BrownianMotion* as_brownian() const {
        return std::get_if<BrownianMotion>(&variant_);
    }

    /// One exact draw from the law of X_dt.
    double sample_increment(double dt, RngStream& rng) const;

    /// rho(t) = P(X_t > 0); analytic where available, else Monte Carlo with
    /// the reported standard error.
    ValueWithError prob_positive(double t, std::uint64_t mc_samples = 100000,
                                 RngStream rng = RngStream(0x9e3779b97f4a7c15ull)) const;

    /// E max(X_t, 0); throws HeavyTail when the mean does not exist.
    ValueWithError mean_positive_part(double t, std::uint64_t mc_samples = 100000,
                                      RngStream rng = RngStream(0xbf58476d1ce4e5b9ull)) const;

    /// Characteristic exponent: E exp(v X_1) = exp(Psi(v)), Re v = 0.
    std::complex<double> char_exponent(std::complex<double> v) const;

    /// The process -X.
    LevyModel reflected() const;

    /// l = lim X_t / t when the model can certify it.
    std::optional<double> certified_drift_limit() const;

    /// Analytic regularity verdict for (0, inf) at the origin.
    std::optional<bool> regularity_verdict() const;

    /// Analytic classification of (I+, I-).
    std::optional<TailClass> tail_classification() const;

    bool prob_positive_is_analytic() const;

    std::string to_json() const;
    static LevyModel from_json(const std::string& text);

private:
    Variant variant_;
};

namespace model_detail {

/// CMS draw of the standard strictly stable law S(alpha, beta, 1, 0; 1).
double cms_standard_stable(double alpha, double beta, RngStream& rng);

/// Drift translated to the self-similar parametrisation.
double stable_self_similar_drift(const Stable& m);

/// X_dt given a standard stable draw (shared by sampler and caches).
double stable_increment_from_standard(const Stable& m, double dt, double s);

double jump_mean(const JumpLaw& law);
double sample_jump(const JumpLaw& law, RngStream& rng);

}  // namespace model_detail

}  // namespace levysb
