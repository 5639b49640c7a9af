#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "levysb/models.hpp"
#include "levysb/rng.hpp"

namespace levysb {

/// Settings for the quadrature-based identity checks. All time integrals
/// over (0, inf) run through the substitution t = e^y on y in [-60, 60],
/// split at y = 0. Inner x-integrals are analytic for Brownian models and
/// Monte Carlo (antithetic, common random numbers) otherwise.
struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    bool log_time_substitution = true;
    std::uint64_t mc_inner_samples = 10000;
};

/// E[argmax time on [0,t]] = int_0^t P(X_s > 0) ds.
double spitzer_time(const LevyModel& model, double t, const QuadratureSpec& q = {},
                    RngStream rng = RngStream(0x51e2a));

/// E[sup on [0,t]] = int_0^t E[max(X_s, 0)] / s ds.
double spitzer_sup(const LevyModel& model, double t, const QuadratureSpec& q = {},
                   RngStream rng = RngStream(0x51e2b));

/// E exp(-u sup X at Exp(theta) horizon), u >= 0, in (0, 1].
ValueWithError laplace_sup_exp_horizon(const LevyModel& model, double theta,
                                       double u, const QuadratureSpec& q = {},
                                       RngStream rng = RngStream(0x1a91ace));

/// E exp(u inf X at Exp(theta) horizon), u >= 0 (mirror over x < 0).
ValueWithError laplace_inf_exp_horizon(const LevyModel& model, double theta,
                                       double u, const QuadratureSpec& q = {},
                                       RngStream rng = RngStream(0x1a91acf));

/// Wiener-Hopf factors at an Exp(theta) horizon.
/// psi_plus = E exp(u argmax + v sup); psi_minus follows the sign
/// convention of the minus factor: E exp(u (T - argmax) - v (X_T - sup)).
struct WhFactors {
    std::complex<double> psi_plus;
    std::complex<double> psi_minus;
    double theta = 0.0;
    std::complex<double> u;
    std::complex<double> v;
    double uncertainty = 0.0;
};

WhFactors wh_factors(const LevyModel& model, double theta, std::complex<double> u,
                     std::complex<double> v, const QuadratureSpec& q = {},
                     RngStream rng = RngStream(0x3214));

/// | theta/(theta - u - Psi(v)) - Psi+ Psi- | for purely imaginary u, v.
double wh_product_check(const LevyModel& model, double theta,
                        std::complex<double> u, std::complex<double> v,
                        const QuadratureSpec& q = {},
                        RngStream rng = RngStream(0x3215));

struct SupInfinityReport {
    double value = 0.0;            // E exp(-u sup_infinity); 0 when I+ diverges
    TailClass classification = TailClass::Oscillates;
    double i_plus_partial = 0.0;   // int_1^T t^-1 P(X_t > 0) dt evidence
    double i_minus_partial = 0.0;
    double partial_horizon = 0.0;
};

/// Infinite-horizon supremum transform plus the (a)/(b)/(c) classification
/// from the model's certified tail behaviour.
SupInfinityReport laplace_sup_infinite_horizon(const LevyModel& model, double u,
                                               const QuadratureSpec& q = {},
                                               RngStream rng = RngStream(0x10f));

struct RogozinReport {
    std::vector<std::pair<double, double>> partial_integrals;  // (eps, value)
    std::optional<bool> regular;  // analytic verdict when the model has one
};

/// Small-time regularity evidence: partial integrals int_eps^1 t^-1 rho(t) dt
/// for each requested eps, plus the model's analytic verdict.
RogozinReport rogozin_regularity(const LevyModel& model,
                                 std::vector<double> epsilons,
                                 const QuadratureSpec& q = {},
                                 RngStream rng = RngStream(0x409));

/// Laplace transform of the vertex time sigma_s:
/// exp(int_0^inf (e^{-ut} - 1) e^{-theta t} P(X_t <= s t) t^-1 dt).
/// theta = 0 requires s at least 1e-3 below the certified drift limit.
double vertex_sigma_laplace(const LevyModel& model, double theta, double s,
                            double u, const QuadratureSpec& q = {},
                            RngStream rng = RngStream(0x5161a));

}  // namespace levysb
