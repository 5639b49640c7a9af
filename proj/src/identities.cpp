#include "levysb/identities.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "levysb/errors.hpp"
#include "levysb/faddeeva.hpp"
#include "levysb/quadrature.hpp"

namespace levysb {

namespace {

constexpr double kLogLo = -60.0;
constexpr double kLogHi = 60.0;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

using Complex = std::complex<double>;

/// A complex value stored as val * exp(logscale) so that half-plane
/// transforms with huge exponents never overflow before the e^{-theta t}
/// damping is applied.
struct Scaled {
    Complex val{0.0, 0.0};
    double logscale = 0.0;
};

/// E[e^{wX} 1{X>0}] for X ~ N(m, s^2): reduce to the Faddeeva function via
/// erfcx so the result carries the exact exponent -m^2/(2 s^2) (upper
/// half-plane) or w m + w^2 s^2 / 2 (reflected branch).
Scaled gaussian_half_mgf_pos(double m, double s, Complex w) {
    if (s == 0.0) {
        if (m > 0.0) return {std::exp(Complex(0.0, w.imag() * m)), w.real() * m};
        return {Complex(0.0, 0.0), 0.0};
    }
    const Complex zeta = -(m / s + w * s) / kSqrt2;
    const Complex z(-zeta.imag(), zeta.real());  // i * zeta
    const double e2 = -m * m / (2.0 * s * s);
    if (z.imag() >= 0.0) return {0.5 * faddeeva_w(z), e2};
    const Complex e1 = w * m + 0.5 * w * w * (s * s);
    const double logscale = std::max(e1.real(), e2);
    const Complex val = std::exp(e1 - logscale) -
                        0.5 * std::exp(e2 - logscale) * faddeeva_w(-z);
    return {val, logscale};
}

/// Two complex accumulators integrated in one quadrature pass.
struct ComplexPair {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};

    ComplexPair& operator+=(const ComplexPair& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    ComplexPair& operator*=(double w) {
        a *= w;
        b *= w;
        return *this;
    }
    friend ComplexPair operator+(ComplexPair x, const ComplexPair& y) {
        return x += y;
    }
    friend ComplexPair operator-(ComplexPair x, const ComplexPair& y) {
        x.a -= y.a;
        x.b -= y.b;
        return x;
    }
    friend ComplexPair operator*(double w, ComplexPair x) { return x *= w; }
};

inline double abs(const ComplexPair& p) {
    return std::max(std::abs(p.a), std::abs(p.b));
}

/// Coupled marginal draws with common random numbers across t and
/// antithetic pairing (draw 2j+1 mirrors the uniforms of draw 2j).
class MarginalMcCache {
public:
    MarginalMcCache(const LevyModel& model, std::uint64_t n, RngStream rng)
        : model_(model) {
        n_ = std::max<std::uint64_t>(n, 2);
        if (n_ % 2 == 1) ++n_;
        if (const auto* bm = std::get_if<BrownianMotion>(&model.variant())) {
            bm_ = *bm;
            normals_.reserve(n_);
            for (std::uint64_t i = 0; i < n_; i += 2) {
                RngStream sub = rng.substream(i / 2);
                const double z = sub.normal();
                normals_.push_back(z);
                normals_.push_back(-z);
            }
        } else if (const auto* st = std::get_if<Stable>(&model.variant())) {
            stable_ = *st;
            stable_draws_.reserve(n_);
            for (std::uint64_t i = 0; i < n_; i += 2) {
                RngStream plain = rng.substream(i / 2);
                RngStream mirror = rng.substream(i / 2);
                mirror.set_antithetic(true);
                stable_draws_.push_back(model_detail::cms_standard_stable(
                    st->alpha, st->beta, plain));
                stable_draws_.push_back(model_detail::cms_standard_stable(
                    st->alpha, st->beta, mirror));
            }
        } else {
            cp_ = std::get<CompoundPoissonDrift>(model.variant());
            cp_skel_.reserve(n_);
            for (std::uint64_t i = 0; i < n_; ++i) {
                RngStream sub = rng.substream(i / 2);
                if (i % 2 == 1) sub.set_antithetic(true);
                CpSkeleton sk;
                sk.count_u = sub.uniform();
                sk.jump_rng = sub.substream((i / 2) * 2 + 1000000007ull);
                if (i % 2 == 1) sk.jump_rng.set_antithetic(true);
                cp_skel_.push_back(std::move(sk));
            }
        }
    }

    std::uint64_t size() const { return n_; }

    double value(std::uint64_t i, double t) const {
        if (!normals_.empty())
            return bm_.mu * t + bm_.sigma * std::sqrt(t) * normals_[i];
        if (!stable_draws_.empty())
            return model_detail::stable_increment_from_standard(stable_, t,
                                                                stable_draws_[i]);
        const CpSkeleton& sk = cp_skel_[i];
        const double mean = cp_.lambda * t;
        if (mean > 690.0)
            throw UnsupportedModel(
                "inner Monte Carlo needs lambda*t within exact-inversion range");
        std::uint64_t count = 0;
        double pmf = std::exp(-mean);
        double cum = pmf;
        while (cum < sk.count_u) {
            ++count;
            pmf *= mean / static_cast<double>(count);
            cum += pmf;
            if (count > 100000) break;
        }
        while (sk.jump_prefix.size() < count) {
            const double next =
                model_detail::sample_jump(cp_.jumps, sk.jump_rng);
            sk.jump_prefix.push_back(
                (sk.jump_prefix.empty() ? 0.0 : sk.jump_prefix.back()) + next);
        }
        const double jumps = count == 0 ? 0.0 : sk.jump_prefix[count - 1];
        return jumps + cp_.drift * t;
    }

private:
    struct CpSkeleton {
        double count_u = 0.0;
        mutable RngStream jump_rng;
        mutable std::vector<double> jump_prefix;
    };

    LevyModel model_;
    std::uint64_t n_ = 0;
    BrownianMotion bm_{};
    Stable stable_{};
    CompoundPoissonDrift cp_{};
    std::vector<double> normals_;
    std::vector<double> stable_draws_;
    std::vector<CpSkeleton> cp_skel_;
};

/// Evaluates the marginal functionals entering every identity integrand:
/// analytic error-function algebra for Brownian models, cached Monte Carlo
/// draws for the rest.
class MarginalEvaluator {
public:
    MarginalEvaluator(const LevyModel& model, const QuadratureSpec& q,
                      RngStream rng)
        : model_(model), spec_(q), rng_(rng) {
        analytic_ = model.as_brownian() != nullptr;
        rho_analytic_ = analytic_ || model.prob_positive_is_analytic();
        if (!analytic_) {
            if (q.mc_inner_samples == 0)
                throw UnsupportedModel(
                    "model without analytic marginals needs mc_inner_samples > 0");
            if (q.mc_inner_samples < 1000)
                throw TooFewSamples("mc_inner_samples must be >= 1000");
        }
    }

    bool analytic() const { return analytic_; }
    bool rho_analytic() const { return rho_analytic_; }

    double rho(double t) const {
        if (rho_analytic_) return model_.prob_positive(t).value;
        const MarginalMcCache& c = cache();
        const auto n = c.size();
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if (c.value(i, t) > 0.0) ++hits;
        return static_cast<double>(hits) / static_cast<double>(n);
    }

    double mean_pos(double t) const {
        if (analytic_) return model_.mean_positive_part(t).value;
        const MarginalMcCache& c = cache();
        const auto n = c.size();
        double acc = 0.0;
        for (std::uint64_t i = 0; i < n; ++i)
            acc += std::max(c.value(i, t), 0.0);
        return acc / static_cast<double>(n);
    }

    double below_line(double t, double slope) const {
        if (const auto* bm = model_.as_brownian()) {
            if (bm->sigma == 0.0) return bm->mu <= slope ? 1.0 : 0.0;
            return normal_cdf((slope - bm->mu) * std::sqrt(t) / bm->sigma);
        }
        const MarginalMcCache& c = cache();
        const auto n = c.size();
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if (c.value(i, t) <= slope * t) ++hits;
        return static_cast<double>(hits) / static_cast<double>(n);
    }

    /// E[(e^{u t + v X_t} - 1) ; X_t in A] with A = (0,inf) or (-inf,0],
    /// already multiplied by e^{-theta t}. Scaled exponents keep the huge
    /// intermediate terms finite.
    Complex campbell_term(double t, Complex u, Complex v, bool plus_side,
                          double theta) const {
        if (analytic_) {
            const auto* bm = model_.as_brownian();
            const double m = bm->mu * t;
            const double s = bm->sigma * std::sqrt(t);
            Scaled half = plus_side ? gaussian_half_mgf_pos(m, s, v)
                                    : gaussian_half_mgf_pos(-m, s, -v);
            const double mass =
                plus_side ? (s == 0.0 ? (m > 0.0 ? 1.0 : 0.0) : normal_cdf(m / s))
                          : (s == 0.0 ? (m > 0.0 ? 0.0 : 1.0) : normal_cdf(-m / s));
            const Complex expo = half.logscale + u * t - theta * t;
            return half.val * std::exp(expo) - mass * std::exp(-theta * t);
        }
        const MarginalMcCache& c = cache();
        const auto n = c.size();
        Complex acc(0.0, 0.0);
        std::uint64_t mass_count = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const double x = c.value(i, t);
            const bool in_a = plus_side ? (x > 0.0) : (x <= 0.0);
            if (!in_a) continue;
            ++mass_count;
            acc += std::exp(v * x);
        }
        const Complex mean_exp = acc / static_cast<double>(n);
        const double mass =
            static_cast<double>(mass_count) / static_cast<double>(n);
        return (std::exp(u * t) * mean_exp - mass) * std::exp(-theta * t);
    }

    /// Both half-plane Campbell terms from one pass over the cached draws.
    ComplexPair campbell_term_pair(double t, Complex u, Complex v,
                                   double theta) const {
        if (analytic_) {
            return {campbell_term(t, u, v, true, theta),
                    campbell_term(t, u, v, false, theta)};
        }
        const MarginalMcCache& c = cache();
        const auto n = c.size();
        Complex acc_plus(0.0, 0.0), acc_minus(0.0, 0.0);
        std::uint64_t n_plus = 0, n_zero = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const double x = c.value(i, t);
            if (x > 0.0) {
                ++n_plus;
                acc_plus += std::exp(v * x);
            } else if (x == 0.0) {
                ++n_zero;  // atom: e^{v*0} = 1, no exp needed
            } else {
                acc_minus += std::exp(v * x);
            }
        }
        const double dn = static_cast<double>(n);
        const Complex damp = std::exp(u * t) * std::exp(-theta * t);
        const double decay = std::exp(-theta * t);
        ComplexPair out;
        out.a = damp * (acc_plus / dn) -
                decay * (static_cast<double>(n_plus) / dn);
        acc_minus += static_cast<double>(n_zero);
        out.b = damp * (acc_minus / dn) -
                decay * (static_cast<double>(n - n_plus) / dn);
        return out;
    }

private:
    const MarginalMcCache& cache() const {
        if (!cache_)
            cache_ = std::make_unique<MarginalMcCache>(model_,
                                                       spec_.mc_inner_samples, rng_);
        return *cache_;
    }

    LevyModel model_;
    QuadratureSpec spec_;
    RngStream rng_;
    bool analytic_ = false;
    bool rho_analytic_ = false;
    mutable std::unique_ptr<MarginalMcCache> cache_;
};

/// exp-side cutoff: beyond this, e^{-theta t}-damped integrands are zero to
/// double precision (Monte Carlo paths use the tighter bound).
double time_cutoff(double theta, bool analytic) {
    if (theta <= 0.0) return std::exp(kLogHi);
    return (analytic ? 745.0 : 60.0) / theta;
}

/// Campbell exponent over the half-plane A:
/// int_0^inf E[(e^{ut+vx}-1); X_t in A] e^{-theta t} t^-1 dt, via t = e^y.
Complex campbell_exponent(const MarginalEvaluator& eval, double theta, Complex u,
                          Complex v, bool plus_side, const QuadratureSpec& q) {
    const double cutoff = time_cutoff(theta, eval.analytic());
    auto integrand = [&](double y) -> Complex {
        const double t = std::exp(y);
        if (t > cutoff) return Complex(0.0, 0.0);
        return eval.campbell_term(t, u, v, plus_side, theta);
    };
    if (eval.analytic()) {
        auto lo = integrate_adaptive(integrand, kLogLo, 0.0, q.rel_tol, q.abs_tol);
        auto hi = integrate_adaptive(integrand, 0.0, kLogHi, q.rel_tol, q.abs_tol);
        if (!lo.converged || !hi.converged)
            throw QuadratureFailure("campbell exponent did not converge");
        return lo.value + hi.value;
    }
    auto lo = integrate_panels(integrand, kLogLo, 0.0, 96);
    auto hi = integrate_panels(integrand, 0.0, kLogHi, 96);
    return lo.value + hi.value;
}

/// Both Campbell exponents (A+ and A-) at the same (u, v): one quadrature
/// pass over the fused integrand when the inner integrals are Monte Carlo.
std::pair<Complex, Complex> campbell_exponent_pair(const MarginalEvaluator& eval,
                                                   double theta, Complex u,
                                                   Complex v,
                                                   const QuadratureSpec& q) {
    if (eval.analytic()) {
        return {campbell_exponent(eval, theta, u, v, true, q),
                campbell_exponent(eval, theta, u, v, false, q)};
    }
    const double cutoff = time_cutoff(theta, false);
    auto integrand = [&](double y) -> ComplexPair {
        const double t = std::exp(y);
        if (t > cutoff) return {};
        return eval.campbell_term_pair(t, u, v, theta);
    };
    auto lo = integrate_panels(integrand, kLogLo, 0.0, 96);
    auto hi = integrate_panels(integrand, 0.0, kLogHi, 96);
    const ComplexPair total = lo.value + hi.value;
    return {total.a, total.b};
}

/// Runs an MC-backed computation on two independent caches and reports the
/// spread as the uncertainty; analytic models run once with zero spread.
template <typename Fn>
ValueWithError with_uncertainty(const LevyModel& model, const QuadratureSpec& q,
                                RngStream rng, Fn&& fn) {
    MarginalEvaluator a(model, q, rng.substream(1));
    if (a.analytic()) return {fn(a), 0.0, 0};
    MarginalEvaluator b(model, q, rng.substream(2));
    const double va = fn(a);
    const double vb = fn(b);
    return {0.5 * (va + vb), 0.5 * std::abs(va - vb), 2 * q.mc_inner_samples};
}

}  // namespace

double spitzer_time(const LevyModel& model, double t, const QuadratureSpec& q,
                    RngStream rng) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidT();
    MarginalEvaluator eval(model, q, rng);
    auto integrand = [&](double s) { return s <= 0.0 ? eval.rho(1e-300) : eval.rho(s); };
    if (eval.rho_analytic()) {
        auto r = integrate_adaptive(integrand, 0.0, t, q.rel_tol, q.abs_tol);
        if (!r.converged) throw QuadratureFailure("spitzer_time quadrature");
        return r.value;
    }
    return integrate_panels(integrand, 0.0, t, 240).value;
}

double spitzer_sup(const LevyModel& model, double t, const QuadratureSpec& q,
                   RngStream rng) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidT();
    if (const auto* st = std::get_if<Stable>(&model.variant()))
        if (st->alpha <= 1.0) throw HeavyTail("no first moment");
    MarginalEvaluator eval(model, q, rng);
    // s = e^y turns E[X_s^+]/s ds into E[X_{e^y}^+] dy; the sqrt-type
    // singularity at 0 becomes exponential decay on the left.
    auto integrand = [&](double y) { return eval.mean_pos(std::exp(y)); };
    const double hi = std::log(t);
    if (eval.analytic()) {
        auto r = integrate_adaptive(integrand, kLogLo, hi, q.rel_tol, q.abs_tol);
        if (!r.converged) throw QuadratureFailure("spitzer_sup quadrature");
        return r.value;
    }
    return integrate_panels(integrand, kLogLo, hi, 240).value;
}

ValueWithError laplace_sup_exp_horizon(const LevyModel& model, double theta,
                                       double u, const QuadratureSpec& q,
                                       RngStream rng) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidRate();
    if (!(u >= 0.0)) throw UnsupportedArgument("u must be >= 0");
    if (u == 0.0) return {1.0, 0.0, 0};
    return with_uncertainty(model, q, rng, [&](const MarginalEvaluator& eval) {
        const Complex expo =
            campbell_exponent(eval, theta, Complex(0.0, 0.0), Complex(-u, 0.0),
                              /*plus_side=*/true, q);
        return std::exp(expo.real());
    });
}

ValueWithError laplace_inf_exp_horizon(const LevyModel& model, double theta,
                                       double u, const QuadratureSpec& q,
                                       RngStream rng) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidRate();
    if (!(u >= 0.0)) throw UnsupportedArgument("u must be >= 0");
    if (u == 0.0) return {1.0, 0.0, 0};
    return with_uncertainty(model, q, rng, [&](const MarginalEvaluator& eval) {
        const Complex expo =
            campbell_exponent(eval, theta, Complex(0.0, 0.0), Complex(u, 0.0),
                              /*plus_side=*/false, q);
        return std::exp(expo.real());
    });
}

WhFactors wh_factors(const LevyModel& model, double theta, Complex u, Complex v,
                     const QuadratureSpec& q, RngStream rng) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidRate();
    if (u.real() > 0.0 || v.real() > 0.0)
        throw UnsupportedArgument("factors need Re u <= 0 and Re v <= 0");
    MarginalEvaluator a(model, q, rng.substream(1));
    WhFactors out;
    out.theta = theta;
    out.u = u;
    out.v = v;
    out.psi_plus = std::exp(campbell_exponent(a, theta, u, v, true, q));
    out.psi_minus = std::exp(campbell_exponent(a, theta, u, -v, false, q));
    if (!a.analytic()) {
        MarginalEvaluator b(model, q, rng.substream(2));
        const Complex plus_b = std::exp(campbell_exponent(b, theta, u, v, true, q));
        const Complex minus_b =
            std::exp(campbell_exponent(b, theta, u, -v, false, q));
        out.uncertainty = 0.5 * (std::abs(out.psi_plus - plus_b) +
                                 std::abs(out.psi_minus - minus_b));
        out.psi_plus = 0.5 * (out.psi_plus + plus_b);
        out.psi_minus = 0.5 * (out.psi_minus + minus_b);
    }
    return out;
}

double wh_product_check(const LevyModel& model, double theta, Complex u,
                        Complex v, const QuadratureSpec& q, RngStream rng) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidRate();
    if (u.real() != 0.0 || v.real() != 0.0)
        throw UnsupportedArgument("product check needs purely imaginary u, v");
    const Complex lhs = theta / (theta - u - model.char_exponent(v));
    auto product = [&](const MarginalEvaluator& eval) {
        const auto [plus, minus] = campbell_exponent_pair(eval, theta, u, v, q);
        return std::exp(plus) * std::exp(minus);
    };
    MarginalEvaluator a(model, q, rng.substream(1));
    Complex rhs = product(a);
    if (!a.analytic()) {
        MarginalEvaluator b(model, q, rng.substream(2));
        rhs = 0.5 * (rhs + product(b));
    }
    return std::abs(lhs - rhs);
}

SupInfinityReport laplace_sup_infinite_horizon(const LevyModel& model, double u,
                                               const QuadratureSpec& q,
                                               RngStream rng) {
    if (!(u > 0.0)) throw UnsupportedArgument("u must be > 0");
    const auto cls = model.tail_classification();
    if (!cls) throw UnknownTail("model cannot certify I+/I- convergence");
    SupInfinityReport report;
    report.classification = *cls;
    report.partial_horizon = 1e4;
    MarginalEvaluator eval(model, q, rng);
    auto rho_over_t = [&](double y) { return eval.rho(std::exp(y)); };
    auto rho_neg_over_t = [&](double y) {
        const double t = std::exp(y);
        // P(X_t < 0) = 1 - rho(t) - P(X_t = 0); the atom matters only for
        // driftless compound Poisson, where the complement is exact enough
        // for evidence purposes.
        return 1.0 - eval.rho(t);
    };
    const double yhi = std::log(report.partial_horizon);
    if (eval.rho_analytic()) {
        report.i_plus_partial =
            integrate_adaptive(rho_over_t, 0.0, yhi, q.rel_tol, q.abs_tol).value;
        report.i_minus_partial =
            integrate_adaptive(rho_neg_over_t, 0.0, yhi, q.rel_tol, q.abs_tol).value;
    } else {
        report.i_plus_partial = integrate_panels(rho_over_t, 0.0, yhi, 160).value;
        report.i_minus_partial = integrate_panels(rho_neg_over_t, 0.0, yhi, 160).value;
    }
    if (*cls != TailClass::SupremumFinite) {
        report.value = 0.0;  // sup_infinity = +inf a.s., transform vanishes
        return report;
    }
    if (!eval.analytic())
        throw UnsupportedModel(
            "theta = 0 transform evaluation is implemented for Brownian models");
    const Complex expo = campbell_exponent(eval, 0.0, Complex(0.0, 0.0),
                                           Complex(-u, 0.0), true, q);
    report.value = std::exp(expo.real());
    return report;
}

RogozinReport rogozin_regularity(const LevyModel& model,
                                 std::vector<double> epsilons,
                                 const QuadratureSpec& q, RngStream rng) {
    RogozinReport report;
    report.regular = model.regularity_verdict();
    MarginalEvaluator eval(model, q, rng);
    auto integrand = [&](double y) { return eval.rho(std::exp(y)); };
    for (double eps : epsilons) {
        if (!(eps > 0.0 && eps < 1.0))
            throw UnsupportedArgument("epsilon must lie in (0,1)");
        const double ylo = std::log(eps);
        double value;
        if (eval.rho_analytic()) {
            auto r = integrate_adaptive(integrand, ylo, 0.0, q.rel_tol, q.abs_tol);
            if (!r.converged) throw QuadratureFailure("rogozin quadrature");
            value = r.value;
        } else {
            value = integrate_panels(integrand, ylo, 0.0, 240).value;
        }
        report.partial_integrals.emplace_back(eps, value);
    }
    return report;
}

double vertex_sigma_laplace(const LevyModel& model, double theta, double s,
                            double u, const QuadratureSpec& q, RngStream rng) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw InvalidRate();
    if (!(u >= 0.0)) throw UnsupportedArgument("u must be >= 0");
    if (theta == 0.0) {
        const auto l = model.certified_drift_limit();
        if (!l) throw UnknownTail("theta = 0 needs a certified drift limit");
        if (!(s < *l - 1e-3))
            throw SlopeAboveDrift("slope must sit clear below the drift limit");
        if (model.as_brownian() == nullptr)
            throw UnsupportedModel(
                "theta = 0 vertex transform is implemented for Brownian models");
    }
    if (u == 0.0) return 1.0;
    MarginalEvaluator eval(model, q, rng);
    const double cutoff = time_cutoff(theta, eval.analytic());
    auto integrand = [&](double y) {
        const double t = std::exp(y);
        if (t > cutoff) return 0.0;
        const double mass = eval.below_line(t, s);
        if (mass == 0.0) return 0.0;
        return std::expm1(-u * t) * std::exp(-theta * t) * mass;
    };
    if (eval.analytic()) {
        auto lo = integrate_adaptive(integrand, kLogLo, 0.0, q.rel_tol, q.abs_tol);
        auto hi = integrate_adaptive(integrand, 0.0, kLogHi, q.rel_tol, q.abs_tol);
        if (!lo.converged || !hi.converged)
            throw QuadratureFailure("vertex transform quadrature");
        return std::exp(lo.value + hi.value);
    }
    auto lo = integrate_panels(integrand, kLogLo, 0.0, 240);
    auto hi = integrate_panels(integrand, 0.0, kLogHi, 240);
    return std::exp(lo.value + hi.value);
}

}  // namespace levysb
