#include "levysb/models.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "levysb/errors.hpp"

namespace levysb {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

}  // namespace

namespace model_detail {

double jump_mean(const JumpLaw& law) {
    return std::visit(
        [](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, NormalJump>) return j.mean;
            if constexpr (std::is_same_v<T, ExponentialJump>) return j.sign / j.rate;
            if constexpr (std::is_same_v<T, TwoPointJump>)
                return j.p * j.up + (1.0 - j.p) * j.down;
        },
        law);
}

double sample_jump(const JumpLaw& law, RngStream& rng) {
    return std::visit(
        [&rng](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, NormalJump>)
                return j.mean + j.sd * rng.normal();
            if constexpr (std::is_same_v<T, ExponentialJump>)
                return j.sign * rng.exponential() / j.rate;
            if constexpr (std::is_same_v<T, TwoPointJump>)
                return rng.uniform() < j.p ? j.up : j.down;
        },
        law);
}

double stable_self_similar_drift(const Stable& m) {
    if (m.self_similar) return m.drift;
    if (m.alpha == 1.0)
        return m.drift - (2.0 / 3.1415926535897932384626433832795) * m.beta * m.scale * std::log(m.scale);
    return m.drift - m.beta * m.scale * std::tan(3.1415926535897932384626433832795 * m.alpha / 2.0);
}

double cms_standard_stable(double alpha, double beta, RngStream& rng) {
    constexpr double kPi = 3.1415926535897932384626433832795;
    const double theta = kPi * (rng.uniform() - 0.5);
    const double w = rng.exponential();
    if (alpha == 1.0) {
        const double h = kPi / 2.0 + beta * theta;
        return (2.0 / kPi) *
               (h * std::tan(theta) -
                beta * std::log((kPi / 2.0) * w * std::cos(theta) / h));
    }
    const double theta0 = std::atan(beta * std::tan(kPi * alpha / 2.0)) / alpha;
    const double a = alpha * (theta + theta0);
    return std::sin(a) / std::pow(std::cos(theta), 1.0 / alpha) *
           std::pow(std::cos(theta - a) / w, (1.0 - alpha) / alpha);
}

double stable_increment_from_standard(const Stable& m, double dt, double s) {
    constexpr double kPi = 3.1415926535897932384626433832795;
    const double b = stable_self_similar_drift(m);
    if (m.alpha == 1.0) {
        const double c = m.scale * dt;
        return c * s + b * dt - (2.0 / kPi) * m.beta * c * std::log(c);
    }
    return m.scale * std::pow(dt, 1.0 / m.alpha) * s + b * dt;
}

}  // namespace model_detail

namespace {

using model_detail::cms_standard_stable;
using model_detail::jump_mean;
using model_detail::sample_jump;
using model_detail::stable_increment_from_standard;

std::complex<double> jump_mgf(const JumpLaw& law, std::complex<double> v) {
    return std::visit(
        [v](const auto& j) -> std::complex<double> {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, NormalJump>)
                return std::exp(j.mean * v + 0.5 * j.sd * j.sd * v * v);
            if constexpr (std::is_same_v<T, ExponentialJump>)
                return j.rate / (j.rate - static_cast<double>(j.sign) * v);
            if constexpr (std::is_same_v<T, TwoPointJump>)
                return j.p * std::exp(v * j.up) + (1.0 - j.p) * std::exp(v * j.down);
        },
        law);
}

void validate(const BrownianMotion& m) {
    if (!(m.sigma >= 0.0) || !std::isfinite(m.sigma) || !std::isfinite(m.mu))
        throw NonFiniteInput("bad Brownian parameters");
    if (m.sigma == 0.0 && m.mu == 0.0)
        throw NonFiniteInput("model is identically zero");
}

void validate(const CompoundPoissonDrift& m) {
    if (!(m.lambda > 0.0) && m.drift == 0.0)
        throw NonFiniteInput("model is identically zero");
    if (!(m.lambda >= 0.0) || !std::isfinite(m.lambda) || !std::isfinite(m.drift))
        throw NonFiniteInput("bad compound Poisson parameters");
    std::visit(
        [](const auto& j) {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, NormalJump>) {
                if (!(j.sd >= 0.0)) throw NonFiniteInput("jump sd < 0");
            }
            if constexpr (std::is_same_v<T, ExponentialJump>) {
                if (!(j.rate > 0.0)) throw NonFiniteInput("jump rate <= 0");
                if (j.sign != 1 && j.sign != -1) throw NonFiniteInput("jump sign");
            }
            if constexpr (std::is_same_v<T, TwoPointJump>) {
                if (!(j.p >= 0.0 && j.p <= 1.0)) throw NonFiniteInput("jump p");
            }
        },
        m.jumps);
}

void validate(const Stable& m) {
    if (!(m.alpha > 0.0 && m.alpha <= 2.0)) throw NonFiniteInput("alpha outside (0,2]");
    if (!(m.beta >= -1.0 && m.beta <= 1.0)) throw NonFiniteInput("beta outside [-1,1]");
    if (!(m.scale > 0.0)) throw NonFiniteInput("scale <= 0");
    if (!std::isfinite(m.drift)) throw NonFiniteInput("drift not finite");
}

inline double stable_lparam_drift(const Stable& m) {
    return model_detail::stable_self_similar_drift(m);
}

}  // namespace

LevyModel::LevyModel(Variant v) : variant_(std::move(v)) {
    std::visit([](const auto& m) { validate(m); }, variant_);
}

double LevyModel::sample_increment(double dt, RngStream& rng) const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidDt();
    return std::visit(
        [dt, &rng](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                const double diffusion =
                    m.sigma > 0.0 ? m.sigma * std::sqrt(dt) * rng.normal() : 0.0;
                return m.mu * dt + diffusion;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                const std::uint64_t count = rng.poisson(m.lambda * dt);
                double sum = m.drift * dt;
                for (std::uint64_t k = 0; k < count; ++k)
                    sum += sample_jump(m.jumps, rng);
                return sum;
            } else {
                const double s = cms_standard_stable(m.alpha, m.beta, rng);
                return stable_increment_from_standard(m, dt, s);
            }
        },
        variant_);
}

bool LevyModel::prob_positive_is_analytic() const {
    return std::visit(
        [](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                return true;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                const auto* e = std::get_if<ExponentialJump>(&m.jumps);
                return e != nullptr && m.drift == 0.0;
            } else {
                if (m.beta == 0.0 && stable_lparam_drift(m) == 0.0) return true;
                return m.alpha == 1.0 && m.beta == 0.0;
            }
        },
        variant_);
}

ValueWithError LevyModel::prob_positive(double t, std::uint64_t mc_samples,
                                        RngStream rng) const {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidT();
    if (const auto* bm = std::get_if<BrownianMotion>(&variant_)) {
        if (bm->sigma == 0.0) return {bm->mu > 0.0 ? 1.0 : 0.0, 0.0, 0};
        return {normal_cdf(bm->mu * std::sqrt(t) / bm->sigma), 0.0, 0};
    }
    if (const auto* cp = std::get_if<CompoundPoissonDrift>(&variant_)) {
        if (const auto* e = std::get_if<ExponentialJump>(&cp->jumps);
            e != nullptr && cp->drift == 0.0) {
            // One-sided jumps: X_t > 0 iff at least one (positive) jump.
            const double p = -std::expm1(-cp->lambda * t);
            return {e->sign > 0 ? p : 0.0, 0.0, 0};
        }
    }
    if (const auto* st = std::get_if<Stable>(&variant_)) {
        const double b = stable_lparam_drift(*st);
        if (st->beta == 0.0 && b == 0.0) return {0.5, 0.0, 0};
        if (st->alpha == 1.0 && st->beta == 0.0)
            return {0.5 + std::atan(b / st->scale) / kPi, 0.0, 0};
    }
    if (mc_samples < 2) throw TooFewSamples("prob_positive fallback needs draws");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < mc_samples; ++i) {
        RngStream sub = rng.substream(i);
        if (sample_increment(t, sub) > 0.0) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(mc_samples);
    const double se = std::sqrt(std::max(p * (1.0 - p), 0.0) /
                                static_cast<double>(mc_samples));
    return {p, se, mc_samples};
}

ValueWithError LevyModel::mean_positive_part(double t, std::uint64_t mc_samples,
                                             RngStream rng) const {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidT();
    if (const auto* st = std::get_if<Stable>(&variant_)) {
        if (st->alpha <= 1.0) throw HeavyTail("stable index <= 1 has no mean");
    }
    if (const auto* bm = std::get_if<BrownianMotion>(&variant_)) {
        if (bm->sigma == 0.0) return {std::max(bm->mu, 0.0) * t, 0.0, 0};
        const double d = bm->mu * std::sqrt(t) / bm->sigma;
        return {bm->sigma * std::sqrt(t) * normal_pdf(d) + bm->mu * t * normal_cdf(d),
                0.0, 0};
    }
    if (mc_samples < 2) throw TooFewSamples("mean_positive_part fallback needs draws");
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < mc_samples; ++i) {
        RngStream sub = rng.substream(i);
        const double x = std::max(sample_increment(t, sub), 0.0);
        sum += x;
        sumsq += x * x;
    }
    const double n = static_cast<double>(mc_samples);
    const double mean = sum / n;
    const double var = std::max(sumsq / n - mean * mean, 0.0);
    return {mean, std::sqrt(var / n), mc_samples};
}

std::complex<double> LevyModel::char_exponent(std::complex<double> v) const {
    if (v.real() != 0.0)
        throw UnsupportedArgument("char_exponent requires Re v = 0");
    const double u = v.imag();
    return std::visit(
        [v, u](const auto& m) -> std::complex<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                return 0.5 * m.sigma * m.sigma * v * v + m.mu * v;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                return m.lambda * (jump_mgf(m.jumps, v) - 1.0) + m.drift * v;
            } else {
                if (u == 0.0) return {0.0, 0.0};
                const double b = stable_lparam_drift(m);
                const double ca = std::pow(m.scale, m.alpha);
                const double au = std::pow(std::abs(u), m.alpha);
                const double sgn = u > 0.0 ? 1.0 : -1.0;
                if (m.alpha == 1.0) {
                    const double mod = m.scale * std::abs(u);
                    const double logterm =
                        mod * m.beta * (2.0 / kPi) * sgn * std::log(std::abs(u));
                    return {-mod, -logterm + b * u};
                }
                const double tanpa = std::tan(kPi * m.alpha / 2.0);
                return {-ca * au, ca * au * m.beta * sgn * tanpa + b * u};
            }
        },
        variant_);
}

LevyModel LevyModel::reflected() const {
    return std::visit(
        [](const auto& m) -> LevyModel {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                return LevyModel(BrownianMotion{-m.mu, m.sigma});
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                JumpLaw flipped = std::visit(
                    [](const auto& j) -> JumpLaw {
                        using J = std::decay_t<decltype(j)>;
                        if constexpr (std::is_same_v<J, NormalJump>)
                            return NormalJump{-j.mean, j.sd};
                        else if constexpr (std::is_same_v<J, ExponentialJump>)
                            return ExponentialJump{j.rate, -j.sign};
                        else
                            return TwoPointJump{1.0 - j.p, -j.down, -j.up};
                    },
                    m.jumps);
                return LevyModel(CompoundPoissonDrift{m.lambda, flipped, -m.drift});
            } else {
                Stable r = m;
                r.beta = -m.beta;
                r.drift = -stable_lparam_drift(m);
                r.self_similar = true;
                return LevyModel(r);
            }
        },
        variant_);
}

std::optional<double> LevyModel::certified_drift_limit() const {
    return std::visit(
        [](const auto& m) -> std::optional<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                return m.mu;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                return m.lambda * jump_mean(m.jumps) + m.drift;
            } else {
                if (m.alpha > 1.0) return stable_lparam_drift(m);
                return std::nullopt;
            }
        },
        variant_);
}

std::optional<bool> LevyModel::regularity_verdict() const {
    return std::visit(
        [](const auto& m) -> std::optional<bool> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                if (m.sigma > 0.0) return true;
                return m.mu > 0.0;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                // P(X_t > 0) <= P(N_t >= 1) = O(t) when the drift is down or
                // absent, so the small-time integral converges.
                return m.drift > 0.0;
            } else {
                const double b = stable_lparam_drift(m);
                if (m.alpha > 1.0) return true;
                if (m.alpha == 1.0) {
                    if (m.beta == 0.0) return true;
                    return std::nullopt;
                }
                if (b > 0.0) return true;
                if (b < 0.0) return false;
                return m.beta > -1.0;
            }
        },
        variant_);
}

std::optional<TailClass> LevyModel::tail_classification() const {
    return std::visit(
        [this](const auto& m) -> std::optional<TailClass> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                if (m.mu < 0.0) return TailClass::SupremumFinite;
                if (m.mu > 0.0) return TailClass::InfimumFinite;
                return TailClass::Oscillates;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                const double mean = m.lambda * jump_mean(m.jumps) + m.drift;
                if (mean < 0.0) return TailClass::SupremumFinite;
                if (mean > 0.0) return TailClass::InfimumFinite;
                return TailClass::Oscillates;
            } else {
                const double b = stable_lparam_drift(m);
                if (m.alpha > 1.0) {
                    if (b < 0.0) return TailClass::SupremumFinite;
                    if (b > 0.0) return TailClass::InfimumFinite;
                    return TailClass::Oscillates;
                }
                if (m.alpha == 1.0) {
                    if (m.beta == 0.0) return TailClass::Oscillates;
                    return std::nullopt;
                }
                // alpha < 1: the stable part dominates any drift at large t.
                if (m.beta == 1.0) return TailClass::InfimumFinite;
                if (m.beta == -1.0) return TailClass::SupremumFinite;
                return TailClass::Oscillates;
            }
        },
        variant_);
}

std::string LevyModel::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    std::visit(
        [&j](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BrownianMotion>) {
                j["type"] = "bm";
                j["mu"] = m.mu;
                j["sigma"] = m.sigma;
            } else if constexpr (std::is_same_v<T, CompoundPoissonDrift>) {
                j["type"] = "cp";
                j["lambda"] = m.lambda;
                j["drift"] = m.drift;
                nlohmann::json jj;
                std::visit(
                    [&jj](const auto& jump) {
                        using J = std::decay_t<decltype(jump)>;
                        if constexpr (std::is_same_v<J, NormalJump>) {
                            jj["type"] = "normal";
                            jj["mean"] = jump.mean;
                            jj["sd"] = jump.sd;
                        } else if constexpr (std::is_same_v<J, ExponentialJump>) {
                            jj["type"] = "exponential";
                            jj["rate"] = jump.rate;
                            jj["sign"] = jump.sign;
                        } else {
                            jj["type"] = "two_point";
                            jj["p"] = jump.p;
                            jj["up"] = jump.up;
                            jj["down"] = jump.down;
                        }
                    },
                    m.jumps);
                j["jump"] = jj;
            } else {
                j["type"] = "stable";
                j["alpha"] = m.alpha;
                j["beta"] = m.beta;
                j["scale"] = m.scale;
                j["drift"] = m.drift;
                j["self_similar"] = m.self_similar;
            }
        },
        variant_);
    return j.dump();
}

LevyModel LevyModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw NonFiniteInput(std::string("model JSON parse failure: ") + e.what());
    }
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "bm") {
            return LevyModel(BrownianMotion{j.value("mu", 0.0), j.value("sigma", 1.0)});
        }
        if (type == "cp") {
            JumpLaw law = ExponentialJump{};
            if (j.contains("jump")) {
                const auto& jj = j.at("jump");
                const std::string jt = jj.at("type").get<std::string>();
                if (jt == "normal")
                    law = NormalJump{jj.value("mean", 0.0), jj.value("sd", 1.0)};
                else if (jt == "exponential")
                    law = ExponentialJump{jj.value("rate", 1.0), jj.value("sign", 1)};
                else if (jt == "two_point")
                    law = TwoPointJump{jj.value("p", 0.5), jj.value("up", 1.0),
                                       jj.value("down", -1.0)};
                else
                    throw NonFiniteInput("unknown jump type " + jt);
            }
            return LevyModel(
                CompoundPoissonDrift{j.value("lambda", 1.0), law, j.value("drift", 0.0)});
        }
        if (type == "stable") {
            return LevyModel(Stable{j.value("alpha", 2.0), j.value("beta", 0.0),
                                    j.value("scale", 1.0), j.value("drift", 0.0),
                                    j.value("self_similar", true)});
        }
        throw NonFiniteInput("unknown model type " + type);
    } catch (const nlohmann::json::exception& e) {
        throw NonFiniteInput(std::string("model JSON field failure: ") + e.what());
    }
}

}  // namespace levysb
