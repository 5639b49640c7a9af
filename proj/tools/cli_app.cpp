#include "cli_app.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "levysb/errors.hpp"
#include "levysb/identities.hpp"
#include "levysb/mc_stats.hpp"
#include "levysb/models.hpp"
#include "levysb/rw3214.hpp"
#include "levysb/sb_engine.hpp"
#include "levysb/stick_breaking.hpp"

namespace levysb::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitUnknownIdentity = 4;
constexpr int kExitTooLarge = 5;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

LevyModel parse_model(const std::string& text) {
    if (text.empty() || text == "bm") return LevyModel::brownian(0.0, 1.0);
    if (text == "cauchy-drift") return LevyModel::stable(1.0, 0.0, 1.0, 1.0);
    if (text == "cp-driftless")
        return LevyModel::compound_poisson(1.0, ExponentialJump{1.0, 1}, 0.0);
    return LevyModel::from_json(text);
}

std::complex<double> parse_complex(const std::string& text) {
    std::string t = text;
    bool imag = false;
    if (!t.empty() && (t.back() == 'i' || t.back() == 'j')) {
        imag = true;
        t.pop_back();
    }
    const double x = std::stod(t);
    return imag ? std::complex<double>(0.0, x) : std::complex<double>(x, 0.0);
}

struct Output {
    std::ofstream file;
    bool to_file = false;

    std::ostream& stream() { return to_file ? file : std::cout; }
};

int open_output(const std::string& path, Output& out) {
    if (path.empty() || path == "-") return kExitOk;
    out.file.open(path, std::ios::binary | std::ios::trunc);
    if (!out.file) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return kExitIo;
    }
    out.to_file = true;
    return kExitOk;
}

struct CommonOptions {
    std::string model_text = "bm";
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned workers = 1;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool seed_required) {
    cmd->add_option("--model", opt.model_text,
                    "model name (bm, cauchy-drift, cp-driftless) or JSON");
    cmd->add_option("--config", opt.config_path,
                    "JSON config file; explicit flags override its keys");
    auto* seed = cmd->add_option("--seed", opt.seed, "base RNG seed")
                     ->each([&opt](const std::string&) { opt.seed_set = true; });
    if (seed_required) seed->required();
    cmd->add_option("--workers", opt.workers, "worker threads (recorded in output)");
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
}

/// Flags override config-file keys one-to-one.
void merge_config(const CLI::App* cmd, CommonOptions& opt, double* T,
                  double* theta, std::uint64_t* n, std::size_t* sticks) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw NonFiniteInput("cannot read config file " + opt.config_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw NonFiniteInput(std::string("config parse failure: ") + e.what());
    }
    auto unset = [cmd](const char* name) { return cmd->count(name) == 0; };
    if (j.contains("model") && unset("--model"))
        opt.model_text = j["model"].is_string() ? j["model"].get<std::string>()
                                                : j["model"].dump();
    if (j.contains("seed") && unset("--seed")) {
        opt.seed = j["seed"].get<std::uint64_t>();
        opt.seed_set = true;
    }
    if (j.contains("workers") && unset("--workers"))
        opt.workers = j["workers"].get<unsigned>();
    if (j.contains("output") && unset("--out"))
        opt.out_path = j["output"].get<std::string>();
    if (T != nullptr && j.contains("T") && unset("--T")) *T = j["T"].get<double>();
    if (theta != nullptr && j.contains("theta") && unset("--theta"))
        *theta = j["theta"].get<double>();
    if (n != nullptr && j.contains("n_samples") && unset("--n"))
        *n = j["n_samples"].get<std::uint64_t>();
    if (sticks != nullptr && j.contains("n_sticks") && unset("--sticks"))
        *sticks = j["n_sticks"].get<std::size_t>();
}

std::string config_line(const std::string& command, const LevyModel& model,
                        const CommonOptions& opt,
                        const std::string& extra) {
    std::string canon = command + "|" + model.to_json() + "|seed=" +
                        std::to_string(opt.seed) + "|workers=" +
                        std::to_string(opt.workers) + "|" + extra;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(canon)));
    return "# levysb " + command + " config_hash=" + buf +
           " seed=" + std::to_string(opt.seed) +
           " workers=" + std::to_string(opt.workers) + "\n";
}

int cmd_sample(const CommonOptions& opt, double T, std::uint64_t n,
               std::size_t sticks) {
    const LevyModel model = parse_model(opt.model_text);
    Output out;
    if (int rc = open_output(opt.out_path, out); rc != kExitOk) return rc;
    std::ostream& os = out.stream();
    os << config_line("sample", model, opt,
                      "T=" + fmt(T) + "|n=" + std::to_string(n) +
                          "|sticks=" + std::to_string(sticks));
    os << "sample_id,final,sup,argmax\n";
    for (std::uint64_t i = 0; i < n; ++i) {
        RngStream rng(opt.seed, i);
        const Triplet t = sample_extremal_triplet(model, T, sticks, rng);
        os << i << ',' << fmt(t.final) << ',' << fmt(t.supremum) << ','
           << fmt(t.argmax_time) << '\n';
    }
    os.flush();
    if (out.to_file && !out.file) return kExitIo;
    return kExitOk;
}

int cmd_minorant(const CommonOptions& opt, double T, std::uint64_t n,
                 std::size_t sticks) {
    const LevyModel model = parse_model(opt.model_text);
    Output out;
    if (int rc = open_output(opt.out_path, out); rc != kExitOk) return rc;
    std::ostream& os = out.stream();
    os << config_line("minorant", model, opt,
                      "T=" + fmt(T) + "|n=" + std::to_string(n) +
                          "|sticks=" + std::to_string(sticks));
    os << "sample_id,length,height\n";
    for (std::uint64_t i = 0; i < n; ++i) {
        RngStream rng(opt.seed, i);
        const MinorantSample s = sample_minorant(model, T, sticks, rng);
        for (const Face& f : s.minorant.faces())
            os << i << ',' << fmt(f.length) << ',' << fmt(f.height) << '\n';
    }
    os.flush();
    if (out.to_file && !out.file) return kExitIo;
    return kExitOk;
}

int cmd_vertex(const CommonOptions& opt, double theta, std::uint64_t n,
               double min_length, std::vector<double> slopes) {
    const LevyModel model = parse_model(opt.model_text);
    std::sort(slopes.begin(), slopes.end());
    Output out;
    if (int rc = open_output(opt.out_path, out); rc != kExitOk) return rc;
    std::ostream& os = out.stream();
    std::string extra = "theta=" + fmt(theta) + "|n=" + std::to_string(n);
    for (double s : slopes) extra += "|s=" + fmt(s);
    os << config_line("vertex", model, opt, extra);
    os << "sample_id,slope,sigma,eta,infimum\n";
    for (std::uint64_t i = 0; i < n; ++i) {
        RngStream rng(opt.seed, i);
        const auto [T, sample] =
            sample_minorant_exp_horizon(model, theta, min_length, rng);
        (void)T;
        const auto vertices = vertex_process(sample, slopes);
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            const auto [sigma, eta] = vertices[k];
            os << i << ',' << fmt(slopes[k]) << ',' << fmt(sigma) << ','
               << fmt(eta) << ',' << fmt(eta - slopes[k] * sigma) << '\n';
        }
    }
    os.flush();
    if (out.to_file && !out.file) return kExitIo;
    return kExitOk;
}

int cmd_rw_demo(const std::vector<double>& increments, double T) {
    if (increments.empty()) {
        std::cerr << "error: rw-demo needs at least one increment\n";
        return kExitConfig;
    }
    if (increments.size() > 6) {
        std::cerr << "error: rw-demo enumeration is capped at n = 6\n";
        return kExitTooLarge;
    }
    const auto mino = enumerate_minorant_distribution(increments, T);
    const auto sb = enumerate_sb_distribution(increments, T);
    const double tv = total_variation(mino, sb);
    std::cout << "face multiset                                minorant      "
                 "stick-breaking\n";
    auto key_string = [&](const FaceKey& key) {
        std::ostringstream ss;
        ss << '{';
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) ss << ", ";
            char buf[64];
            std::snprintf(buf, sizeof(buf), "(%g,%.6g)",
                          static_cast<double>(key[i].first) * T /
                              static_cast<double>(increments.size()),
                          key[i].second);
            ss << buf;
        }
        ss << '}';
        return ss.str();
    };
    std::map<FaceKey, std::pair<Rational, Rational>> merged;
    for (const auto& [k, p] : mino.probabilities) merged[k].first = p;
    for (const auto& [k, p] : sb.probabilities) merged[k].second = p;
    for (const auto& [k, pq] : merged) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-44s %lld/%-10lld %lld/%lld\n",
                      key_string(k).c_str(),
                      static_cast<long long>(pq.first.numerator()),
                      static_cast<long long>(pq.first.denominator()),
                      static_cast<long long>(pq.second.numerator()),
                      static_cast<long long>(pq.second.denominator()));
        std::cout << buf;
    }
    std::cout << "total variation distance: " << fmt(tv) << "\n";
    return tv <= 1e-12 ? kExitOk : kExitFail;
}

int cmd_ppp_check(const CommonOptions& opt, double theta, double window_lo,
                  double window_hi, std::uint64_t runs) {
    const double expected = [&] {
        // mean measure marginal: int_a^b t^-1 e^{-theta t} dt
        const int steps = 20000;
        double acc = 0.0;
        const double h = (window_hi - window_lo) / steps;
        for (int i = 0; i < steps; ++i) {
            const double t = window_lo + (i + 0.5) * h;
            acc += std::exp(-theta * t) / t * h;
        }
        return acc;
    }();
    std::vector<std::uint64_t> counts(runs);
    std::vector<double> count_a(runs), count_b(runs);
    const double second_lo = window_hi, second_hi = 2.0 * window_hi;
    for (std::uint64_t i = 0; i < runs; ++i) {
        RngStream rng(opt.seed, i);
        const StickSeq seq =
            sample_exponential_horizon_sticks(theta, 1e-9, rng, 256);
        std::uint64_t c = 0, c2 = 0;
        for (double l : seq.lengths) {
            if (l >= window_lo && l <= window_hi) ++c;
            if (l > second_lo && l <= second_hi) ++c2;
        }
        counts[i] = c;
        count_a[i] = static_cast<double>(c);
        count_b[i] = static_cast<double>(c2);
    }
    double mean = 0.0;
    for (auto c : counts) mean += static_cast<double>(c);
    mean /= static_cast<double>(runs);
    const double se = std::sqrt(mean / static_cast<double>(runs));
    const double z_mean = (mean - expected) / se;
    const auto disp = poisson_dispersion(counts);
    const auto corr = independence_corr(count_a, count_b);
    const bool pass = std::abs(z_mean) <= 3.0 && std::abs(disp.z) <= 3.0 &&
                      std::abs(corr.z) <= 3.0;
    std::cout << "{\"test\":\"ppp-check\",\"theta\":" << fmt(theta)
              << ",\"window\":[" << fmt(window_lo) << ',' << fmt(window_hi)
              << "],\"expected_count\":" << fmt(expected) << ",\"mc_count\":"
              << fmt(mean) << ",\"z_mean\":" << fmt(z_mean)
              << ",\"dispersion\":" << fmt(disp.index) << ",\"z_dispersion\":"
              << fmt(disp.z) << ",\"window_corr_z\":" << fmt(corr.z)
              << ",\"n\":" << runs << ",\"seed\":" << opt.seed
              << ",\"verdict\":\"" << (pass ? "pass" : "fail") << "\"}\n";
    return pass ? kExitOk : kExitFail;
}

int cmd_validate(const CommonOptions& opt, const std::string& identity, double t,
                 double theta, const std::string& u_text,
                 const std::string& v_text, double slope, std::uint64_t mc_n,
                 std::size_t sticks) {
    const LevyModel model = parse_model(opt.model_text);
    const QuadratureSpec q;
    auto print_report = [&](const std::string& name, double quad, double mc,
                            double se, double z, bool pass,
                            const std::string& extra) {
        std::cout << "{\"identity\":\"" << name << "\",\"model\":"
                  << model.to_json() << ",\"quadrature\":" << fmt(quad)
                  << ",\"mc\":" << fmt(mc) << ",\"se\":" << fmt(se)
                  << ",\"z\":" << fmt(z) << ",\"n\":" << mc_n
                  << ",\"seed\":" << opt.seed << (extra.empty() ? "" : ",")
                  << extra << ",\"verdict\":\"" << (pass ? "pass" : "fail")
                  << "\"}\n";
    };

    if (identity == "spitzer-time") {
        const double quad = spitzer_time(model, t, q);
        const Estimate mc = estimate_mean(
            [&](RngStream& rng) {
                return sample_extremal_triplet(model, t, sticks, rng).argmax_time;
            },
            mc_n, opt.seed, opt.workers);
        const double z = (mc.mean - quad) / mc.std_error;
        print_report(identity, quad, mc.mean, mc.std_error, z,
                     std::abs(z) <= 3.0, "");
        return std::abs(z) <= 3.0 ? kExitOk : kExitFail;
    }
    if (identity == "spitzer-sup") {
        const double quad = spitzer_sup(model, t, q);
        const Estimate mc = estimate_mean(
            [&](RngStream& rng) {
                return sample_extremal_triplet(model, t, sticks, rng).supremum;
            },
            mc_n, opt.seed, opt.workers);
        const double z = (mc.mean - quad) / mc.std_error;
        print_report(identity, quad, mc.mean, mc.std_error, z,
                     std::abs(z) <= 3.0, "");
        return std::abs(z) <= 3.0 ? kExitOk : kExitFail;
    }
    if (identity == "laplace-sup") {
        const double u = parse_complex(u_text.empty() ? "1" : u_text).real();
        const auto quad = laplace_sup_exp_horizon(model, theta, u, q);
        const Estimate mc = estimate_mean(
            [&](RngStream& rng) {
                const double T = rng.exponential() / theta;
                return std::exp(
                    -u * sample_extremal_triplet(model, T, sticks, rng).supremum);
            },
            mc_n, opt.seed, opt.workers);
        const double z = (mc.mean - quad.value) / mc.std_error;
        print_report(identity, quad.value, mc.mean, mc.std_error, z,
                     std::abs(z) <= 3.0, "");
        return std::abs(z) <= 3.0 ? kExitOk : kExitFail;
    }
    if (identity == "wh-product") {
        const auto u = parse_complex(u_text.empty() ? "0.3i" : u_text);
        const auto v = parse_complex(v_text.empty() ? "0.7i" : v_text);
        const double residual = wh_product_check(model, theta, u, v, q);
        const double tol = model.as_brownian() != nullptr ? 1e-6 : 1e-3;
        const bool pass = residual < tol;
        print_report(identity, residual, 0.0, 0.0, 0.0, pass,
                     "\"tolerance\":" + fmt(tol));
        return pass ? kExitOk : kExitFail;
    }
    if (identity == "rogozin") {
        const auto report = rogozin_regularity(model, {1e-2, 1e-4, 1e-6}, q);
        std::string partials = "\"partial_integrals\":[";
        for (std::size_t i = 0; i < report.partial_integrals.size(); ++i) {
            if (i) partials += ',';
            partials += "[" + fmt(report.partial_integrals[i].first) + "," +
                        fmt(report.partial_integrals[i].second) + "]";
        }
        partials += "]";
        const std::string verdict =
            report.regular ? (*report.regular ? "regular" : "not regular")
                           : "unknown";
        std::cout << "{\"identity\":\"rogozin\",\"model\":" << model.to_json()
                  << "," << partials << ",\"analytic_verdict\":\"" << verdict
                  << "\",\"seed\":" << opt.seed << ",\"verdict\":\""
                  << (report.regular ? "pass" : "fail") << "\"}\n";
        return report.regular ? kExitOk : kExitFail;
    }
    if (identity == "vertex-laplace") {
        const double u = parse_complex(u_text.empty() ? "1" : u_text).real();
        const double quad = vertex_sigma_laplace(model, theta, slope, u, q);
        const Estimate mc = estimate_mean(
            [&](RngStream& rng) {
                const auto infima = sample_multi_drift_infima(
                    model, theta, std::vector<double>{slope}, 1e-12, rng);
                return std::exp(-u * infima[0].first);
            },
            mc_n, opt.seed, opt.workers);
        const double z = (mc.mean - quad) / mc.std_error;
        print_report(identity, quad, mc.mean, mc.std_error, z,
                     std::abs(z) <= 3.0, "");
        return std::abs(z) <= 3.0 ? kExitOk : kExitFail;
    }
    if (identity == "sup-infinity") {
        const double u = parse_complex(u_text.empty() ? "1" : u_text).real();
        const auto report = laplace_sup_infinite_horizon(model, u, q);
        std::string cls = report.classification == TailClass::SupremumFinite
                              ? "a"
                              : report.classification == TailClass::InfimumFinite
                                    ? "b"
                                    : "c";
        std::optional<double> reference;
        if (const auto* bm = model.as_brownian();
            bm != nullptr && bm->mu < 0.0 && bm->sigma > 0.0) {
            const double rate = 2.0 * (-bm->mu) / (bm->sigma * bm->sigma);
            reference = rate / (rate + u);
        }
        const bool pass =
            !reference || std::abs(report.value - *reference) <= 1e-4;
        std::cout << "{\"identity\":\"sup-infinity\",\"model\":"
                  << model.to_json() << ",\"value\":" << fmt(report.value)
                  << ",\"classification\":\"" << cls << "\",\"I_plus_partial\":"
                  << fmt(report.i_plus_partial) << ",\"I_minus_partial\":"
                  << fmt(report.i_minus_partial) << ",\"reference\":"
                  << (reference ? fmt(*reference) : "null") << ",\"seed\":"
                  << opt.seed << ",\"verdict\":\"" << (pass ? "pass" : "fail")
                  << "\"}\n";
        return pass ? kExitOk : kExitFail;
    }
    std::cerr << "error: unknown identity '" << identity << "'\n";
    return kExitUnknownIdentity;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"stick-breaking simulators and fluctuation-identity checks"};
    app.require_subcommand(1);

    CommonOptions sample_opt, minorant_opt, vertex_opt, validate_opt, ppp_opt;
    double sample_T = 1.0, minorant_T = 1.0;
    std::uint64_t sample_n = 1000, minorant_n = 100, vertex_n = 1000;
    std::size_t sample_sticks = kDefaultMaxSticks,
                minorant_sticks = kDefaultMaxSticks,
                validate_sticks = kDefaultMaxSticks;
    double vertex_theta = 1.0, vertex_min_length = 1e-12;
    std::vector<double> vertex_slopes{0.0};

    auto* sample = app.add_subcommand("sample", "extremal triplet samples (CSV)");
    add_common(sample, sample_opt, true);
    sample->add_option("--T", sample_T, "fixed horizon");
    sample->add_option("--n", sample_n, "number of samples");
    sample->add_option("--sticks", sample_sticks, "sticks per sample");

    auto* minorant = app.add_subcommand("minorant", "convex minorant faces (CSV)");
    add_common(minorant, minorant_opt, true);
    minorant->add_option("--T", minorant_T, "fixed horizon");
    minorant->add_option("--n", minorant_n, "number of samples");
    minorant->add_option("--sticks", minorant_sticks, "sticks per sample");

    auto* vertex = app.add_subcommand(
        "vertex", "vertex process on an exponential horizon (CSV)");
    add_common(vertex, vertex_opt, true);
    vertex->add_option("--theta", vertex_theta, "horizon rate");
    vertex->add_option("--n", vertex_n, "number of samples");
    vertex->add_option("--min-length", vertex_min_length, "stick truncation");
    vertex->add_option("--slopes", vertex_slopes, "query slopes")
        ->delimiter(',');

    auto* validate = app.add_subcommand("validate", "identity checks (JSON report)");
    std::string identity;
    double validate_t = 1.0, validate_theta = 1.0, validate_slope = 0.0;
    std::string validate_u, validate_v;
    std::uint64_t validate_mc = 100000;
    validate->add_option("identity", identity,
                         "spitzer-time | spitzer-sup | laplace-sup | wh-product "
                         "| rogozin | vertex-laplace | sup-infinity")
        ->required();
    add_common(validate, validate_opt, false);
    validate->add_option("--t", validate_t, "fixed horizon");
    validate->add_option("--theta", validate_theta, "exponential horizon rate");
    validate->add_option("--u", validate_u, "transform argument (e.g. 1 or 0.3i)");
    validate->add_option("--v", validate_v, "second transform argument");
    validate->add_option("--s", validate_slope, "vertex slope");
    validate->add_option("--mc", validate_mc, "Monte Carlo sample count");
    validate->add_option("--sticks", validate_sticks, "sticks per sample");

    auto* rwdemo = app.add_subcommand(
        "rw-demo", "enumerate minorant vs stick-breaking face laws");
    std::vector<double> rw_increments;
    double rw_T = 0.0;
    rwdemo->add_option("increments", rw_increments, "walk increments")
        ->required()
        ->expected(-1);
    rwdemo->add_option("--T", rw_T, "horizon (default n)");

    auto* ppp = app.add_subcommand("ppp-check",
                                   "Poisson structure of exponential-horizon sticks");
    double ppp_theta = 1.0, ppp_lo = 0.5, ppp_hi = 1.0;
    std::uint64_t ppp_runs = 100000;
    add_common(ppp, ppp_opt, true);
    ppp->add_option("--theta", ppp_theta, "horizon rate");
    ppp->add_option("--a", ppp_lo, "window lower end");
    ppp->add_option("--b", ppp_hi, "window upper end");
    ppp->add_option("--n", ppp_runs, "number of runs");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (sample->parsed()) {
            merge_config(sample, sample_opt, &sample_T, nullptr, &sample_n,
                         &sample_sticks);
            return cmd_sample(sample_opt, sample_T, sample_n, sample_sticks);
        }
        if (minorant->parsed()) {
            merge_config(minorant, minorant_opt, &minorant_T, nullptr,
                         &minorant_n, &minorant_sticks);
            return cmd_minorant(minorant_opt, minorant_T, minorant_n,
                                minorant_sticks);
        }
        if (vertex->parsed()) {
            merge_config(vertex, vertex_opt, nullptr, &vertex_theta, &vertex_n,
                         nullptr);
            return cmd_vertex(vertex_opt, vertex_theta, vertex_n,
                              vertex_min_length, vertex_slopes);
        }
        if (validate->parsed()) {
            merge_config(validate, validate_opt, &validate_t, &validate_theta,
                         &validate_mc, &validate_sticks);
            return cmd_validate(validate_opt, identity, validate_t,
                                validate_theta, validate_u, validate_v,
                                validate_slope, validate_mc, validate_sticks);
        }
        if (rwdemo->parsed()) {
            const double T =
                rw_T > 0.0 ? rw_T : static_cast<double>(rw_increments.size());
            return cmd_rw_demo(rw_increments, T);
        }
        if (ppp->parsed()) {
            merge_config(ppp, ppp_opt, nullptr, &ppp_theta, &ppp_runs, nullptr);
            return cmd_ppp_check(ppp_opt, ppp_theta, ppp_lo, ppp_hi, ppp_runs);
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const NonFiniteInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const HeavyTail& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}

}  // namespace levysb::cli
