#include "levysb/faddeeva.hpp"

#include <array>
#include <cmath>
#include <mutex>

namespace levysb {

namespace {

constexpr int kTerms = 48;                // polynomial degree of the fit
constexpr int kHalfGrid = 2 * kTerms;     // M in Weideman's construction
constexpr double kPi = 3.1415926535897932384626433832795;

struct WeidemanTable {
    double L = 0.0;
    std::array<double, kTerms> coeff{};  // a_1..a_N, stored low order first
};

// Coefficients of Weideman's rational expansion, computed once by a direct
// discrete Fourier transform of the sampled generating function.
const WeidemanTable& table() {
    static WeidemanTable t;
    static std::once_flag flag;
    std::call_once(flag, [] {
        const int M = kHalfGrid;
        t.L = std::sqrt(kTerms / std::sqrt(2.0));
        // Samples g(k) = exp(-t_k^2) (L^2 + t_k^2), t_k = L tan(theta_k/2),
        // on theta_k = pi k / M for k in (-M, M); the k = -M sample is 0.
        std::array<double, 2 * kHalfGrid> g{};
        for (int k = -M + 1; k <= M - 1; ++k) {
            const double theta = kPi * k / (2.0 * M);
            const double tk = t.L * std::tan(theta);
            g[static_cast<std::size_t>(k + M)] =
                std::exp(-tk * tk) * (t.L * t.L + tk * tk);
        }
        for (int m = 1; m <= kTerms; ++m) {
            double acc = 0.0;
            for (int k = -M + 1; k <= M - 1; ++k)
                acc += g[static_cast<std::size_t>(k + M)] *
                       std::cos(kPi * k * m / M);
            t.coeff[static_cast<std::size_t>(m - 1)] = acc / (2.0 * M);
        }
    });
    return t;
}

std::complex<double> upper_half_w(std::complex<double> z) {
    const WeidemanTable& t = table();
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> denom = t.L - iz;
    const std::complex<double> Z = (t.L + iz) / denom;
    // Horner over a_N .. a_1.
    std::complex<double> p = 0.0;
    for (int m = kTerms - 1; m >= 0; --m)
        p = p * Z + t.coeff[static_cast<std::size_t>(m)];
    return 2.0 * p / (denom * denom) +
           (1.0 / std::sqrt(kPi)) / denom;
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (z.imag() >= 0.0) return upper_half_w(z);
    // w(z) = 2 exp(-z^2) - w(-z); callers must keep -z^2 in range.
    return 2.0 * std::exp(-z * z) - upper_half_w(-z);
}

std::complex<double> erfcx(std::complex<double> z) {
    return faddeeva_w(std::complex<double>(-z.imag(), z.real()));
}

}  // namespace levysb
