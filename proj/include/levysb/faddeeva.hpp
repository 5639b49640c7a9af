#pragma once

#include <complex>

namespace levysb {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for complex z.
/// Weideman's rational approximation in the upper half-plane, reflected via
/// w(z) = 2 exp(-z^2) - w(-z) below the real axis.
std::complex<double> faddeeva_w(std::complex<double> z);

/// Scaled complementary error function erfcx(z) = exp(z^2) erfc(z) = w(iz).
std::complex<double> erfcx(std::complex<double> z);

}  // namespace levysb
