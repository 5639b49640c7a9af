#pragma once

#include <stdexcept>
#include <string>

namespace levysb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LEVYSB_DEFINE_ERROR(Name)                        \
    struct Name : Error {                                \
        explicit Name(const std::string& msg = #Name)    \
            : Error(std::string(#Name) + ": " + msg) {}  \
    }

// pwl_convex
LEVYSB_DEFINE_ERROR(MismatchedLengths);
LEVYSB_DEFINE_ERROR(NonPositiveLength);
LEVYSB_DEFINE_ERROR(NonFiniteInput);
LEVYSB_DEFINE_ERROR(OutOfDomain);
LEVYSB_DEFINE_ERROR(HorizonMismatch);

// stick_breaking
LEVYSB_DEFINE_ERROR(InvalidHorizon);
LEVYSB_DEFINE_ERROR(ZeroCount);
LEVYSB_DEFINE_ERROR(InvalidRate);
LEVYSB_DEFINE_ERROR(InvalidThreshold);

// levy_models
LEVYSB_DEFINE_ERROR(InvalidDt);
LEVYSB_DEFINE_ERROR(InvalidT);
LEVYSB_DEFINE_ERROR(HeavyTail);
LEVYSB_DEFINE_ERROR(UnsupportedArgument);

// sb_engine
LEVYSB_DEFINE_ERROR(UnsortedSlopes);

// rw_3214
LEVYSB_DEFINE_ERROR(BadCutPoints);
LEVYSB_DEFINE_ERROR(TieDetected);
LEVYSB_DEFINE_ERROR(NotInvertible);
LEVYSB_DEFINE_ERROR(TooLarge);

// identities
LEVYSB_DEFINE_ERROR(QuadratureFailure);
LEVYSB_DEFINE_ERROR(UnknownTail);
LEVYSB_DEFINE_ERROR(SlopeAboveDrift);
LEVYSB_DEFINE_ERROR(UnsupportedModel);

// mc_stats
LEVYSB_DEFINE_ERROR(TooFewSamples);
LEVYSB_DEFINE_ERROR(ZeroMean);
LEVYSB_DEFINE_ERROR(DegenerateMarginal);

#undef LEVYSB_DEFINE_ERROR

}  // namespace levysb
