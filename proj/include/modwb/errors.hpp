#pragma once

#include <stdexcept>
#include <string>

namespace modwb {

// Base for all library errors. Specific types match the documented failure
// modes of each operation so callers can catch precisely.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact series / polynomial layer
struct PrecisionExhausted : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct UnsupportedEtaQuotient : Error { using Error::Error; };
struct DivergenceRisk : Error { using Error::Error; };

// classical forms
struct UnsupportedWeight : Error { using Error::Error; };
struct BadPrimeForLevel : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct NotAnEigenvector : Error { using Error::Error; };
struct IncompleteEigenData : Error { using Error::Error; };

// arithmetic geometry
struct SingularCurve : Error { using Error::Error; };
struct BadReduction : Error { using Error::Error; };
struct UnsupportedPrime : Error { using Error::Error; };
struct InconsistentCounts : Error { using Error::Error; };
struct PoleAtPrime : Error { using Error::Error; };

// Siegel layer
struct NotSymplectic : Error { using Error::Error; };
struct NotInSiegelSpace : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct InsufficientCoefficients : Error { using Error::Error; };

// zeta layer
struct SingularSatake : Error { using Error::Error; };
struct UnresolvedSatake : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };

// serialization
struct ParseError : Error { using Error::Error; };

}  // namespace modwb
