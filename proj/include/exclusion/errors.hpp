#pragma once

#include <stdexcept>
#include <string>

namespace exclusion {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianInput final : Error { using Error::Error; };
struct NotPsd final : Error { using Error::Error; };
struct DimensionMismatch final : Error { using Error::Error; };
struct CountMismatch final : Error { using Error::Error; };
struct TooFewStates final : Error { using Error::Error; };
struct InvalidState final : Error { using Error::Error; };
struct InvalidGamma final : Error { using Error::Error; };
struct NegativeGamma final : Error { using Error::Error; };
struct OutOfRange final : Error { using Error::Error; };
struct WrongCardinality final : Error { using Error::Error; };
struct DegenerateOverlap final : Error { using Error::Error; };
struct InfeasibleDecomposition final : Error { using Error::Error; };

}  // namespace exclusion
