#ifndef KZDYN_ERRORS_HPP
#define KZDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzdyn {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct NonClearingDenominatorError : Error {
  explicit NonClearingDenominatorError(const std::string& msg) : Error(msg) {}
};

struct FractionalExponentError : Error {
  explicit FractionalExponentError(const std::string& msg) : Error(msg) {}
};

struct InvalidCartanTypeError : Error {
  explicit InvalidCartanTypeError(const std::string& msg) : Error(msg) {}
};

struct NotMinusculeError : Error {
  explicit NotMinusculeError(const std::string& msg) : Error(msg) {}
};

struct NotInOStarError : Error {
  explicit NotInOStarError(const std::string& msg) : Error(msg) {}
};

struct MixedRankError : Error {
  explicit MixedRankError(const std::string& msg) : Error(msg) {}
};

struct EmptyWeightSpaceError : Error {
  explicit EmptyWeightSpaceError(const std::string& msg) : Error(msg) {}
};

/// A division by zero hit while evaluating an operator at a non-generic point.
struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct PoleAtOneError : PoleError {
  explicit PoleAtOneError(const std::string& msg = "r(z) has a pole at z = 1") : PoleError(msg) {}
};

struct ResonantLambdaError : Error {
  explicit ResonantLambdaError(const std::string& msg) : Error(msg) {}
};

struct TruncationTooShallowError : Error {
  explicit TruncationTooShallowError(const std::string& msg) : Error(msg) {}
};

struct NonGenericWeightError : Error {
  explicit NonGenericWeightError(const std::string& msg) : Error(msg) {}
};

struct CoincidingPointsError : Error {
  explicit CoincidingPointsError(const std::string& msg) : Error(msg) {}
};

struct NoIntegerSolutionError : Error {
  explicit NoIntegerSolutionError(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace kzdyn

#endif
