#pragma once

#include <stdexcept>
#include <string>

namespace zbgof {

struct DegenerateSample : std::invalid_argument {
  explicit DegenerateSample(const std::string& msg = "sample has zero variance")
      : std::invalid_argument(msg) {}
};

struct TooFewObservations : std::invalid_argument {
  explicit TooFewObservations(const std::string& msg = "need at least 2 observations")
      : std::invalid_argument(msg) {}
};

struct InvalidTuning : std::invalid_argument {
  explicit InvalidTuning(const std::string& msg) : std::invalid_argument(msg) {}
};

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleMoments : std::invalid_argument {
  explicit InfeasibleMoments(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnsupportedAlternative : std::invalid_argument {
  explicit UnsupportedAlternative(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownAlternativeName : std::invalid_argument {
  explicit UnknownAlternativeName(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnsupportedSampleSize : std::invalid_argument {
  explicit UnsupportedSampleSize(const std::string& msg) : std::invalid_argument(msg) {}
};

struct MissingCriticalValue : std::runtime_error {
  explicit MissingCriticalValue(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, long line) : std::runtime_error(msg), line(line) {}
  long line;
};

}  // namespace zbgof
