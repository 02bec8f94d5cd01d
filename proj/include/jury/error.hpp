#pragma once

#include <stdexcept>
#include <string>

namespace jury {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (corpus line, score block, config file).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input violating a domain invariant (range, presence).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Duplicate record key within a corpus.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// A join or statistic was requested on an empty sample.
class EmptySampleError : public Error {
 public:
  using Error::Error;
};

/// The statistic is mathematically undefined on this sample
/// (constant column, all ties, zero expected disagreement).
class UndefinedStatError : public Error {
 public:
  using Error::Error;
};

/// A fit cannot be performed on degenerate data (e.g. a single input level).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Required scores are missing for a requested aggregation.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Prompt template is missing a required placeholder or inputs mismatch.
class TemplateError : public Error {
 public:
  using Error::Error;
};

/// Run configuration is missing or names an invalid field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Transport-level failure talking to a judge endpoint.
class HttpError : public Error {
 public:
  using Error::Error;
};

/// An iterative optimisation failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace jury
