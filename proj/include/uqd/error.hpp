#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uqd {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ValidationKind {
    NegativeProbability,
    SumNotOne,
    DimensionMismatch,
    EmptyEnsemble,
    InvalidParameter,
};

std::string_view to_string(ValidationKind kind);

/// A distribution or probability vector violates one of its invariants.
/// `what()` names the violated invariant.
class ValidationError : public Error {
  public:
    ValidationError(ValidationKind kind, const std::string& detail);

    ValidationKind kind() const noexcept { return kind_; }

  private:
    ValidationKind kind_;
};

/// Malformed textual input (JSON spec, member matrix). Carries the 1-based
/// line number when the format is line oriented.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& detail, std::optional<std::size_t> line = std::nullopt);

    std::optional<std::size_t> line() const noexcept { return line_; }

  private:
    std::optional<std::size_t> line_;
};

/// Requested tolerance could not be met within the evaluation budget.
class IntegrationFailure : public Error {
  public:
    using Error::Error;
};

/// Two independent routes to the same quantity disagree beyond their error bounds.
class ConsistencyFailure : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

}  // namespace uqd
