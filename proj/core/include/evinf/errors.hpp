#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evinf {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant does not hold. Indicates a bug rather
/// than bad input.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class InvalidMass : public Error {
  public:
    using Error::Error;
};

/// Dempster's rule is undefined: the two sources are fully contradictory.
class TotalConflict : public Error {
  public:
    explicit TotalConflict(double conflict)
        : Error("total conflict between sources (K = " + std::to_string(conflict) + ")"),
          conflict_(conflict) {}

    double conflict() const noexcept { return conflict_; }

  private:
    double conflict_;
};

class ParseError : public Error {
  public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

class UnknownUser : public Error {
  public:
    using Error::Error;
};

class OutOfRange : public Error {
  public:
    using Error::Error;
};

class TooFewIndicators : public Error {
  public:
    using Error::Error;
};

class InvalidParameters : public Error {
  public:
    using Error::Error;
};

class AlreadyInSet : public Error {
  public:
    using Error::Error;
};

class InvalidK : public Error {
  public:
    using Error::Error;
};

class TooLarge : public Error {
  public:
    using Error::Error;
};

/// Aggregate of per-edge failures raised while fusing a whole graph.
class FusionError : public Error {
  public:
    FusionError(const std::string& what, std::size_t failed_edges)
        : Error(what), failed_edges_(failed_edges) {}

    std::size_t failed_edges() const noexcept { return failed_edges_; }

  private:
    std::size_t failed_edges_;
};

} // namespace evinf
