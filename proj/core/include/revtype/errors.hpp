#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace revtype {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Syntax, UnknownIdentifier, Arity };

/// Malformed expression text. `offset()` is the 0-based byte offset of the
/// offending token (the input length for an unexpected end of input).
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& message)
      : Error(message + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

/// An expression was evaluated outside its real domain (sqrt of a negative,
/// ln of a nonpositive value, division by zero, ...).
class DomainError : public Error {
 public:
  DomainError(std::string subexpression, double argument, const std::string& reason)
      : Error(reason + " in '" + subexpression + "' (argument " + std::to_string(argument) + ")"),
        subexpression_(std::move(subexpression)),
        argument_(argument) {}

  const std::string& subexpression() const noexcept { return subexpression_; }
  double argument() const noexcept { return argument_; }

  /// Sample parameter s at which the failure occurred, when known.
  const std::optional<double>& sample() const noexcept { return sample_; }
  DomainError at_sample(double s) const {
    DomainError copy = *this;
    copy.sample_ = s;
    copy.what_ = std::string(Error::what()) + " at s=" + std::to_string(s);
    return copy;
  }

  const char* what() const noexcept override {
    return what_.empty() ? Error::what() : what_.c_str();
  }

 private:
  std::string subexpression_;
  double argument_;
  std::optional<double> sample_;
  std::string what_;
};

/// An expression referenced a parameter with no bound value.
class UnboundParameterError : public Error {
 public:
  explicit UnboundParameterError(const std::string& name)
      : Error("parameter '" + name + "' is not bound"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Point where the third fundamental form degenerates (phi' or sin(phi)
/// below the parabolic tolerance).
class ParabolicPointError : public Error {
 public:
  ParabolicPointError(double s, double dphi, double sin_phi)
      : Error("parabolic point at s=" + std::to_string(s) + " (phi'=" + std::to_string(dphi) +
              ", sin(phi)=" + std::to_string(sin_phi) + ")"),
        s_(s) {}
  double s() const noexcept { return s_; }

 private:
  double s_;
};

/// Profile data that cannot describe a regular surface (bad parameters,
/// f' = g' = 0, malformed profile files).
class ProfileError : public Error {
 public:
  using Error::Error;
};

}  // namespace revtype
