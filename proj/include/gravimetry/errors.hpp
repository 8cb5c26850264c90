#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gravimetry {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside its domain (negative mass, r < 0, tau < 0, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Covariance that is singular or not positive definite.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Ratio of two Fisher informations that both vanish (tau = 0).
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gravimetry
