#pragma once

#include <stdexcept>
#include <string>

namespace rigidlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class PurityError : public Error {
 public:
  using Error::Error;
};

class FaceError : public Error {
 public:
  using Error::Error;
};

class ParamError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SupportError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class SplitError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Raised when an enumeration would exceed its budget. `partial()` carries
/// whatever was established before giving up.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::string partial)
      : Error(what), partial_(std::move(partial)) {}
  explicit BudgetError(const std::string& what) : Error(what) {}

  const std::string& partial() const noexcept { return partial_; }

 private:
  std::string partial_;
};

}  // namespace rigidlab
