#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqft {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested field cannot support the operation (e.g. F_p with p <= dim).
class FieldUnsupported : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ScalarParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tqft
