#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lietensor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownIdentifier, ZeroDenominator };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(what + " at position " + std::to_string(position)), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero expression") {}
};

class EvaluationError : public Error {
 public:
  enum class Kind { MissingParameter, DenominatorVanishes };

  EvaluationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class LieAlgebraError : public Error {
 public:
  enum class Kind { IndexOutOfRange, DuplicateEntry, JacobiViolation, DimensionMismatch, UnknownParameter, UnknownFamily };

  LieAlgebraError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class MetricError : public Error {
 public:
  enum class Kind { NotSymmetric, Singular, DimensionMismatch };

  MetricError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class DegeneratePlane : public Error {
 public:
  DegeneratePlane() : Error("degenerate 2-plane: Gram determinant is the zero expression") {}
};

/// Raised when an operation is only defined in a fixed dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace lietensor
