#pragma once

#include <stdexcept>
#include <string>

namespace nij {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("singular matrix (determinant is identically zero)") {}
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& name)
      : Error("unknown symbol '" + name + "'") {}
};

struct PoleError : Error {
  using Error::Error;
};

// Precondition violations of the geometric operations (non-self-adjoint
// operator, degenerate metric, non-commuting pair, ...).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace nij
