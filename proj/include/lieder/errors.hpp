#pragma once

#include <stdexcept>
#include <string>

namespace lieder {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural misuse of the linear algebra kernel.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Algebra construction rejected the input table.
struct BuildError : Error {
  using Error::Error;
};

// A subspace handed to quotient() is not an ideal; message carries a witness.
struct NotAnIdeal : Error {
  using Error::Error;
};

// A subspace handed to adjoint_map() is not invariant under the given element.
struct NotInvariant : Error {
  using Error::Error;
};

// The common-eigenvector search needs an eigenvalue outside the rationals.
// Existence is only guaranteed over an algebraically closed field, so this
// is surfaced instead of approximating.
struct FieldExtensionRequired : Error {
  using Error::Error;
};

struct NotSolvable : Error {
  using Error::Error;
};

struct DimensionOne : Error {
  using Error::Error;
};

struct AbelianInput : Error {
  using Error::Error;
};

// Text format problems (grammar or semantic).
struct FormatError : Error {
  using Error::Error;
};

// Zoo parameter out of its documented range.
struct ParameterError : Error {
  using Error::Error;
};

}  // namespace lieder
