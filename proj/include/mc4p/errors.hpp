#pragma once
// Error types shared across the library.  Every precondition violation or
// impossible computation raises one of these; callers that want a soft
// verdict catch the specific type.

#include <stdexcept>
#include <string>

namespace mc4p {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values: non-coprime Galois exponent, zero denominator,
// lambda in {0,1}, alpha+beta odd, even multiplier for psi_p, ...
struct ParameterError : Error {
  using Error::Error;
};

// Shape mismatches and the char_poly dimension guard.
struct DimensionError : Error {
  using Error::Error;
};

// Division by zero in a field, or inverting a singular matrix.
struct SingularError : Error {
  using Error::Error;
};

// char_poly does not split over the supplied candidate eigenvalues.
struct EigenvalueError : Error {
  using Error::Error;
};

// Middle convolution quotient collapsed to dimension zero.
struct DegenerateError : Error {
  using Error::Error;
};

}  // namespace mc4p
