#pragma once

#include <stdexcept>
#include <string>

namespace omegav {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModulusMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct NotAPrime : Error { using Error::Error; };

struct ShapeError : Error { using Error::Error; };

struct NotASimilitude : Error { using Error::Error; };
struct IsotropicVector : Error { using Error::Error; };
struct NotAnIsometry : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct DecompositionFailed : Error { using Error::Error; };
struct OddDimensionRequired : Error { using Error::Error; };
struct EvenDimensionRequired : Error { using Error::Error; };
struct NotOrthogonalShape : Error { using Error::Error; };

struct SignCountError : Error { using Error::Error; };
struct EnumerationBudgetExceeded : Error { using Error::Error; };
struct NotAnInvolution : Error { using Error::Error; };
struct TraceOutOfRange : Error { using Error::Error; };

struct UnsupportedFiber : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace omegav
