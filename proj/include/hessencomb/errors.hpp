#pragma once

#include <stdexcept>
#include <string>

namespace hessencomb {

// Error conditions raised by the library. Callers that want structured
// handling catch the concrete type; the CLI maps anything derived from
// Error to a usage/exit-code-2 failure.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotWeaklyIncreasing : Error { using Error::Error; };
struct ValueOutOfRange : Error { using Error::Error; };
struct Reducible : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotAGenerator : Error { using Error::Error; };
struct UnsupportedShape : Error { using Error::Error; };
struct WrongBasis : Error { using Error::Error; };
struct NonIntegralResult : Error { using Error::Error; };
struct MissingVertex : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace hessencomb
