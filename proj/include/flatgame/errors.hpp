// Error types shared by the flatgame library. Every failure the library can
// report is a subclass of Error, so callers (notably the CLI) can map library
// failures to a single exit code while tests match on the concrete type.

#pragma once

#include <stdexcept>
#include <string>

namespace flatgame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// game construction
struct ShapeMismatchError : Error { using Error::Error; };
struct EmptyGameError : Error { using Error::Error; };
struct UnknownBuiltinError : Error { using Error::Error; };
struct BadParamsError : Error { using Error::Error; };

// payoff transforms
struct NotOrderPreservingError : Error { using Error::Error; };
struct MissingValueError : Error { using Error::Error; };

// mixed extension
struct DimensionMismatchError : Error { using Error::Error; };
struct NotEquilibriumError : Error { using Error::Error; };
struct GameTooLargeError : Error { using Error::Error; };
struct EmptySetError : Error { using Error::Error; };

// generic preconditions (e.g. competitive_flat_check on a non-competitive game)
struct PreconditionError : Error { using Error::Error; };

// continuous models and index ranges
struct DomainError : Error { using Error::Error; };

// multiplayer enumeration limits
struct BudgetExceededError : Error { using Error::Error; };

// serialization
struct BadRationalError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(int line, int column, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line = 0;
  int column = 0;
};

}  // namespace flatgame
