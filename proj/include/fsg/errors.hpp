#pragma once

#include <stdexcept>
#include <string>

namespace fsg {

  // Malformed word or point text.
  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Operands built over different alphabets.
  class RankMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A documented precondition of an operation does not hold.
  class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A flow violates the Kirchhoff law, the source/sink net-flow condition,
  // or cannot be traversed as a single Euler path.
  class InvalidFlow : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Exact solver refused an instance larger than its configured budget.
  class LimitExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Neither the exact solver nor the certified bounds settle a decision.
  class Undecided : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operation intentionally not provided for the given arguments.
  class Unsupported : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace fsg
