#ifndef DICHORD_ERRORS_HPP
#define DICHORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dichord {

/// Bad arguments: out-of-range vertices, wrong sizes, inputs outside a
/// required class, unsupported parameter ranges.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold for the input.
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// An internal construction failed to establish the property it is supposed
/// to guarantee. Signals a bug or an unchecked precondition.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A randomized generator ran out of attempts.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed digraph text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace dichord

#endif  // DICHORD_ERRORS_HPP
