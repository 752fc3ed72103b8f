#ifndef DEGSUM_ERRORS_HPP
#define DEGSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degsum {

// Caller misuse: bad arguments, out-of-range vertices, malformed specs.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph file. Carries the 1-based line number when known.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An input hypothesis does not hold for the given input (e.g. the degree-sum
// bound is too small). The message names the violated inequality.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Something that the underlying mathematics guarantees did not happen. Either
// a bug or a counterexample; never an expected outcome.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Random instance generation gave up after its restart budget.
class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace degsum

#endif  // DEGSUM_ERRORS_HPP
