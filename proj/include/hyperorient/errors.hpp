#ifndef HYPERORIENT_ERRORS_HPP_
#define HYPERORIENT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hyperorient {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition was violated (empty cut set, bad vertex id, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Attempted to reorient a hyperarc toward its current head or a vertex
/// outside its hyperedge.
class InvalidReorientation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Malformed input text. `line()` is 1-based; 0 means "not line specific".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A structural guarantee of the augmentation procedure failed to hold.
///
/// On inputs that satisfy the partition-connectivity hypothesis this signals
/// a bug. Otherwise it is the expected symptom of an infeasible input, and
/// `certificate()` carries whatever witness was cheap to produce.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message, std::string certificate = {})
      : Error(message), certificate_(std::move(certificate)) {}
  const std::string& certificate() const { return certificate_; }

 private:
  std::string certificate_;
};

/// Raised by augmentation when the input cannot be (k,k)-partition-connected
/// for the requested level.
class NotPartitionConnected : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

/// A brute-force oracle refused an instance above its size guard.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperorient

#endif  // HYPERORIENT_ERRORS_HPP_
