#pragma once

#include <stdexcept>
#include <string>

namespace apl {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields (or different polynomial rings).
class field_mismatch : public error {
 public:
  using error::error;
};

/// Inversion of a zero, a non-monomial polynomial, or a singular matrix.
class not_invertible : public error {
 public:
  using error::error;
};

/// Shapes, dimensions or bases of the operands do not line up.
class shape_mismatch : public error {
 public:
  using error::error;
};

/// Malformed coefficient text, JSON document or command-line value.
class parse_error : public error {
 public:
  using error::error;
};

/// Evaluation or instantiation with an incomplete or inadmissible assignment.
class assignment_error : public error {
 public:
  using error::error;
};

/// A named lookup (family, variable, ...) that does not exist.
class unknown_name : public error {
 public:
  using error::error;
};

/// A construction whose mathematical precondition does not hold; `check()`
/// names the failing check.
class precondition_failed : public error {
 public:
  precondition_failed(std::string check, const std::string& what)
      : error(what), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// Exhaustive search would exceed the configured candidate budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

}  // namespace apl
