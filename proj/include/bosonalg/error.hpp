#pragma once

#include <stdexcept>
#include <string>

namespace bosonalg {

/// Raised when caller-supplied input violates an operation's precondition.
/// `name()` identifies the violated precondition, e.g. "invalid-cutoff".
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(std::string name, const std::string& detail)
      : std::invalid_argument(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Raised when a numerical guard trips during a computation (tail mass,
/// norm deficit, overflow).
class guard_error : public std::runtime_error {
 public:
  guard_error(std::string guard, const std::string& detail)
      : std::runtime_error(guard + ": " + detail), guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

namespace detail {

inline void require(bool condition, const char* name, const std::string& detail) {
  if (!condition) throw precondition_error(name, detail);
}

}  // namespace detail
}  // namespace bosonalg
