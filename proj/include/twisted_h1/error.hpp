#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twisted_h1 {

enum class ErrorKind {
  invalid_rank,
  unsupported_automorphism,
  rank_defect,
  not_in_lattice,
  too_large,
  incompatible_order,
  method_unavailable,
  not_adjoint,
  not_simply_connected,
  not_in_alcove,
  invalid_assignment,
  invalid_input,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. `kind()` identifies the
/// violated precondition; the message names it in words.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace twisted_h1
