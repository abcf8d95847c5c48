#pragma once

#include <stdexcept>
#include <string>

namespace dyonosc {

enum class Errc {
  unsupported_dimension,
  invalid_parameter,
  invalid_quantum_numbers,
  domain_error,
  degenerate_fiber,
  singular_point,
  quantization_violation,
  no_bound_state,
  not_converged,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc categories.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dyonosc
