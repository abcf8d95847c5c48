#include "dyonosc/error.hpp"

namespace dyonosc {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_dimension: return "unsupported-dimension";
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::invalid_quantum_numbers: return "invalid-quantum-numbers";
    case Errc::domain_error: return "domain-error";
    case Errc::degenerate_fiber: return "degenerate-fiber";
    case Errc::singular_point: return "singular-point";
    case Errc::quantization_violation: return "quantization-violation";
    case Errc::no_bound_state: return "no-bound-state";
    case Errc::not_converged: return "not-converged";
  }
  return "unknown";
}

}  // namespace dyonosc
