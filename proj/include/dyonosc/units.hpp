#pragma once

namespace dyonosc {

/// Mass, Planck constant and light speed. Defaults to mu = hbar = c = 1.
struct Units {
  double mu = 1.0;
  double hbar = 1.0;
  double c = 1.0;

  /// Throws Errc::invalid_parameter unless all three are finite and positive.
  void validate() const;
};

}  // namespace dyonosc
