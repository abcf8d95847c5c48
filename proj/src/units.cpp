#include "dyonosc/units.hpp"

#include <cmath>

#include "dyonosc/error.hpp"

namespace dyonosc {

void Units::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0; };
  if (!positive(mu)) throw Error(Errc::invalid_parameter, "mass must be positive");
  if (!positive(hbar)) throw Error(Errc::invalid_parameter, "hbar must be positive");
  if (!positive(c)) throw Error(Errc::invalid_parameter, "light speed must be positive");
}

}  // namespace dyonosc
