#include "dyonosc/halfint.hpp"

#include <cmath>

#include "dyonosc/error.hpp"

namespace dyonosc {

HalfInt HalfInt::from_double(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-12 || std::abs(rounded) > 1e8) {
    throw Error(Errc::quantization_violation,
                "value " + std::to_string(value) + " is not a half-integer");
  }
  return HalfInt(static_cast<int>(rounded));
}

HalfInt HalfInt::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_parameter, "cannot parse half-integer '" + text + "'");
    }
    if (used != text.size()) throw Error(Errc::invalid_parameter, "cannot parse half-integer '" + text + "'");
    return from_double(v);
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (den != "2") throw Error(Errc::quantization_violation, "'" + text + "' is not a half-integer");
  try {
    std::size_t used = 0;
    const int n = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument(num);
    return HalfInt(n);
  } catch (const std::exception&) {
    throw Error(Errc::invalid_parameter, "cannot parse half-integer '" + text + "'");
  }
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace dyonosc
