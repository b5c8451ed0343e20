#pragma once

#include <cmath>

#include "jamopt/errors.hpp"

namespace jamopt {

// Probability value, constrained to [0, 1] by every producing operation.
struct Probability {
  double value = 0.0;
};

// Spectral efficiency in bits/s/Hz, nonnegative.
struct RateBpsHz {
  double value = 0.0;
};

// Transmit or jamming power on the linear scale (noise-normalized).
struct PowerLinear {
  double value = 0.0;
};

// Power in decibels relative to the linear unit.
struct PowerDb {
  double value = 0.0;
};

inline PowerLinear db_to_linear(PowerDb x) {
  return PowerLinear{std::pow(10.0, x.value / 10.0)};
}

inline PowerDb linear_to_db(PowerLinear x) {
  if (!(x.value > 0.0)) throw NonPositiveLinear(x.value);
  return PowerDb{10.0 * std::log10(x.value)};
}

}  // namespace jamopt
