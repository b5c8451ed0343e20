#pragma once

#include <optional>
#include <string>

#include "jamopt/errors.hpp"

namespace jamopt {

// Scenario constants shared by every closed form and estimator.
//
// The three channel power gains are independent Exp(lambda_i) variables:
// g0 on the suspicious transmitter -> suspicious receiver link, g1 on the
// transmitter -> monitor eavesdropping link, g2 on the monitor -> suspicious
// receiver jamming link. Powers are linear and normalized against the noise
// terms below; the noise fields stay explicit so non-normalized scenarios
// work too.
//
// Member initializers are the canonical reference scenario:
// unit-mean suspicious channel, -10 dB mean eavesdropping/jamming channels,
// delta = 0.05, P = 20 dB, Q_max = 30 dB.
struct SystemParams {
  double p_tx = 100.0;     // suspicious transmit power P
  double sigma0_sq = 1.0;  // noise power at the suspicious receiver
  double sigma1_sq = 1.0;  // noise power at the monitor
  double lambda0 = 1.0;    // fading rate of g0 (mean gain 1/lambda0)
  double lambda1 = 10.0;   // fading rate of g1
  double lambda2 = 10.0;   // fading rate of g2
  double delta = 0.05;     // target outage probability at the suspicious receiver
  double q_max = 1000.0;   // maximum jamming power Q_max

  static SystemParams defaults() { return SystemParams{}; }
};

// First violated constraint found by validate(), if any.
struct ParamViolation {
  std::string field;
  double value = 0.0;
  std::string constraint;
};

// Checks every SystemParams invariant in declaration order; returns the
// first violation, or nullopt when the parameter set is usable.
std::optional<ParamViolation> validate(const SystemParams& params);

// Throws InvalidParam on the first violated constraint.
void ensure_valid(const SystemParams& params);

}  // namespace jamopt
