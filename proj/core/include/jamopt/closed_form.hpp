#pragma once

#include "jamopt/params.hpp"
#include "jamopt/units.hpp"

namespace jamopt {

// Which clamp of the optimal jamming power binds.
enum class Regime {
  kNoJamming,     // eavesdropping channel strong enough: q_opt = 0
  kInterior,      // 0 < q_opt < q_max
  kPowerLimited,  // budget binds: q_opt = q_max
};

const char* to_string(Regime regime);

// Closed-form solution of the jamming power control problem.
struct ClosedFormSolution {
  RateBpsHz r_star;        // unconstrained maximizer of the average rate
  RateBpsHz r_opt;         // optimal suspicious rate after clamping
  PowerLinear q_opt;       // optimal jamming power; exactly 0 or q_max at the clamps
  RateBpsHz r_zero_jam;    // delta-outage rate with no jamming
  RateBpsHz r_max_jam;     // delta-outage rate at full jamming power
  RateBpsHz avg_rate_opt;  // average eavesdropping rate at r_opt
  Regime regime = Regime::kInterior;
};

// Rates of one channel realization.
struct ChannelRealizationRates {
  RateBpsHz r0;        // suspicious link rate log2(1 + sinr0)
  RateBpsHz r1;        // eavesdropping link rate log2(1 + snr1)
  double sinr0 = 0.0;  // g0*P / (g2*Q + sigma0_sq)
  double snr1 = 0.0;   // g1*P / sigma1_sq
};

// Per-realization SINR/SNR and rates. Gains and q must be nonnegative,
// q <= q_max; callers pass validated params.
ChannelRealizationRates instantaneous_rates(const SystemParams& params, double g0,
                                            double g1, double g2, PowerLinear q);

// Outage probability of the jammed suspicious link at rate r. For q = 0
// returns the jamming-free limit 1 - exp(-lambda0*sigma0_sq*(2^r-1)/P).
// Throws DomainError unless r > 0 and q >= 0.
Probability p0_outage(const SystemParams& params, RateBpsHz r, PowerLinear q);

// Outage probability of the eavesdropping link: 1 - exp(-lambda1*(2^r-1)*sigma1_sq/P).
Probability p1_outage(const SystemParams& params, RateBpsHz r);

// Jamming power that pins the suspicious-link outage at delta when the
// transmitter uses rate r. Strictly decreasing; zero at r = psi_inv(0).
// Throws DomainError for r <= 0 or r beyond psi_inv(0) + 1e-12 (negative
// jamming power would be required).
PowerLinear psi(const SystemParams& params, RateBpsHz r);

// Inverse of psi: the delta-outage suspicious rate under jamming power q.
// Throws DomainError for q < 0. Round trip psi(psi_inv(q)) holds to 1e-9
// relative down to q = 1e-6.
RateBpsHz psi_inv(const SystemParams& params, PowerLinear q);

// Average eavesdropping rate r * (1 - p1_outage(r)).
RateBpsHz avg_rate(const SystemParams& params, RateBpsHz r);

// Derivative of the average-rate objective in the substituted variable
// x = 2^r - 1. Positive below r_star, zero at it, negative above.
double avg_rate_derivative(const SystemParams& params, RateBpsHz r);

// Unconstrained maximizer of avg_rate: W(P/(lambda1*sigma1_sq)) / ln 2.
RateBpsHz r_star(const SystemParams& params);

// Optimal rate and jamming power with the [0, q_max] clamp applied, the
// boundary rates, the achieved average rate, and the regime tag.
ClosedFormSolution solve_optimal(const SystemParams& params);

namespace detail {
// psi without the domain guard; negative values mean r exceeds psi_inv(0).
double psi_raw(const SystemParams& params, double r);
// Non-outage probability exp(-lambda1*(2^r-1)*sigma1_sq/P) of the monitor.
double non_outage(const SystemParams& params, double r);
}  // namespace detail

}  // namespace jamopt
