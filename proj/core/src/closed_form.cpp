#include "jamopt/closed_form.hpp"

#include <algorithm>
#include <limits>
#include <cassert>
#include <cmath>

#include "jamopt/errors.hpp"
#include "jamopt/lambert.hpp"

namespace jamopt {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn2Lo = 2.3190468138462996e-17;  // ln 2 - kLn2

// 2^r - 1 with the r*ln2 product carried in double-double; keeps the
// substituted variable x accurate to ~1 ulp, which matters because psi's
// cancellation near psi_inv(0) amplifies any error in x by ~1e7.
double rate_to_x(double r) {
  const double p_hi = r * kLn2;
  const double p_lo = std::fma(r, kLn2, -p_hi) + r * kLn2Lo;
  const double x = std::expm1(p_hi);
  return x + (1.0 + x) * p_lo;
}

double x_to_rate(double x) { return std::log1p(x) / kLn2; }

double psi_inv_zero(const SystemParams& p) {
  const double m = -std::log1p(-p.delta);  // -ln(1 - delta)
  return x_to_rate(p.p_tx * m / (p.lambda0 * p.sigma0_sq));
}

// Solves d + log1p(d/c) = m for d in (0, m), c > 0, m > 0, by Newton with
// a bisection safeguard. d is the Lambert-W value shifted by c, which keeps
// full precision where the two unshifted terms would cancel (c ~ 1e7 for
// q ~ 1e-6 at reference noise/fading values).
double solve_rate_gap(double c, double m) {
  double lo = 0.0;
  double hi = m;
  double d = std::min(m, c * std::expm1(m));
  for (int i = 0; i < 100; ++i) {
    const double h = d + std::log1p(d / c) - m;
    if (h > 0.0) {
      hi = d;
    } else if (h < 0.0) {
      lo = d;
    } else {
      return d;
    }
    const double deriv = 1.0 + 1.0 / (c + d);
    double next = d - h / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - d) <= 1e-16 * next) return next;
    d = next;
  }
  return d;
}

}  // namespace

namespace detail {

double psi_raw(const SystemParams& p, double r) {
  const double x = rate_to_x(r);
  const double a = p.lambda0 * p.sigma0_sq / p.p_tx;
  const double m = -std::log1p(-p.delta);
  // t = m - a*x cancels almost completely near psi_inv(0); the two-product
  // plus Sterbenz subtraction keeps the tiny difference exact.
  const double h = a * x;
  const double l = std::fma(a, x, -h);
  const double t = (m - h) - l;
  return p.p_tx * p.lambda2 * std::expm1(t) / (p.lambda0 * x);
}

double non_outage(const SystemParams& p, double r) {
  const double x = rate_to_x(r);
  return std::exp(-p.lambda1 * x * p.sigma1_sq / p.p_tx);
}

}  // namespace detail

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::kNoJamming:
      return "NoJamming";
    case Regime::kInterior:
      return "Interior";
    case Regime::kPowerLimited:
      return "PowerLimited";
  }
  return "Unknown";
}

ChannelRealizationRates instantaneous_rates(const SystemParams& p, double g0,
                                            double g1, double g2, PowerLinear q) {
  assert(g0 >= 0.0 && g1 >= 0.0 && g2 >= 0.0);
  assert(q.value >= 0.0 && q.value <= p.q_max);
  const double sinr0 = g0 * p.p_tx / (g2 * q.value + p.sigma0_sq);
  const double snr1 = g1 * p.p_tx / p.sigma1_sq;
  return ChannelRealizationRates{RateBpsHz{std::log1p(sinr0) / kLn2},
                                 RateBpsHz{std::log1p(snr1) / kLn2}, sinr0, snr1};
}

Probability p0_outage(const SystemParams& p, RateBpsHz r, PowerLinear q) {
  if (!(r.value > 0.0)) throw DomainError("p0_outage: rate must be > 0");
  if (!(q.value >= 0.0)) throw DomainError("p0_outage: jamming power must be >= 0");
  const double x = rate_to_x(r.value);
  const double decay = p.lambda0 * p.sigma0_sq * x / p.p_tx;
  if (q.value == 0.0) return Probability{-std::expm1(-decay)};
  // 1 - e^{-decay}/(1 + rho) with rho the rate ratio of the two exponentials
  const double rho = p.lambda0 * x * q.value / (p.p_tx * p.lambda2);
  return Probability{-std::expm1(-decay - std::log1p(rho))};
}

Probability p1_outage(const SystemParams& p, RateBpsHz r) {
  assert(r.value >= 0.0);
  return Probability{1.0 - detail::non_outage(p, r.value)};
}

PowerLinear psi(const SystemParams& p, RateBpsHz r) {
  if (!(r.value > 0.0)) throw DomainError("psi: rate must be > 0");
  if (r.value > psi_inv_zero(p) + 1e-12) {
    throw DomainError("psi: rate exceeds the zero-jamming rate psi_inv(0)");
  }
  return PowerLinear{std::max(detail::psi_raw(p, r.value), 0.0)};
}

RateBpsHz psi_inv(const SystemParams& p, PowerLinear q) {
  if (!(q.value >= 0.0)) throw DomainError("psi_inv: jamming power must be >= 0");
  const double m = -std::log1p(-p.delta);
  if (q.value == 0.0) {
    return RateBpsHz{x_to_rate(p.p_tx * m / (p.lambda0 * p.sigma0_sq))};
  }
  const double c = p.sigma0_sq * p.lambda2 / q.value;
  const double d = solve_rate_gap(c, m);
  double r = x_to_rate(d * p.p_tx / (p.sigma0_sq * p.lambda0));

  // The rate double quantizes x, and near psi_inv(0) one ulp of r moves
  // psi by several 1e-9 relative; settle on whichever neighboring double
  // reproduces q best.
  double best = std::fabs(detail::psi_raw(p, r) - q.value);
  double lo = r, hi = r;
  for (int k = 0; k < 2; ++k) {
    lo = std::nextafter(lo, 0.0);
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    for (const double cand : {lo, hi}) {
      const double err = std::fabs(detail::psi_raw(p, cand) - q.value);
      if (err < best) {
        best = err;
        r = cand;
      }
    }
  }
  return RateBpsHz{r};
}

RateBpsHz avg_rate(const SystemParams& p, RateBpsHz r) {
  assert(r.value >= 0.0);
  return RateBpsHz{r.value * detail::non_outage(p, r.value)};
}

double avg_rate_derivative(const SystemParams& p, RateBpsHz r) {
  assert(r.value > 0.0);
  const double x = rate_to_x(r.value);
  const double b = p.lambda1 * p.sigma1_sq / p.p_tx;
  return std::exp(-b * x) * (1.0 / (kLn2 * (1.0 + x)) - b * std::log1p(x) / kLn2);
}

RateBpsHz r_star(const SystemParams& p) {
  return RateBpsHz{lambert_w0(p.p_tx / (p.lambda1 * p.sigma1_sq)) / kLn2};
}

ClosedFormSolution solve_optimal(const SystemParams& p) {
  ensure_valid(p);
  const double rs = r_star(p).value;
  const double r_zero = psi_inv(p, PowerLinear{0.0}).value;
  const double r_max = psi_inv(p, PowerLinear{p.q_max}).value;

  ClosedFormSolution s;
  s.r_star = RateBpsHz{rs};
  s.r_zero_jam = RateBpsHz{r_zero};
  s.r_max_jam = RateBpsHz{r_max};
  s.r_opt = RateBpsHz{std::max(std::min(r_zero, rs), r_max)};

  // min/max form keeps q_opt exact at the clamps, which keeps the regime
  // classification bit-exact.
  const double q_unclamped = detail::psi_raw(p, rs);
  if (q_unclamped <= 0.0) {
    s.q_opt = PowerLinear{0.0};
    s.regime = Regime::kNoJamming;
  } else if (q_unclamped >= p.q_max) {
    s.q_opt = PowerLinear{p.q_max};
    s.regime = Regime::kPowerLimited;
  } else {
    s.q_opt = PowerLinear{q_unclamped};
    s.regime = Regime::kInterior;
  }
  s.avg_rate_opt = avg_rate(p, s.r_opt);
  return s;
}

}  // namespace jamopt
