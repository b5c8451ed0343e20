#include "jamopt/lambert.hpp"

#include <cmath>

#include "jamopt/errors.hpp"

namespace jamopt {

namespace {

constexpr int kIterBudget = 50;

double initial_guess(double x) {
  if (x < 0.5) {
    // leading terms of W(x) = x - x^2 + 3/2 x^3 - ...
    return x * (1.0 + x * (-1.0 + 1.5 * x));
  }
  if (x < 6.0) return 0.75 * std::log1p(x);
  const double l = std::log(x);
  return l - std::log(l);
}

}  // namespace

double lambert_w0(double x) {
  if (!(x >= 0.0) || std::isinf(x)) {
    throw DomainError("lambert_w0: argument must be finite and >= 0");
  }
  if (x == 0.0) return 0.0;

  double w = initial_guess(x);
  for (int i = 0; i < kIterBudget; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) return w;
    // Halley step for f(w) = w*e^w - x
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
    double next = w - f / denom;
    if (!(next > 0.0)) next = 0.5 * w;
    const double step = std::fabs(next - w);
    w = next;
    if (step <= 1e-15 * w) return w;
  }
  throw ConvergenceError("lambert_w0: iteration budget exhausted");
}

double lambert_w0_of_exp(double ln_x) {
  if (!std::isfinite(ln_x)) {
    throw DomainError("lambert_w0_of_exp: argument must be finite");
  }

  double w;
  if (ln_x > 3.0) {
    w = ln_x - std::log(ln_x);
  } else if (ln_x < 0.0) {
    w = std::exp(ln_x);  // root is just below e^ln_x
  } else {
    w = 0.567 + 0.55 * ln_x;
  }

  // Newton on F(w) = w + ln w - ln_x; F' = (w + 1)/w
  for (int i = 0; i < kIterBudget; ++i) {
    const double f = w + std::log(w) - ln_x;
    if (f == 0.0) return w;
    double next = w - f * w / (w + 1.0);
    if (!(next > 0.0)) next = 0.5 * w;
    const double step = std::fabs(next - w);
    w = next;
    if (step <= 1e-15 * w) return w;
  }
  throw ConvergenceError("lambert_w0_of_exp: iteration budget exhausted");
}

}  // namespace jamopt
