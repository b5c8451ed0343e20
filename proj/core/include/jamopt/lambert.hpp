#pragma once

namespace jamopt {

// Principal-branch Lambert W on x >= 0: the unique w >= 0 with w*e^w = x.
// Residual contract: |w*e^w - x| <= 1e-12 * max(x, 1).
// Throws DomainError for x < 0 or non-finite x.
double lambert_w0(double x);

// W(e^ln_x) for finite ln_x, i.e. the w > 0 solving w + ln w = ln_x.
// Stays accurate far beyond the overflow range of exp(ln_x); agrees with
// lambert_w0(exp(ln_x)) to 1e-12 relative wherever the latter is
// representable. Throws DomainError for non-finite input and
// ConvergenceError if the iteration budget is exhausted.
double lambert_w0_of_exp(double ln_x);

}  // namespace jamopt
