#include "jamopt/params.hpp"

#include <cmath>

namespace jamopt {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::optional<ParamViolation> validate(const SystemParams& p) {
  if (!finite_positive(p.p_tx)) return ParamViolation{"p_tx", p.p_tx, "finite and > 0"};
  if (!finite_positive(p.sigma0_sq))
    return ParamViolation{"sigma0_sq", p.sigma0_sq, "finite and > 0"};
  if (!finite_positive(p.sigma1_sq))
    return ParamViolation{"sigma1_sq", p.sigma1_sq, "finite and > 0"};
  if (!finite_positive(p.lambda0))
    return ParamViolation{"lambda0", p.lambda0, "finite and > 0"};
  if (!finite_positive(p.lambda1))
    return ParamViolation{"lambda1", p.lambda1, "finite and > 0"};
  if (!finite_positive(p.lambda2))
    return ParamViolation{"lambda2", p.lambda2, "finite and > 0"};
  if (!(std::isfinite(p.delta) && p.delta > 0.0 && p.delta < 1.0))
    return ParamViolation{"delta", p.delta, "0 < delta < 1"};
  if (!finite_positive(p.q_max)) return ParamViolation{"q_max", p.q_max, "finite and > 0"};
  return std::nullopt;
}

void ensure_valid(const SystemParams& p) {
  if (auto v = validate(p)) throw InvalidParam(v->field, v->value, v->constraint);
}

}  // namespace jamopt
