#include "jamopt/sweeps.hpp"

#include <cmath>

#include "jamopt/closed_form.hpp"
#include "jamopt/errors.hpp"
#include "jamopt/units.hpp"

namespace jamopt {

namespace {

void check_grid(std::span<const double> grid, bool allow_zero) {
  if (grid.size() < 2) throw DomainError("sweep grid needs at least 2 points");
  double prev = -1.0;
  for (const double v : grid) {
    if (!std::isfinite(v) || v < 0.0 || (!allow_zero && v == 0.0)) {
      throw DomainError("sweep grid values must be finite and positive");
    }
    if (v <= prev) throw DomainError("sweep grid must be strictly increasing");
    prev = v;
  }
}

std::optional<double> db_of(double linear) {
  if (linear == 0.0) return std::nullopt;
  return 10.0 * std::log10(linear);
}

bool finite_cell(const std::optional<double>& v) {
  return !v.has_value() || std::isfinite(*v);
}

}  // namespace

std::vector<double> default_q_grid(std::size_t n_log) {
  if (n_log < 2) throw DomainError("default_q_grid: need at least 2 log points");
  std::vector<double> grid;
  grid.reserve(n_log + 1);
  grid.push_back(0.0);
  const double lo_db = -20.0;
  const double hi_db = 30.0;
  for (std::size_t i = 0; i < n_log; ++i) {
    const double db =
        lo_db + (hi_db - lo_db) * static_cast<double>(i) / static_cast<double>(n_log - 1);
    grid.push_back(std::pow(10.0, db / 10.0));
  }
  return grid;
}

std::vector<double> default_gain_grid(std::size_t n) {
  if (n < 2) throw DomainError("default_gain_grid: need at least 2 points");
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double db = -20.0 + 20.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    grid.push_back(std::pow(10.0, db / 10.0));
  }
  return grid;
}

QSweepTable sweep_q(const SystemParams& params, std::span<const double> q_grid) {
  ensure_valid(params);
  check_grid(q_grid, /*allow_zero=*/true);

  QSweepTable table;
  table.rows.reserve(q_grid.size());
  for (const double q : q_grid) {
    const double r = psi_inv(params, PowerLinear{q}).value;
    QSweepRow row;
    row.q_db = db_of(q);
    row.q_linear = q;
    row.r_bpshz = r;
    row.non_outage = detail::non_outage(params, r);
    row.avg_rate = avg_rate(params, RateBpsHz{r}).value;
    if (!finite_cell(row.q_db) || !std::isfinite(row.r_bpshz) ||
        !std::isfinite(row.non_outage) || !std::isfinite(row.avg_rate)) {
      throw Error("sweep_q produced a non-finite cell");
    }
    table.rows.push_back(row);
  }
  return table;
}

GainSweepTable sweep_gain(const SystemParams& params_template,
                          std::span<const double> gain_grid, SchemeSet schemes) {
  ensure_valid(params_template);
  check_grid(gain_grid, /*allow_zero=*/false);

  GainSweepTable table;
  table.rows.reserve(gain_grid.size());
  for (const double gain : gain_grid) {
    SystemParams p = params_template;
    p.lambda1 = 1.0 / gain;
    p.lambda2 = 1.0 / gain;

    GainSweepRow row;
    row.gain_db = 10.0 * std::log10(gain);
    row.gain_linear = gain;
    if (schemes.optimal) {
      row.avg_rate_optimal = solve_optimal(p).avg_rate_opt.value;
    }
    if (schemes.passive) {
      row.avg_rate_passive = avg_rate(p, psi_inv(p, PowerLinear{0.0})).value;
    }
    if (schemes.constant_power) {
      row.avg_rate_constant = avg_rate(p, psi_inv(p, PowerLinear{p.q_max})).value;
    }
    if (!std::isfinite(row.gain_db) || !finite_cell(row.avg_rate_optimal) ||
        !finite_cell(row.avg_rate_passive) || !finite_cell(row.avg_rate_constant)) {
      throw Error("sweep_gain produced a non-finite cell");
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace jamopt
