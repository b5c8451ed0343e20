#include "jamopt/validation.hpp"

#include <cmath>
#include <cstdio>

#include "jamopt/closed_form.hpp"
#include "jamopt/errors.hpp"
#include "jamopt/monte_carlo.hpp"

namespace jamopt {

namespace {

struct OperatingPoint {
  double r = 0.0;
  double q = 0.0;
  double tl1 = 0.0;
  double tl2 = 0.0;
  double z = 0.0;
};

std::string describe(const char* quantity, const OperatingPoint& pt, bool cdf_point) {
  char buf[128];
  if (cdf_point) {
    std::snprintf(buf, sizeof(buf), "%-8s tl1=%-8.4g tl2=%-8.4g z=%-8.4g", quantity,
                  pt.tl1, pt.tl2, pt.z);
  } else {
    std::snprintf(buf, sizeof(buf), "%-8s r=%-10.6g q=%-10.6g", quantity, pt.r, pt.q);
  }
  return buf;
}

ValidationRow make_row(std::string quantity, double closed, const MonteCarloEstimate& mc,
                       double perturbation) {
  const double shifted = closed + perturbation;
  const bool pass = std::fabs(shifted - mc.mean) <= 4.0 * mc.std_error;
  return ValidationRow{std::move(quantity), shifted, mc.mean, mc.std_error, pass};
}

}  // namespace

ValidationReport run_mc_validation(const SystemParams& params, std::uint64_t n,
                                   std::uint64_t seed, double perturbation) {
  ensure_valid(params);
  if (n < 1) throw DomainError("run_mc_validation: need at least one sample");

  const ClosedFormSolution solution = solve_optimal(params);
  const double r_zero = solution.r_zero_jam.value;

  // Operating point 0 is the solved optimum; the rest are seed-derived.
  std::vector<OperatingPoint> points;
  points.reserve(21);
  {
    OperatingPoint pt;
    pt.r = solution.r_opt.value;
    pt.q = solution.q_opt.value;
    pt.tl1 = params.lambda0 / params.p_tx;
    pt.tl2 = 1.0;
    pt.z = 1.0;
    points.push_back(pt);
  }
  for (int k = 1; k <= 20; ++k) {
    const auto u = [&](int j) {
      return rng::unit_open_closed(seed, 0xC0FFEEULL + 8ULL * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(j));
    };
    OperatingPoint pt;
    pt.r = r_zero * (0.15 + 0.8 * u(0));
    pt.q = 1e-3 * std::exp(u(1) * std::log(params.q_max / 1e-3));
    pt.tl1 = std::pow(10.0, 2.0 * u(2) - 1.0);
    pt.tl2 = std::pow(10.0, 2.0 * u(3) - 1.0);
    pt.z = 3.0 * u(4) / pt.tl1;
    points.push_back(pt);
  }

  ValidationReport report;
  report.n_samples = n;
  report.seed = seed;
  report.rows.reserve(points.size() * 4);

  for (std::size_t i = 0; i < points.size(); ++i) {
    const OperatingPoint& pt = points[i];
    const std::uint64_t seed_outage = rng::splitmix64_at(seed, 3 * i);
    const std::uint64_t seed_avg = rng::splitmix64_at(seed, 3 * i + 1);
    const std::uint64_t seed_cdf = rng::splitmix64_at(seed, 3 * i + 2);

    const OutagePair outages = estimate_outages(params, RateBpsHz{pt.r},
                                                PowerLinear{pt.q}, n, seed_outage);
    report.rows.push_back(
        make_row(describe("p0_out", pt, false),
                 p0_outage(params, RateBpsHz{pt.r}, PowerLinear{pt.q}).value,
                 outages.p0, perturbation));
    report.rows.push_back(make_row(describe("p1_out", pt, false),
                                   p1_outage(params, RateBpsHz{pt.r}).value,
                                   outages.p1, perturbation));

    const MonteCarloEstimate avg_mc =
        estimate_avg_rate(params, RateBpsHz{pt.r}, PowerLinear{pt.q}, n, seed_avg);
    report.rows.push_back(make_row(describe("avg_rate", pt, false),
                                   avg_rate(params, RateBpsHz{pt.r}).value, avg_mc,
                                   perturbation));

    const MonteCarloEstimate cdf_mc =
        estimate_cdf_exp_difference(pt.tl1, pt.tl2, pt.z, n, seed_cdf);
    report.rows.push_back(make_row(describe("cdf_diff", pt, true),
                                   cdf_exp_difference(pt.tl1, pt.tl2, pt.z).value,
                                   cdf_mc, perturbation));
  }

  report.all_pass = true;
  for (const ValidationRow& row : report.rows) report.all_pass &= row.pass;
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::string out;
  out.reserve(report.rows.size() * 100 + 256);
  char line[256];
  std::snprintf(line, sizeof(line), "%-44s %-22s %-22s %-12s %s\n", "quantity",
                "closed_form", "mc_mean", "std_error", "4-sigma");
  out += line;
  std::size_t passed = 0;
  for (const ValidationRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "%-44s %-22.15g %-22.15g %-12.6g %s\n",
                  row.quantity.c_str(), row.closed_form, row.mc_mean, row.std_error,
                  row.pass ? "pass" : "FAIL");
    out += line;
    passed += row.pass;
  }
  std::snprintf(line, sizeof(line),
                "%zu/%zu checks passed (n=%llu, seed=%llu, band=4*std_error)\n", passed,
                report.rows.size(), static_cast<unsigned long long>(report.n_samples),
                static_cast<unsigned long long>(report.seed));
  out += line;
  return out;
}

}  // namespace jamopt
