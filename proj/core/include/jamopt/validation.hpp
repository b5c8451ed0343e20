#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamopt/params.hpp"

namespace jamopt {

// One closed-form-vs-Monte-Carlo comparison at a 4-sigma acceptance band.
struct ValidationRow {
  std::string quantity;
  double closed_form = 0.0;
  double mc_mean = 0.0;
  double std_error = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  bool all_pass = false;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Cross-checks the closed forms against the stochastic estimators: outage
// probabilities, the exponential-difference CDF, and the average rate, at
// the solved optimum plus 20 seed-derived operating points, each with an
// n-sample estimate and a |closed - mc| <= 4 * std_error pass band.
//
// perturbation (testing hook) is added to every closed-form value before
// comparison so the failure path can be exercised; production callers
// leave it at 0.
ValidationReport run_mc_validation(const SystemParams& params, std::uint64_t n,
                                   std::uint64_t seed, double perturbation = 0.0);

// Fixed-width printable table with one line per row and a summary line.
std::string format_report(const ValidationReport& report);

}  // namespace jamopt
