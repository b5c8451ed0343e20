#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jamopt/params.hpp"

namespace jamopt {

// Row of the jamming-power sweep behind the rate/non-outage and average
// rate figures. q_db is absent for the q = 0 endpoint (dB of zero power
// has no finite value); every present cell is finite.
struct QSweepRow {
  std::optional<double> q_db;
  double q_linear = 0.0;
  double r_bpshz = 0.0;
  double non_outage = 0.0;
  double avg_rate = 0.0;
};

struct QSweepTable {
  std::string swept_name = "q";
  std::vector<QSweepRow> rows;
};

// Which schemes to evaluate in a gain sweep; all three by default.
struct SchemeSet {
  bool optimal = true;
  bool passive = true;
  bool constant_power = true;
};

// Row of the channel-gain sweep comparing jamming schemes. Cells of
// schemes that were not requested are absent.
struct GainSweepRow {
  double gain_db = 0.0;
  double gain_linear = 0.0;
  std::optional<double> avg_rate_optimal;
  std::optional<double> avg_rate_passive;
  std::optional<double> avg_rate_constant;
};

struct GainSweepTable {
  std::string swept_name = "gain";
  std::vector<GainSweepRow> rows;
};

// n_log log-spaced points over [-20 dB, 30 dB] preceded by the q = 0
// endpoint. n_log >= 2.
std::vector<double> default_q_grid(std::size_t n_log = 200);

// n points spaced evenly in dB over [-20 dB, 0 dB]. n >= 2.
std::vector<double> default_gain_grid(std::size_t n = 101);

// Per jamming power q: the delta-outage rate psi_inv(q), the monitor's
// non-outage probability, and the average eavesdropping rate. The grid
// must be sorted, nonnegative, and duplicate-free.
QSweepTable sweep_q(const SystemParams& params, std::span<const double> q_grid);

// Per mean eavesdropping/jamming channel gain g (sets lambda1 = lambda2 = 1/g):
// average eavesdropping rate of the requested schemes. Passive uses q = 0,
// ConstantPower uses q = q_max, Optimal uses the solved power. The grid must
// be sorted, positive, and duplicate-free.
GainSweepTable sweep_gain(const SystemParams& params_template,
                          std::span<const double> gain_grid, SchemeSet schemes = {});

}  // namespace jamopt
