#pragma once

#include <string>
#include <string_view>

#include "jamopt/closed_form.hpp"
#include "jamopt/sweeps.hpp"

namespace jamopt {

// Decimal text with 17 significant digits ("%.17g"): round-trips any
// finite double exactly.
std::string format_double17(double v);

// CSV with '.' decimal separator, '\n' line endings, and a fixed header.
// Absent optional cells are empty fields.
// q sweep columns:    q_db,q_linear,r_bpshz,non_outage,avg_rate
// gain sweep columns: gain_db,gain_linear,avg_rate_optimal,avg_rate_passive,avg_rate_constant
std::string to_csv(const QSweepTable& table);
std::string to_csv(const GainSweepTable& table);

// Inverse of to_csv; throws Error on an unexpected header or cell count.
QSweepTable parse_q_sweep_csv(std::string_view text);
GainSweepTable parse_gain_sweep_csv(std::string_view text);

// JSON renderings (serialized text; the JSON library stays private).
std::string to_json(const QSweepTable& table);
std::string to_json(const GainSweepTable& table);

// Flat JSON object with every solution field; powers carried in both
// linear and dB (dB is null when the power is 0).
std::string to_json(const ClosedFormSolution& solution);

}  // namespace jamopt
