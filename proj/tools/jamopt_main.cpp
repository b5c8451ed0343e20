// jamopt: closed-form jamming power control for a full-duplex monitor
// eavesdropping a Rayleigh-fading link, with Monte-Carlo cross-validation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jamopt/closed_form.hpp"
#include "jamopt/errors.hpp"
#include "jamopt/params.hpp"
#include "jamopt/sweeps.hpp"
#include "jamopt/table_io.hpp"
#include "jamopt/units.hpp"
#include "jamopt/validation.hpp"

namespace {

struct ParamFlags {
  std::optional<double> p_linear, p_db;
  std::optional<double> qmax_linear, qmax_db;
  std::optional<double> delta;
  std::optional<double> lambda0, lambda1, lambda2;
  std::optional<double> sigma0_sq, sigma1_sq;
};

struct OutputFlags {
  std::string out_path;
  std::string format = "csv";
};

void add_param_flags(CLI::App* cmd, ParamFlags* f) {
  auto* p = cmd->add_option("--p", f->p_linear, "Suspicious transmit power P, linear");
  auto* p_db = cmd->add_option("--p-db", f->p_db, "Suspicious transmit power P, dB");
  p->excludes(p_db);
  p_db->excludes(p);
  auto* q = cmd->add_option("--qmax", f->qmax_linear, "Maximum jamming power, linear");
  auto* q_db = cmd->add_option("--qmax-db", f->qmax_db, "Maximum jamming power, dB");
  q->excludes(q_db);
  q_db->excludes(q);
  cmd->add_option("--delta", f->delta, "Target outage probability at the suspicious receiver");
  cmd->add_option("--lambda0", f->lambda0, "Fading rate of the suspicious link gain g0");
  cmd->add_option("--lambda1", f->lambda1, "Fading rate of the eavesdropping link gain g1");
  cmd->add_option("--lambda2", f->lambda2, "Fading rate of the jamming link gain g2");
  cmd->add_option("--sigma0-sq", f->sigma0_sq, "Noise power at the suspicious receiver");
  cmd->add_option("--sigma1-sq", f->sigma1_sq, "Noise power at the monitor");
}

void add_output_flags(CLI::App* cmd, OutputFlags* f, bool with_format) {
  cmd->add_option("--out", f->out_path, "Write output to a file instead of stdout");
  if (with_format) {
    cmd->add_option("--format", f->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

jamopt::SystemParams resolve_params(const ParamFlags& f) {
  jamopt::SystemParams p = jamopt::SystemParams::defaults();
  if (f.p_linear) p.p_tx = *f.p_linear;
  if (f.p_db) p.p_tx = jamopt::db_to_linear(jamopt::PowerDb{*f.p_db}).value;
  if (f.qmax_linear) p.q_max = *f.qmax_linear;
  if (f.qmax_db) p.q_max = jamopt::db_to_linear(jamopt::PowerDb{*f.qmax_db}).value;
  if (f.delta) p.delta = *f.delta;
  if (f.lambda0) p.lambda0 = *f.lambda0;
  if (f.lambda1) p.lambda1 = *f.lambda1;
  if (f.lambda2) p.lambda2 = *f.lambda2;
  if (f.sigma0_sq) p.sigma0_sq = *f.sigma0_sq;
  if (f.sigma1_sq) p.sigma1_sq = *f.sigma1_sq;
  return p;
}

std::string flag_for_field(const std::string& field) {
  if (field == "p_tx") return "--p/--p-db";
  if (field == "q_max") return "--qmax/--qmax-db";
  if (field == "sigma0_sq") return "--sigma0-sq";
  if (field == "sigma1_sq") return "--sigma1-sq";
  return "--" + field;  // delta, lambda0, lambda1, lambda2
}

jamopt::SystemParams resolve_and_validate(const ParamFlags& f) {
  const jamopt::SystemParams p = resolve_params(f);
  if (const auto violation = jamopt::validate(p)) {
    throw jamopt::InvalidParam(flag_for_field(violation->field), violation->value,
                               violation->constraint);
  }
  return p;
}

void emit(const OutputFlags& out, const std::string& text) {
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.out_path, std::ios::binary);
  if (!file) throw jamopt::Error("cannot open output file: " + out.out_path);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Optimal jamming power control for proactive eavesdropping over "
      "Rayleigh fading channels"};
  app.require_subcommand(1);

  ParamFlags solve_params, sweep_q_params, sweep_gain_params, validate_params;
  OutputFlags solve_out, sweep_q_out, sweep_gain_out, validate_out;
  std::size_t q_grid_size = 200;
  std::size_t gain_grid_size = 101;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t mc_seed = 42;

  CLI::App* solve =
      app.add_subcommand("solve", "Closed-form optimal rate and jamming power (JSON)");
  add_param_flags(solve, &solve_params);
  add_output_flags(solve, &solve_out, /*with_format=*/false);

  CLI::App* sweep_q_cmd = app.add_subcommand(
      "sweep-q", "Rate, non-outage, and average rate versus jamming power");
  add_param_flags(sweep_q_cmd, &sweep_q_params);
  add_output_flags(sweep_q_cmd, &sweep_q_out, /*with_format=*/true);
  sweep_q_cmd->add_option("--grid", q_grid_size, "Number of log-spaced q points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));

  CLI::App* sweep_gain_cmd = app.add_subcommand(
      "sweep-gain",
      "Average rate of optimal/passive/constant-power schemes versus mean "
      "eavesdropping and jamming channel gain");
  add_param_flags(sweep_gain_cmd, &sweep_gain_params);
  add_output_flags(sweep_gain_cmd, &sweep_gain_out, /*with_format=*/true);
  sweep_gain_cmd->add_option("--grid", gain_grid_size, "Number of gain points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));

  CLI::App* mc_validate_cmd = app.add_subcommand(
      "mc-validate", "Monte-Carlo cross-check of every closed form (4-sigma bands)");
  add_param_flags(mc_validate_cmd, &validate_params);
  add_output_flags(mc_validate_cmd, &validate_out, /*with_format=*/false);
  mc_validate_cmd->add_option("--samples", mc_samples, "Samples per estimate (>= 10000)")
      ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1} << 40));
  mc_validate_cmd->add_option("--seed", mc_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      const auto params = resolve_and_validate(solve_params);
      emit(solve_out, jamopt::to_json(jamopt::solve_optimal(params)) + "\n");
      return 0;
    }
    if (sweep_q_cmd->parsed()) {
      const auto params = resolve_and_validate(sweep_q_params);
      const auto grid = jamopt::default_q_grid(q_grid_size);
      const auto table = jamopt::sweep_q(params, grid);
      emit(sweep_q_out, sweep_q_out.format == "json" ? jamopt::to_json(table) + "\n"
                                                     : jamopt::to_csv(table));
      return 0;
    }
    if (sweep_gain_cmd->parsed()) {
      const auto params = resolve_and_validate(sweep_gain_params);
      const auto grid = jamopt::default_gain_grid(gain_grid_size);
      const auto table = jamopt::sweep_gain(params, grid);
      emit(sweep_gain_out, sweep_gain_out.format == "json" ? jamopt::to_json(table) + "\n"
                                                           : jamopt::to_csv(table));
      return 0;
    }
    if (mc_validate_cmd->parsed()) {
      const auto params = resolve_and_validate(validate_params);
      const auto report = jamopt::run_mc_validation(params, mc_samples, mc_seed);
      emit(validate_out, jamopt::format_report(report));
      return report.all_pass ? 0 : 1;
    }
  } catch (const jamopt::InvalidParam& e) {
    std::cerr << "error: " << e.field() << " = " << e.value() << " violates "
              << e.constraint() << "\n";
    return 2;
  } catch (const jamopt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
