#include <string>

#include <doctest.h>

#include "jamopt/closed_form.hpp"
#include "jamopt/sweeps.hpp"
#include "jamopt/table_io.hpp"
#include "oracles.hpp"

using namespace jamopt;

namespace {
const SystemParams kRef = SystemParams::defaults();

bool bit_equal(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a.has_value() || *a == *b;
}
}  // namespace

TEST_CASE("17-significant-digit formatting round-trips doubles") {
  CHECK(format_double17(0.1) == "0.10000000000000001");
  CHECK(format_double17(1000.0) == "1000");
  CHECK(format_double17(0.0) == "0");
  for (const double v : {oracle::kQOpt, oracle::kRStar, 1e-300, 6.02214076e23}) {
    CHECK(std::strtod(format_double17(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("q sweep CSV layout and exact round trip") {
  const QSweepTable table = sweep_q(kRef, default_q_grid(40));
  const std::string csv = to_csv(table);
  CHECK(csv.rfind("q_db,q_linear,r_bpshz,non_outage,avg_rate\n", 0) == 0);
  CHECK(csv.back() == '\n');
  CHECK(csv.find("\r") == std::string::npos);
  // the q = 0 endpoint serializes with an empty dB cell
  CHECK(csv.find("\n,0,") != std::string::npos);

  const QSweepTable back = parse_q_sweep_csv(csv);
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(bit_equal(back.rows[i].q_db, table.rows[i].q_db));
    CHECK(back.rows[i].q_linear == table.rows[i].q_linear);
    CHECK(back.rows[i].r_bpshz == table.rows[i].r_bpshz);
    CHECK(back.rows[i].non_outage == table.rows[i].non_outage);
    CHECK(back.rows[i].avg_rate == table.rows[i].avg_rate);
  }
}

TEST_CASE("gain sweep CSV layout and exact round trip") {
  const GainSweepTable table = sweep_gain(kRef, default_gain_grid(11));
  const std::string csv = to_csv(table);
  CHECK(csv.rfind(
            "gain_db,gain_linear,avg_rate_optimal,avg_rate_passive,avg_rate_constant\n",
            0) == 0);
  const GainSweepTable back = parse_gain_sweep_csv(csv);
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(back.rows[i].gain_db == table.rows[i].gain_db);
    CHECK(back.rows[i].gain_linear == table.rows[i].gain_linear);
    CHECK(bit_equal(back.rows[i].avg_rate_optimal, table.rows[i].avg_rate_optimal));
    CHECK(bit_equal(back.rows[i].avg_rate_passive, table.rows[i].avg_rate_passive));
    CHECK(bit_equal(back.rows[i].avg_rate_constant, table.rows[i].avg_rate_constant));
  }
}

TEST_CASE("absent scheme cells survive the CSV round trip") {
  const double grid[] = {0.01, 0.1};
  SchemeSet schemes;
  schemes.constant_power = false;
  const GainSweepTable table = sweep_gain(kRef, grid, schemes);
  const GainSweepTable back = parse_gain_sweep_csv(to_csv(table));
  REQUIRE(back.rows.size() == 2);
  CHECK_FALSE(back.rows[0].avg_rate_constant.has_value());
  CHECK(back.rows[0].avg_rate_optimal.has_value());
}

TEST_CASE("CSV parser rejects malformed input") {
  CHECK_THROWS_AS(parse_q_sweep_csv("wrong,header\n1,2\n"), Error);
  CHECK_THROWS_AS(parse_q_sweep_csv("q_db,q_linear,r_bpshz,non_outage,avg_rate\n1,2,3\n"),
                  Error);
  CHECK_THROWS_AS(
      parse_q_sweep_csv("q_db,q_linear,r_bpshz,non_outage,avg_rate\n1,2,3,x,5\n"), Error);
}

TEST_CASE("solve solution serializes to a flat JSON object") {
  const std::string json = to_json(solve_optimal(kRef));
  CHECK(json.find("\"regime\": \"Interior\"") != std::string::npos);
  CHECK(json.find("\"q_opt_linear\": 0.84840954906652") != std::string::npos);
  CHECK(json.find("\"q_opt_db\":") != std::string::npos);
  CHECK(json.find("\"r_star_bpshz\"") != std::string::npos);
  CHECK(json.find("\"r_opt_bpshz\"") != std::string::npos);
  CHECK(json.find("\"r_zero_jam_bpshz\"") != std::string::npos);
  CHECK(json.find("\"r_max_jam_bpshz\"") != std::string::npos);
  CHECK(json.find("\"avg_rate_opt_bpshz\"") != std::string::npos);

  SystemParams no_jam = kRef;
  no_jam.lambda1 = 0.5;
  const std::string json_zero = to_json(solve_optimal(no_jam));
  CHECK(json_zero.find("\"regime\": \"NoJamming\"") != std::string::npos);
  CHECK(json_zero.find("\"q_opt_db\": null") != std::string::npos);
}

TEST_CASE("sweep tables serialize to JSON with null for absent cells") {
  const QSweepTable table = sweep_q(kRef, default_q_grid(5));
  const std::string json = to_json(table);
  CHECK(json.find("\"swept_name\": \"q\"") != std::string::npos);
  CHECK(json.find("\"q_db\": null") != std::string::npos);  // the q = 0 row
  CHECK(json.find("\"avg_rate\"") != std::string::npos);
}
