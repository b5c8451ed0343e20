#include <doctest.h>

#include "jamopt/validation.hpp"

using namespace jamopt;

namespace {
const SystemParams kRef = SystemParams::defaults();
}

TEST_CASE("validation report passes on the reference scenario") {
  const ValidationReport report = run_mc_validation(kRef, 100000, 42);
  CHECK(report.all_pass);
  CHECK(report.rows.size() == 84);  // (1 optimum + 20 random points) x 4 quantities
  CHECK(report.n_samples == 100000);
  CHECK(report.seed == 42);
  for (const ValidationRow& row : report.rows) {
    CHECK(row.pass);
    CHECK(row.std_error > 0.0);
  }
}

TEST_CASE("validation report is deterministic for a fixed seed") {
  const ValidationReport a = run_mc_validation(kRef, 20000, 7);
  const ValidationReport b = run_mc_validation(kRef, 20000, 7);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].mc_mean == b.rows[i].mc_mean);
    CHECK(a.rows[i].closed_form == b.rows[i].closed_form);
    CHECK(a.rows[i].quantity == b.rows[i].quantity);
  }
  CHECK(format_report(a) == format_report(b));

  const ValidationReport c = run_mc_validation(kRef, 20000, 8);
  bool any_differs = false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    any_differs |= a.rows[i].mc_mean != c.rows[i].mc_mean;
  }
  CHECK(any_differs);
}

TEST_CASE("a perturbed closed form trips the 4-sigma bands") {
  const ValidationReport report = run_mc_validation(kRef, 100000, 42, 0.02);
  CHECK_FALSE(report.all_pass);
  std::size_t failed = 0;
  for (const ValidationRow& row : report.rows) failed += !row.pass;
  CHECK(failed > report.rows.size() / 2);
}

TEST_CASE("formatted report carries one line per check plus header and summary") {
  const ValidationReport report = run_mc_validation(kRef, 10000, 3);
  const std::string text = format_report(report);
  std::size_t lines = 0;
  for (const char ch : text) lines += ch == '\n';
  CHECK(lines == report.rows.size() + 2);
  CHECK(text.find("4-sigma") != std::string::npos);
  CHECK(text.find("checks passed") != std::string::npos);
}

TEST_CASE("validation rejects unusable inputs") {
  SystemParams bad = kRef;
  bad.delta = -1.0;
  CHECK_THROWS_AS(run_mc_validation(bad, 1000, 1), InvalidParam);
  CHECK_THROWS_AS(run_mc_validation(kRef, 0, 1), DomainError);
}
