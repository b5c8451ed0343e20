#include "jamopt/table_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <vector>

#include <json.hpp>

#include "jamopt/errors.hpp"

namespace jamopt {

namespace {

constexpr const char* kQHeader = "q_db,q_linear,r_bpshz,non_outage,avg_rate";
constexpr const char* kGainHeader =
    "gain_db,gain_linear,avg_rate_optimal,avg_rate_passive,avg_rate_constant";

void append_cell(std::string& out, const std::optional<double>& v) {
  if (v) out += format_double17(*v);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_cell(std::string_view cell) {
  const std::string s(cell);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw Error("csv: malformed numeric cell '" + s + "'");
  }
  return v;
}

std::optional<double> parse_optional_cell(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  return parse_cell(cell);
}

std::vector<std::vector<std::string_view>> parse_rows(std::string_view text,
                                                      const char* header) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != header) {
    throw Error(std::string("csv: expected header '") + header + "'");
  }
  std::vector<std::vector<std::string_view>> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> cells = split(lines[i], ',');
    if (cells.size() != 5) throw Error("csv: expected 5 cells per row");
    rows.push_back(std::move(cells));
  }
  return rows;
}

nlohmann::json json_cell(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string format_double17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const QSweepTable& table) {
  std::string out = kQHeader;
  out += '\n';
  for (const QSweepRow& row : table.rows) {
    append_cell(out, row.q_db);
    out += ',';
    out += format_double17(row.q_linear);
    out += ',';
    out += format_double17(row.r_bpshz);
    out += ',';
    out += format_double17(row.non_outage);
    out += ',';
    out += format_double17(row.avg_rate);
    out += '\n';
  }
  return out;
}

std::string to_csv(const GainSweepTable& table) {
  std::string out = kGainHeader;
  out += '\n';
  for (const GainSweepRow& row : table.rows) {
    out += format_double17(row.gain_db);
    out += ',';
    out += format_double17(row.gain_linear);
    out += ',';
    append_cell(out, row.avg_rate_optimal);
    out += ',';
    append_cell(out, row.avg_rate_passive);
    out += ',';
    append_cell(out, row.avg_rate_constant);
    out += '\n';
  }
  return out;
}

QSweepTable parse_q_sweep_csv(std::string_view text) {
  QSweepTable table;
  for (const auto& cells : parse_rows(text, kQHeader)) {
    QSweepRow row;
    row.q_db = parse_optional_cell(cells[0]);
    row.q_linear = parse_cell(cells[1]);
    row.r_bpshz = parse_cell(cells[2]);
    row.non_outage = parse_cell(cells[3]);
    row.avg_rate = parse_cell(cells[4]);
    table.rows.push_back(row);
  }
  return table;
}

GainSweepTable parse_gain_sweep_csv(std::string_view text) {
  GainSweepTable table;
  for (const auto& cells : parse_rows(text, kGainHeader)) {
    GainSweepRow row;
    row.gain_db = parse_cell(cells[0]);
    row.gain_linear = parse_cell(cells[1]);
    row.avg_rate_optimal = parse_optional_cell(cells[2]);
    row.avg_rate_passive = parse_optional_cell(cells[3]);
    row.avg_rate_constant = parse_optional_cell(cells[4]);
    table.rows.push_back(row);
  }
  return table;
}

std::string to_json(const QSweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const QSweepRow& row : table.rows) {
    rows.push_back({{"q_db", json_cell(row.q_db)},
                    {"q_linear", row.q_linear},
                    {"r_bpshz", row.r_bpshz},
                    {"non_outage", row.non_outage},
                    {"avg_rate", row.avg_rate}});
  }
  return nlohmann::json{{"swept_name", table.swept_name}, {"rows", rows}}.dump(2);
}

std::string to_json(const GainSweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const GainSweepRow& row : table.rows) {
    rows.push_back({{"gain_db", row.gain_db},
                    {"gain_linear", row.gain_linear},
                    {"avg_rate_optimal", json_cell(row.avg_rate_optimal)},
                    {"avg_rate_passive", json_cell(row.avg_rate_passive)},
                    {"avg_rate_constant", json_cell(row.avg_rate_constant)}});
  }
  return nlohmann::json{{"swept_name", table.swept_name}, {"rows", rows}}.dump(2);
}

std::string to_json(const ClosedFormSolution& s) {
  nlohmann::json j{
      {"regime", to_string(s.regime)},
      {"r_star_bpshz", s.r_star.value},
      {"r_opt_bpshz", s.r_opt.value},
      {"r_zero_jam_bpshz", s.r_zero_jam.value},
      {"r_max_jam_bpshz", s.r_max_jam.value},
      {"avg_rate_opt_bpshz", s.avg_rate_opt.value},
      {"q_opt_linear", s.q_opt.value},
  };
  if (s.q_opt.value > 0.0) {
    j["q_opt_db"] = linear_to_db(s.q_opt).value;
  } else {
    j["q_opt_db"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace jamopt
