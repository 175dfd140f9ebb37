#include "record.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "proxforce/errors.hpp"
#include "units.hpp"

namespace proxforce::cli {

namespace {

using nlohmann::json;

std::string json_number(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return format_double(v);
}

std::string json_string(const std::string& s) { return json(s).dump(); }

double number_from(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw DomainError("expected a number, got string '" + s + "'");
  }
  return j.get<double>();
}

bool same_double(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

// --- CSV helpers -----------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_number(double v) { return std::isnan(v) ? "" : format_double(v); }

double csv_to_number(const std::string& s) {
  if (s.empty() || s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return parse_number(s);
}

// Reads one RFC 4180 record; returns false at end of input.
bool read_csv_row(std::istream& in, std::vector<std::string>& row) {
  row.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  char c = 0;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  row.push_back(std::move(field));
  return true;
}

const std::vector<std::string> kFixedColumns = {
    "sweep_var", "sweep_value", "schema", "tool_version", "command",
    "preset",    "method",      "value",  "unit",         "error_estimate",
    "seed",      "status"};

}  // namespace

std::optional<double> RunRecord::input(const std::string& name) const {
  for (const auto& [k, v] : inputs_si) {
    if (k == name) return v;
  }
  return std::nullopt;
}

std::optional<double> RunRecord::diagnostic(const std::string& name) const {
  for (const auto& d : diagnostics) {
    if (d.name == name) return d.value;
  }
  return std::nullopt;
}

bool operator==(const RunRecord& a, const RunRecord& b) {
  auto same_pairs = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].first != y[i].first || !same_double(x[i].second, y[i].second)) return false;
    }
    return true;
  };
  auto same_diags = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].name != y[i].name || !same_double(x[i].value, y[i].value)) return false;
    }
    return true;
  };
  const bool sweep_same =
      a.sweep_value.has_value() == b.sweep_value.has_value() &&
      (!a.sweep_value || same_double(*a.sweep_value, *b.sweep_value));
  return a.schema == b.schema && a.tool_version == b.tool_version &&
         a.command == b.command && same_pairs(a.inputs_si, b.inputs_si) &&
         a.method == b.method && same_double(a.value, b.value) &&
         a.unit == b.unit && same_double(a.error_estimate, b.error_estimate) &&
         same_diags(a.diagnostics, b.diagnostics) && a.seed == b.seed &&
         a.status == b.status && a.preset == b.preset &&
         a.sweep_var == b.sweep_var && sweep_same;
}

std::string to_json_line(const RunRecord& r) {
  std::string out = "{\"schema\":" + std::to_string(r.schema) +
                    ",\"tool_version\":" + json_string(r.tool_version) +
                    ",\"command\":" + json_string(r.command);
  if (r.preset) out += ",\"preset\":" + json_string(*r.preset);
  if (r.sweep_var) out += ",\"sweep_var\":" + json_string(*r.sweep_var);
  if (r.sweep_value) out += ",\"sweep_value\":" + json_number(*r.sweep_value);
  out += ",\"inputs_si\":{";
  for (std::size_t i = 0; i < r.inputs_si.size(); ++i) {
    if (i) out += ',';
    out += json_string(r.inputs_si[i].first) + ':' + json_number(r.inputs_si[i].second);
  }
  out += "},\"method\":" + json_string(r.method) + ",\"value\":" + json_number(r.value) +
         ",\"unit\":" + json_string(r.unit) +
         ",\"error_estimate\":" + json_number(r.error_estimate) + ",\"diagnostics\":{";
  for (std::size_t i = 0; i < r.diagnostics.size(); ++i) {
    if (i) out += ',';
    out += json_string(r.diagnostics[i].name) + ':' + json_number(r.diagnostics[i].value);
  }
  out += '}';
  if (r.seed) out += ",\"seed\":" + std::to_string(*r.seed);
  out += ",\"status\":" + json_string(r.status) + '}';
  return out;
}

RunRecord from_json_line(const std::string& line) {
  // ordered_json keeps the key order of inputs and diagnostics.
  const auto j = nlohmann::ordered_json::parse(line);
  RunRecord r;
  r.schema = j.at("schema").get<int>();
  if (r.schema != kRecordSchema) {
    throw DomainError("unsupported record schema " + std::to_string(r.schema));
  }
  r.tool_version = j.at("tool_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  if (j.contains("preset")) r.preset = j.at("preset").get<std::string>();
  if (j.contains("sweep_var")) r.sweep_var = j.at("sweep_var").get<std::string>();
  if (j.contains("sweep_value")) r.sweep_value = number_from(j.at("sweep_value"));
  for (const auto& [k, v] : j.at("inputs_si").items()) {
    r.inputs_si.emplace_back(k, number_from(v));
  }
  r.method = j.at("method").get<std::string>();
  r.value = number_from(j.at("value"));
  r.unit = j.at("unit").get<std::string>();
  r.error_estimate = number_from(j.at("error_estimate"));
  for (const auto& [k, v] : j.at("diagnostics").items()) {
    r.diagnostics.push_back(Diagnostic{k, number_from(v)});
  }
  if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
  r.status = j.at("status").get<std::string>();
  return r;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  std::vector<std::string> inputs;
  std::vector<std::string> diags;
  auto note = [](std::vector<std::string>& names, const std::string& n) {
    for (const auto& x : names) {
      if (x == n) return;
    }
    names.push_back(n);
  };
  for (const auto& r : records) {
    for (const auto& [k, v] : r.inputs_si) note(inputs, k);
    for (const auto& d : r.diagnostics) note(diags, d.name);
  }

  std::vector<std::string> header = kFixedColumns;
  for (const auto& k : inputs) header.push_back("in." + k);
  for (const auto& k : diags) header.push_back("diag." + k);
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << csv_field(header[i]);
  }
  out << "\r\n";

  for (const auto& r : records) {
    std::vector<std::string> row = {
        r.sweep_var.value_or(""),
        r.sweep_value ? csv_number(*r.sweep_value) : "",
        std::to_string(r.schema),
        r.tool_version,
        r.command,
        r.preset.value_or(""),
        r.method,
        csv_number(r.value),
        r.unit,
        csv_number(r.error_estimate),
        r.seed ? std::to_string(*r.seed) : "",
        r.status};
    for (const auto& k : inputs) {
      const auto v = r.input(k);
      row.push_back(v ? format_double(*v) : "");
    }
    for (const auto& k : diags) {
      const auto v = r.diagnostic(k);
      row.push_back(v ? format_double(*v) : "");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(row[i]);
    }
    out << "\r\n";
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::vector<std::string> header;
  if (!read_csv_row(in, header)) return {};
  if (header.size() < kFixedColumns.size() ||
      !std::equal(kFixedColumns.begin(), kFixedColumns.end(), header.begin())) {
    throw DomainError("CSV header does not match the record layout");
  }
  std::vector<RunRecord> out;
  std::vector<std::string> row;
  while (read_csv_row(in, row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != header.size()) throw DomainError("CSV row has wrong field count");
    RunRecord r;
    if (!row[0].empty()) r.sweep_var = row[0];
    if (!row[1].empty()) r.sweep_value = csv_to_number(row[1]);
    r.schema = std::stoi(row[2]);
    r.tool_version = row[3];
    r.command = row[4];
    if (!row[5].empty()) r.preset = row[5];
    r.method = row[6];
    r.value = csv_to_number(row[7]);
    r.unit = row[8];
    r.error_estimate = csv_to_number(row[9]);
    if (!row[10].empty()) r.seed = std::stoull(row[10]);
    r.status = row[11];
    for (std::size_t i = kFixedColumns.size(); i < header.size(); ++i) {
      if (row[i].empty()) continue;
      const std::string& name = header[i];
      if (name.starts_with("in.")) {
        r.inputs_si.emplace_back(name.substr(3), csv_to_number(row[i]));
      } else if (name.starts_with("diag.")) {
        r.diagnostics.push_back(Diagnostic{name.substr(5), csv_to_number(row[i])});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace proxforce::cli
