#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proxforce/force_result.hpp"

namespace proxforce::cli {

inline constexpr int kRecordSchema = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// One evaluated quantity with everything needed to reproduce it.
/// Infinite inputs (thickness INFINITE) are written as the string "inf";
/// a failed evaluation has a NaN value, written as null.
struct RunRecord {
  int schema = kRecordSchema;
  std::string tool_version = kToolVersion;
  std::string command;
  std::vector<std::pair<std::string, double>> inputs_si;
  std::string method;
  double value = 0.0;
  std::string unit;
  double error_estimate = 0.0;
  std::vector<Diagnostic> diagnostics;
  std::optional<std::uint64_t> seed;
  std::string status = "ok";
  std::optional<std::string> preset;
  std::optional<std::string> sweep_var;
  std::optional<double> sweep_value;

  bool ok() const { return status == "ok"; }
  std::optional<double> input(const std::string& name) const;
  std::optional<double> diagnostic(const std::string& name) const;

  friend bool operator==(const RunRecord&, const RunRecord&);
};

std::string to_json_line(const RunRecord& r);
RunRecord from_json_line(const std::string& line);

/// CSV with a header row; inputs flatten to `in.<name>` columns and
/// diagnostics to `diag.<name>` columns, RFC 4180 quoting.
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& in);

}  // namespace proxforce::cli
