#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "record.hpp"

namespace proxforce::cli {
namespace {

RunRecord sample_record() {
  RunRecord r;
  r.command = "yukawa sphere-plate";
  r.inputs_si = {{"rho1", 2330.0}, {"D1", std::numeric_limits<double>::infinity()}, {"R", 148.7e-6}};
  r.method = "pfa-simple";
  r.value = -5.302582877234203e-35;
  r.unit = "N";
  r.error_estimate = 0.0;
  r.diagnostics = {{"lambda_over_R", 0.0006724949562878277}};
  return r;
}

TEST(Record, JsonFieldOrderAndInfinity) {
  const auto line = to_json_line(sample_record());
  EXPECT_EQ(line.rfind("{\"schema\":1,\"tool_version\":\"1.0.0\",\"command\":", 0), 0u) << line;
  EXPECT_NE(line.find("\"D1\":\"inf\""), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(from_json_line(line), sample_record());
}

TEST(Record, JsonOptionalFields) {
  auto r = sample_record();
  r.seed = 18446744073709551615ULL;
  r.preset = "ref21-22";
  r.sweep_var = "lambda";
  r.sweep_value = 1e-9;
  r.status = "error: quadrature \"did not\" converge";
  r.value = std::numeric_limits<double>::quiet_NaN();
  const auto back = from_json_line(to_json_line(r));
  EXPECT_EQ(back, r);
  EXPECT_TRUE(std::isnan(back.value));
  EXPECT_EQ(*back.seed, 18446744073709551615ULL);
}

TEST(Record, RandomRoundTripProperty) {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<std::uint64_t> bits;
  auto any_double = [&] {
    double v;
    do {
      const std::uint64_t b = bits(gen);
      std::memcpy(&v, &b, sizeof v);
    } while (!std::isfinite(v));
    return v;
  };
  for (int i = 0; i < 300; ++i) {
    RunRecord r;
    r.command = i % 2 ? "gravity plate-plate" : "yukawa layered";
    r.method = "mc";
    r.value = any_double();
    r.error_estimate = std::abs(any_double());
    r.unit = "Pa";
    r.inputs_si = {{"a", any_double()}, {"D2", i % 3 ? any_double() : INFINITY}};
    r.diagnostics = {{"x,y", any_double()}, {"q\"uote", any_double()}};
    if (i % 4 == 0) r.seed = bits(gen);
    std::vector<RunRecord> one{r};
    ASSERT_EQ(from_json_line(to_json_line(r)), r) << to_json_line(r);
    std::stringstream csv;
    write_csv(csv, one);
    ASSERT_EQ(read_csv(csv), one) << csv.str();
  }
}

TEST(Record, CsvFlattensAndQuotes) {
  std::vector<RunRecord> rows{sample_record(), sample_record()};
  rows[1].method = "exact";
  rows[1].diagnostics.push_back({"finite_size_factor", 0.99});
  rows[1].status = "error: a, \"b\"";
  std::stringstream out;
  write_csv(out, rows);
  const std::string text = out.str();
  EXPECT_NE(text.find("in.rho1"), std::string::npos);
  EXPECT_NE(text.find("diag.finite_size_factor"), std::string::npos);
  EXPECT_NE(text.find("\"error: a, \"\"b\"\"\""), std::string::npos);
  EXPECT_NE(text.find("\r\n"), std::string::npos);
  const auto back = read_csv(out);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1], rows[1]);
  EXPECT_EQ(back[0].diagnostics.size(), 1u);
}

TEST(Record, Lookups) {
  const auto r = sample_record();
  EXPECT_EQ(*r.input("R"), 148.7e-6);
  EXPECT_FALSE(r.input("nope"));
  EXPECT_EQ(*r.diagnostic("lambda_over_R"), 0.0006724949562878277);
}

}  // namespace
}  // namespace proxforce::cli
