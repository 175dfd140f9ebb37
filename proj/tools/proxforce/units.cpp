#include "units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "proxforce/errors.hpp"

namespace proxforce::cli {

namespace {

// Decimal exponent of each suffix relative to metres.
constexpr std::array<std::pair<std::string_view, int>, 7> kSuffixes{{
    {"nm", -9},
    {"um", -6},
    {"\xce\xbcm", -6},  // μm
    {"mm", -3},
    {"cm", -2},
    {"km", 3},
    {"m", 0},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Rewrites "<mantissa>[e<exp>]" as "<mantissa>e<exp + shift>" so the
// conversion to binary is a single correctly rounded step: 1um, 1000nm and
// 1e-6 all give the same double.
std::string shift_exponent(std::string_view number, int shift) {
  const auto e = number.find_first_of("eE");
  std::string_view mantissa = number.substr(0, e);
  long exponent = 0;
  if (e != std::string_view::npos) {
    std::string_view exp_text = number.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
      throw DomainError("not a number: '" + std::string(number) + "'");
    }
  }
  return std::string(mantissa) + "e" + std::to_string(exponent + shift);
}

}  // namespace

double parse_number(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

double parse_length(std::string_view text, bool allow_infinite) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "INF" || s == "infinite" || s == "INFINITE") {
    if (!allow_infinite) {
      throw DomainError("infinite value not allowed here: '" + std::string(text) + "'");
    }
    return std::numeric_limits<double>::infinity();
  }
  for (const auto& [suffix, shift] : kSuffixes) {
    if (s.size() > suffix.size() && s.ends_with(suffix)) {
      return parse_number(shift_exponent(s.substr(0, s.size() - suffix.size()), shift));
    }
  }
  return parse_number(s);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

}  // namespace proxforce::cli
