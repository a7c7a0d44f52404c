#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace ultra {

// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Whole-token parse; rejects trailing junk. Accepts the scientific forms
// emitted by format_double. Callers that need finite values must check.
inline std::optional<double> parse_double(std::string_view text) {
  double value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) return std::nullopt;
  return value;
}

// Nonnegative finite label, or nothing.
inline std::optional<double> parse_label(std::string_view text) {
  auto v = parse_double(text);
  if (!v || !std::isfinite(*v) || *v < 0.0) return std::nullopt;
  return v;
}

}  // namespace ultra
