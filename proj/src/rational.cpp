#include "cqc/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace cqc {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 17) {
    throw std::invalid_argument("cannot parse rational from '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("cannot parse rational from '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("cannot parse rational from empty string");

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(s.substr(0, slash), text);
    std::int64_t den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("cannot parse rational from '" + std::string(text) + "'");
    }
    std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    if (frac_part.empty()) {
      result = Rational(whole);
    } else {
      if (frac_part.size() > 15) {
        throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
      }
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
      result = Rational(whole) + Rational(parse_digits(frac_part, text), scale);
    }
  } else {
    result = Rational(parse_digits(s, text));
  }
  return negative ? -result : result;
}

double to_double(const Rational& value) { return boost::rational_cast<double>(value); }

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

std::int64_t floor(const Rational& value) {
  std::int64_t q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& value) {
  std::int64_t q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() > 0) ++q;
  return q;
}

std::string Priority::to_string() const {
  if (infinite_) return "inf";
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

}  // namespace cqc
