#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cqc {

// Densities, contrasts and bounds are kept exact; doubles only appear when
// values are written out.
using Rational = boost::rational<std::int64_t>;

// Parses "0.5", "1", ".25", "5/6". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

// Rounds to six significant digits, the precision used for all JSON output.
double round_significant(double value, int digits = 6);

// Smallest integer >= value.
std::int64_t ceil(const Rational& value);

// Largest integer <= value.
std::int64_t floor(const Rational& value);

// An upper bound that may be +infinity (the enumeration root has no finite bound).
class Priority {
 public:
  Priority() = default;
  explicit Priority(Rational value) : value_(value) {}

  static Priority infinity() {
    Priority p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const { return value_; }
  bool positive() const { return infinite_ || value_ > 0; }

  friend bool operator<(const Priority& a, const Priority& b) {
    if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
    return a.value_ < b.value_;
  }
  friend bool operator==(const Priority& a, const Priority& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace cqc
