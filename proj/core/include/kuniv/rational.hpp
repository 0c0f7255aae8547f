#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kuniv {

/// Arbitrary precision rational, always reduced with a positive denominator.
class ExactRational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactRational() = default;
  ExactRational(std::int64_t numerator, std::int64_t denominator = 1);
  ExactRational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p/q" or an integer.  Throws InvalidArgument otherwise.
  static ExactRational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  double to_double() const { return value_.convert_to<double>(); }
  std::string to_string() const;

  ExactRational reciprocal() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) { return ExactRational(a.value_ + b.value_); }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) { return ExactRational(a.value_ - b.value_); }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) { return ExactRational(a.value_ * b.value_); }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit ExactRational(Value v) : value_(std::move(v)) {}
  Value value_{0};
};

}  // namespace kuniv
