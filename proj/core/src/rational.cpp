#include "kuniv/rational.hpp"

#include "kuniv/error.hpp"

namespace kuniv {

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator)
    : ExactRational(Integer(numerator), Integer(denominator)) {}

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = Value(numerator, denominator);
}

ExactRational ExactRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_int(text), Integer(1));
  return ExactRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string ExactRational::to_string() const {
  auto den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

ExactRational ExactRational::reciprocal() const {
  if (value_ == 0) throw InvalidArgument("reciprocal of zero");
  return ExactRational(denominator(), numerator());
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw InvalidArgument("division by zero");
  return ExactRational(a.value_ / b.value_);
}

}  // namespace kuniv
