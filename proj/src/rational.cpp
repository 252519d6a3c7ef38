#include "dicke/rational.hpp"

#include <stdexcept>

namespace dicke {

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  // Division normalizes sign and reduces; the two-argument constructor
  // rejects negative denominators.
  return Rational(numerator) / Rational(denominator);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string decimal_string(const Rational& value, int max_places) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += BigInt(num / den).str();
  BigInt rem = num % den;
  if (rem == 0 || max_places <= 0) {
    return out;
  }
  out += '.';
  std::string digits;
  for (int i = 0; i < max_places && rem != 0; ++i) {
    rem *= 10;
    digits += BigInt(rem / den).str();
    rem %= den;
  }
  while (!digits.empty() && digits.back() == '0') {
    digits.pop_back();
  }
  if (digits.empty()) {
    out.pop_back();
    return out;
  }
  return out + digits;
}

nlohmann::json rational_to_json(const Rational& value) {
  return nlohmann::json{
      {"num", boost::multiprecision::numerator(value).str()},
      {"den", boost::multiprecision::denominator(value).str()},
  };
}

Rational rational_from_json(const nlohmann::json& j) {
  const BigInt num(j.at("num").get<std::string>());
  const BigInt den(j.at("den").get<std::string>());
  return make_rational(num, den);
}

}  // namespace dicke
