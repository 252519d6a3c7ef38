#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "json.hpp"

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number: always in lowest terms, denominator positive,
/// arithmetic and comparison never round.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den, accepting a negative or unreduced denominator.
/// Throws std::invalid_argument when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

double to_double(const Rational& value);

/// Decimal expansion by exact long division ("3/4" -> "0.75"), truncated to
/// max_places fractional digits, trailing zeros stripped.
std::string decimal_string(const Rational& value, int max_places = 12);

/// {"num": "<decimal string>", "den": "<decimal string>"}
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace dicke
