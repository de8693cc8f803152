#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wps {

using Integer = mpz_class;
using Rational = mpq_class;

// Nonnegative gcd/lcm of a sequence; gcd of an empty sequence is 0, lcm is 1.
Integer gcd_of(std::span<const Integer> xs);
Integer lcm_of(std::span<const Integer> xs);

// Extended Euclid: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

Integer binomial(long n, long k);

bool divides(const Integer& d, const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Accepts an optional sign followed by decimal digits; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

// Comma-separated decimal list, e.g. "2,3,4,15,25".
std::vector<Integer> parse_integer_list(std::string_view text);

}  // namespace wps
