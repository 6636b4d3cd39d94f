#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace nthderiv {

// Exact scalar types used everywhere in this project. Integers are arbitrary
// precision; rationals are kept canonical (coprime, positive denominator)
// after every operation, so equality is plain structural equality.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// n!  Throws std::invalid_argument for n < 0.
ExactInt factorial(int n);

// Binomial coefficient with the zero convention: n!/(k!(n-k)!) when
// 0 <= k <= n, and 0 for any k outside that range. Requires n >= 0.
ExactInt binomial(int n, int k);

// (sum parts)! / prod parts[i]!  Every entry must be >= 0; the empty list
// gives 1.
ExactInt multinomial(const std::vector<int>& parts);

// base^exp for exp >= 0.
ExactRat rat_pow(const ExactRat& base, int exp);

// Canonical text form: "p/q" with the sign on p, or just "p" when q == 1.
std::string to_string(const ExactRat& value);
std::string to_string(const ExactInt& value);

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
ExactRat parse_rational(const std::string& text);

// Comma-separated list of rationals, e.g. "1,-2/3,0". No whitespace.
std::vector<ExactRat> parse_rational_list(const std::string& text);

}  // namespace nthderiv
