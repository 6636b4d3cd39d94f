#include "nthderiv/exactnum.hpp"

#include <stdexcept>

namespace nthderiv {

ExactInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be non-negative");
    }
    ExactInt result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

ExactInt binomial(int n, int k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    // Multiplicative form, exact at every step since C(n,0..j) are integers.
    ExactInt result = 1;
    for (int j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

ExactInt multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 0) {
            throw std::invalid_argument("multinomial: parts must be non-negative");
        }
        total += p;
    }
    ExactInt result = factorial(total);
    for (int p : parts) {
        result /= factorial(p);
    }
    return result;
}

ExactRat rat_pow(const ExactRat& base, int exp) {
    if (exp < 0) {
        throw std::invalid_argument("rat_pow: exponent must be non-negative");
    }
    ExactRat result = 1;
    for (int i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

std::string to_string(const ExactRat& value) {
    // cpp_rational::str() already prints "p/q" in canonical form and omits
    // the denominator when it is 1.
    return value.str();
}

std::string to_string(const ExactInt& value) {
    return value.str();
}

namespace {

ExactInt parse_integer(const std::string& text) {
    if (text.empty() || text == "-" || text == "+") {
        throw std::invalid_argument("parse_rational: empty integer field");
    }
    try {
        return ExactInt(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: not an integer: '" + text + "'");
    }
}

}  // namespace

ExactRat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return ExactRat(parse_integer(text));
    }
    const ExactInt num = parse_integer(text.substr(0, slash));
    const ExactInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    }
    // Division canonicalizes sign and gcd.
    return ExactRat(num) / ExactRat(den);
}

std::vector<ExactRat> parse_rational_list(const std::string& text) {
    std::vector<ExactRat> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string field =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        values.push_back(parse_rational(field));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

}  // namespace nthderiv
