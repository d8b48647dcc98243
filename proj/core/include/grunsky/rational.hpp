#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace grunsky {

/// Exact rational scalar used for all series coefficients.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        try {
            return BigInt(std::string(s));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer '" + std::string(s) + "' in rational literal");
        }
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt num = parse_int(text.substr(0, slash));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rational(num, den);
}

}  // namespace grunsky
