#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace beslab
{
    // Always reduced, denominator positive.
    using Rational = boost::multiprecision::cpp_rational;
    using BigInt = boost::multiprecision::cpp_int;

    // "p/q" in lowest terms, or just "p" when the denominator is 1.
    auto to_string(const Rational & q) -> std::string;

    // Accepts "p", "p/q" and finite decimals such as "0.125", converted exactly.
    auto parse_rational(std::string_view text) -> Rational;

    auto choose2(std::int64_t n) -> Rational;

    auto to_double(const Rational & q) -> double;
}
