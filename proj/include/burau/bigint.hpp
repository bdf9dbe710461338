#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace burau {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Optional sign followed by decimal digits; nullopt for anything else.
inline std::optional<BigInt> parse_decimal(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            return std::nullopt;
    BigInt v(s.substr(i));
    return s[0] == '-' ? BigInt(-v) : v;
}

// Value as int64 when it fits.
inline std::optional<std::int64_t> to_i64(const BigInt& x)
{
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (x < lo || x > hi)
        return std::nullopt;
    return x.convert_to<std::int64_t>();
}

// Generalized binomial coefficient C(e, j) for any integer e and j >= 0.
inline BigInt binomial(long long e, int j)
{
    BigInt c = 1;
    for (int i = 1; i <= j; ++i) {
        c *= BigInt(e - i + 1);
        c /= i;
    }
    return c;
}

}  // namespace burau
