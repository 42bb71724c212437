#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "distrec/errors.hpp"

namespace distrec::exact {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps values in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// The two-argument cpp_rational constructor rejects negative denominators
// on some Boost releases, so fold the sign into the numerator first.
inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

inline BigInt parse_bigint(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    return BigInt(std::string(text.front() == '+' ? text.substr(1) : text));
}

inline std::string to_string(const BigInt& value) { return value.str(); }

inline std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

// floor(sqrt(x)) for x >= 0
inline BigInt isqrt(const BigInt& x)
{
    if (x < 0)
        throw DomainError("isqrt of a negative value");
    return boost::multiprecision::sqrt(x);
}

inline BigInt isqrt_ceil(const BigInt& x)
{
    BigInt r = isqrt(x);
    if (r * r < x)
        ++r;
    return r;
}

// Number of bits needed to represent |x|; 0 for x == 0.
inline unsigned bit_length(const BigInt& x)
{
    if (x == 0)
        return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

} // namespace distrec::exact
