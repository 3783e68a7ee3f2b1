#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "solidangle/angle.hpp"
#include "solidangle/exact.hpp"

namespace solidangle::test {

inline Rational Q(std::string_view text)
{
    return Rational::parse(text);
}

inline Rational Q(long n, long d = 1)
{
    return Rational(Integer(n), Integer(d));
}

inline RationalPoint P(const char* x, const char* y)
{
    return {Q(x), Q(y)};
}

inline double turns(double y, double x)
{
    double a = std::atan2(y, x) / (2 * std::numbers::pi);
    return a < 0 ? a + 1 : a;
}

inline AngleValue atom(long x, long y)
{
    return AngleValue::atom(DirectionAtom::make(Integer(x), Integer(y)));
}

} // namespace solidangle::test
