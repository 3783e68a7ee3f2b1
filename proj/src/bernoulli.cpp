#include "solidangle/bernoulli.hpp"

#include "solidangle/errors.hpp"

namespace solidangle {

namespace {

const Rational kHalf(1, 2);

void require_coprime(const Integer& h, const Integer& k)
{
    if (h <= 0 || k <= 0)
        throw DomainError("Dedekind sum: h and k must be positive");
    if (gcd(h, k) != 1)
        throw DomainError("Dedekind sum: h=" + h.get_str() + " and k=" + k.get_str() +
                          " are not coprime");
}

template <class Sawtooth>
Rational correlate(const DedekindParams& p, Sawtooth saw)
{
    require_coprime(p.h, p.k);
    const Rational h(p.h);
    const Rational k(p.k);
    Rational sum;
    for (Integer r = 0; r < p.k; ++r) {
        const Rational residue = (Rational(r) + p.x) / k;
        sum += saw(h * residue + p.y) * saw(residue);
    }
    return sum;
}

} // namespace

Rational b1_periodic(const Rational& x)
{
    if (x.is_integer())
        return {};
    return frac(x) - kHalf;
}

Rational b1_star(const Rational& x)
{
    return frac(x) - kHalf;
}

Rational b2_periodic(const Rational& x)
{
    const Rational f = frac(x);
    return f * f - f + Rational(1, 6);
}

Rational dedekind_rademacher(const DedekindParams& p)
{
    return correlate(p, b1_periodic);
}

Rational dedekind_rademacher_star(const DedekindParams& p)
{
    return correlate(p, b1_star);
}

Rational dedekind_sum(const Integer& h, const Integer& k)
{
    require_coprime(h, k);
    // ((r/k)) ((hr/k)) = (2r - k)(2(hr mod k) - k) / 4k^2 for 0 < r < k.
    Integer sum = 0;
    Integer hr = 0;
    for (Integer r = 1; r < k; ++r) {
        hr += h;
        hr %= k;
        sum += (2 * r - k) * (2 * hr - k);
    }
    return Rational(sum) / Rational(Integer(4 * k * k));
}

Rational dedekind_reciprocity_rhs(const Integer& h, const Integer& k)
{
    const Rational hq(h);
    const Rational kq(k);
    return Rational(1, 12) * (hq / kq + Rational(1) / (hq * kq) + kq / hq) - Rational(1, 4);
}

Rational dedekind_sum_fast(const Integer& h, const Integer& k)
{
    require_coprime(h, k);
    // s(h,k) = sign * s(a,b) + acc, unwinding s(a,b) = -s(b mod a, a) + rhs(a,b).
    Integer a = h % k;
    Integer b = k;
    Rational acc;
    int sign = 1;
    while (b != 1 && a != 0) {
        acc += Rational(sign) * dedekind_reciprocity_rhs(a, b);
        sign = -sign;
        Integer next = b % a;
        b = a;
        a = next;
    }
    // s(., 1) == 0 and a == 0 only when b == 1 (coprimality).
    return acc;
}

} // namespace solidangle
