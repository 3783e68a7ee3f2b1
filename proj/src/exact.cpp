#include "solidangle/exact.hpp"

#include <cctype>
#include <ostream>

#include "solidangle/errors.hpp"

namespace solidangle {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw ParseError("malformed rational literal '" + std::string(text) + "'");

    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::str() const
{
    return q_.get_str(10);
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-q_));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw DomainError("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

Rational abs(const Rational& q)
{
    return q.sign() < 0 ? -q : q;
}

std::string LatticeVector::str() const
{
    return "(" + x.get_str() + "," + y.get_str() + ")";
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b)
{
    return {a.x + b.x, a.y + b.y};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b)
{
    return {a.x - b.x, a.y - b.y};
}

LatticeVector operator*(const Integer& s, const LatticeVector& v)
{
    return {s * v.x, s * v.y};
}

Integer det(const LatticeVector& a, const LatticeVector& b)
{
    return a.x * b.y - a.y * b.x;
}

Integer dot(const LatticeVector& a, const LatticeVector& b)
{
    return a.x * b.x + a.y * b.y;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v)
{
    return os << v.str();
}

std::string RationalPoint::str() const
{
    return "(" + x.str() + "," + y.str() + ")";
}

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b)
{
    return {a.x + b.x, a.y + b.y};
}

RationalPoint operator-(const RationalPoint& a, const RationalPoint& b)
{
    return {a.x - b.x, a.y - b.y};
}

RationalPoint operator*(const Rational& s, const RationalPoint& p)
{
    return {s * p.x, s * p.y};
}

Rational det(const RationalPoint& a, const RationalPoint& b)
{
    return a.x * b.y - a.y * b.x;
}

Rational dot(const RationalPoint& a, const RationalPoint& b)
{
    return a.x * b.x + a.y * b.y;
}

RationalPoint to_point(const LatticeVector& v)
{
    return {Rational(v.x), Rational(v.y)};
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p)
{
    return os << p.str();
}

LatticeVector integer_direction(const RationalPoint& p)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), p.x.den().get_mpz_t(), p.y.den().get_mpz_t());
    return {p.x.num() * (l / p.x.den()), p.y.num() * (l / p.y.den())};
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer mod_inverse(const Integer& a, const Integer& m)
{
    if (m <= 0)
        throw DomainError("mod_inverse: modulus must be positive");
    if (m == 1)
        return 0;
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("mod_inverse: " + a.get_str() + " is not invertible mod " + m.get_str());
    return r;
}

Integer floor(const Rational& q)
{
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    return f;
}

Rational frac(const Rational& q)
{
    return q - Rational(floor(q));
}

FloorFrac floor_frac(const Rational& q)
{
    Integer f = floor(q);
    return {f, q - Rational(f)};
}

PrimitiveDecomposition primitive(const LatticeVector& v)
{
    if (v.x == 0 && v.y == 0)
        throw DomainError("primitive: zero vector");
    Integer g = gcd(v.x, v.y);
    return {{v.x / g, v.y / g}, g};
}

Bezout extended_gcd(const Integer& a, const Integer& b)
{
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace solidangle
