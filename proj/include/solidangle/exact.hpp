#pragma once

// Exact integer/rational arithmetic and the small amount of lattice number
// theory the rest of the library is built on. Integers are GMP integers;
// Rational keeps a canonical (reduced, positive denominator) mpq value.

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace solidangle {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    /// Throws DomainError when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p" or "p/q" with an optional leading minus; q must be > 0.
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

struct LatticeVector {
    Integer x;
    Integer y;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    LatticeVector operator-() const { return {-x, -y}; }
    std::string str() const;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Integer& s, const LatticeVector& v);
Integer det(const LatticeVector& a, const LatticeVector& b);
Integer dot(const LatticeVector& a, const LatticeVector& b);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    RationalPoint operator-() const { return {-x, -y}; }
    std::string str() const;
};

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator-(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator*(const Rational& s, const RationalPoint& p);
Rational det(const RationalPoint& a, const RationalPoint& b);
Rational dot(const RationalPoint& a, const RationalPoint& b);
RationalPoint to_point(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

/// Positive multiple of `p` with integer coordinates (same direction).
LatticeVector integer_direction(const RationalPoint& p);

// --- number theory -------------------------------------------------------

/// gcd(0, 0) == 0; result is never negative.
Integer gcd(const Integer& a, const Integer& b);

/// r in [0, m) with a*r == 1 (mod m); r == 0 when m == 1.
/// Throws DomainError when m <= 0 or gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Mathematical floor, correct for negatives.
Integer floor(const Rational& q);
/// {q} = q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

struct FloorFrac {
    Integer floor;
    Rational frac;
};
FloorFrac floor_frac(const Rational& q);

struct PrimitiveDecomposition {
    LatticeVector primitive;
    Integer multiplicity;
};

/// v == multiplicity * primitive with gcd(primitive) == 1. Throws DomainError
/// for the zero vector.
PrimitiveDecomposition primitive(const LatticeVector& v);

/// Extended Euclid: returns (g, s, t) with s*a + t*b == g == gcd(a, b).
struct Bezout {
    Integer g;
    Integer s;
    Integer t;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

} // namespace solidangle
