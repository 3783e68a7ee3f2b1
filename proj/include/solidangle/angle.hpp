#pragma once

// Exact angles measured in turns (1 turn = 2*pi radians).
//
// An AngleValue is r + sum_i c_i * atan(d_i.y / d_i.x) / (2*pi) with rational
// r and c_i, where every d_i is a primitive "atom" direction strictly inside
// the first octant (d.x > d.y >= 1). Directions on the axes or diagonals fold
// into r, and every other direction folds onto a single atom through the
// eightfold dihedral symmetry and atan(x) + atan(1/x) = pi/2. No other arctan
// identities are applied, so distinct atoms are treated as independent.

#include <map>
#include <string>
#include <utility>

#include "solidangle/exact.hpp"

namespace solidangle {

struct DirectionAtom {
    Integer x;
    Integer y;

    /// Throws DomainError unless gcd(x, y) == 1 and x > y >= 1.
    static DirectionAtom make(Integer x, Integer y);

    friend bool operator==(const DirectionAtom&, const DirectionAtom&) = default;
    friend bool operator<(const DirectionAtom& a, const DirectionAtom& b)
    {
        const int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    }
};

/// atan(d.y / d.x) / (2*pi), strictly inside (0, 1/8).
double atom_value(const DirectionAtom& d);

class AngleValue {
public:
    using AtomMap = std::map<DirectionAtom, Rational>;

    AngleValue() = default;
    AngleValue(Rational turns) : rational_(std::move(turns)) {}
    static AngleValue atom(const DirectionAtom& d, const Rational& coeff = Rational(1));

    const Rational& rational_part() const { return rational_; }
    const AtomMap& atoms() const { return atoms_; }
    bool has_atoms() const { return !atoms_.empty(); }

    AngleValue& operator+=(const AngleValue& rhs);
    AngleValue& operator-=(const AngleValue& rhs);
    AngleValue& operator*=(const Rational& s);
    AngleValue operator-() const;

    friend AngleValue operator+(AngleValue a, const AngleValue& b) { return a += b; }
    friend AngleValue operator-(AngleValue a, const AngleValue& b) { return a -= b; }
    friend AngleValue operator*(AngleValue a, const Rational& s) { return a *= s; }
    friend AngleValue operator*(const Rational& s, AngleValue a) { return a *= s; }
    friend bool operator==(const AngleValue&, const AngleValue&) = default;

    /// "r + c*atan2(b,a)/2pi - ..." with atoms in increasing (a, b) order.
    std::string str() const;
    double to_double() const;

private:
    void add_atom(const DirectionAtom& d, const Rational& coeff);

    Rational rational_;
    AtomMap atoms_;
};

double angle_to_float(const AngleValue& a);

/// Counterclockwise angle of v from the positive x-axis, in [0, 1) turns.
/// Throws DomainError for the zero vector.
AngleValue turns_of_direction(const LatticeVector& v);

/// Counterclockwise sweep from u to v, in (0, 1) turns. Opposite vectors give
/// exactly 1/2; equal directions (zero sweep) and zero vectors throw.
AngleValue angle_between(const LatticeVector& u, const LatticeVector& v);
AngleValue angle_between(const RationalPoint& u, const RationalPoint& v);

} // namespace solidangle
