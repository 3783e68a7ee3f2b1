#include "solidangle/angle.hpp"

#include <cmath>
#include <numbers>

#include "solidangle/errors.hpp"

namespace solidangle {

namespace {

// 0 for directions in [0, 1/2) turns, 1 for [1/2, 1).
int half_plane(const LatticeVector& v)
{
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

// Strict "turns(a) < turns(b)" without evaluating any arctangent.
bool turns_less(const LatticeVector& a, const LatticeVector& b)
{
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb)
        return ha < hb;
    return det(a, b) > 0;
}

} // namespace

DirectionAtom DirectionAtom::make(Integer x, Integer y)
{
    if (!(x > y && y >= 1) || gcd(x, y) != 1)
        throw DomainError("direction atom (" + x.get_str() + "," + y.get_str() +
                          ") is not primitive inside the first octant");
    return {std::move(x), std::move(y)};
}

double atom_value(const DirectionAtom& d)
{
    return std::atan2(d.y.get_d(), d.x.get_d()) / (2.0 * std::numbers::pi);
}

AngleValue AngleValue::atom(const DirectionAtom& d, const Rational& coeff)
{
    AngleValue a;
    a.add_atom(d, coeff);
    return a;
}

void AngleValue::add_atom(const DirectionAtom& d, const Rational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = atoms_.try_emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            atoms_.erase(it);
    }
}

AngleValue& AngleValue::operator+=(const AngleValue& rhs)
{
    rational_ += rhs.rational_;
    for (const auto& [d, c] : rhs.atoms_)
        add_atom(d, c);
    return *this;
}

AngleValue& AngleValue::operator-=(const AngleValue& rhs)
{
    rational_ -= rhs.rational_;
    for (const auto& [d, c] : rhs.atoms_)
        add_atom(d, -c);
    return *this;
}

AngleValue& AngleValue::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        *this = AngleValue();
        return *this;
    }
    rational_ *= s;
    for (auto& [d, c] : atoms_)
        c *= s;
    return *this;
}

AngleValue AngleValue::operator-() const
{
    AngleValue r = *this;
    r *= Rational(-1);
    return r;
}

std::string AngleValue::str() const
{
    std::string out;
    if (!rational_.is_zero() || atoms_.empty())
        out = rational_.str();
    for (const auto& [d, c] : atoms_) {
        const std::string term =
            abs(c).str() + "*atan2(" + d.y.get_str() + "," + d.x.get_str() + ")/2pi";
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out;
}

double AngleValue::to_double() const
{
    double v = rational_.to_double();
    for (const auto& [d, c] : atoms_)
        v += c.to_double() * atom_value(d);
    return v;
}

double angle_to_float(const AngleValue& a)
{
    return a.to_double();
}

AngleValue turns_of_direction(const LatticeVector& v)
{
    const LatticeVector p = primitive(v).primitive;
    Integer x = p.x;
    Integer y = p.y;
    long quarters = 0;
    // Rotate clockwise by quarter turns until the direction lies in [0, 1/4).
    while (!(x > 0 && y >= 0)) {
        Integer nx = y;
        y = -x;
        x = std::move(nx);
        ++quarters;
    }
    AngleValue a(Rational(quarters, 4));
    if (y == 0)
        return a;
    if (x == y)
        return a + AngleValue(Rational(1, 8));
    if (x > y)
        return a + AngleValue::atom(DirectionAtom::make(x, y));
    return a + AngleValue(Rational(1, 4)) - AngleValue::atom(DirectionAtom::make(y, x));
}

AngleValue angle_between(const LatticeVector& u, const LatticeVector& v)
{
    if ((u.x == 0 && u.y == 0) || (v.x == 0 && v.y == 0))
        throw DomainError("angle_between: zero vector");
    if (det(u, v) == 0) {
        if (dot(u, v) > 0)
            throw DomainError("angle_between: vectors " + u.str() + " and " + v.str() +
                              " point the same way");
        return AngleValue(Rational(1, 2));
    }
    AngleValue d = turns_of_direction(v) - turns_of_direction(u);
    if (turns_less(v, u))
        d += AngleValue(Rational(1));
    return d;
}

AngleValue angle_between(const RationalPoint& u, const RationalPoint& v)
{
    return angle_between(integer_direction(u), integer_direction(v));
}

} // namespace solidangle
