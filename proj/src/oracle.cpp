#include "solidangle/oracle.hpp"

#include <cstdint>
#include <type_traits>
#include <vector>

#include "solidangle/errors.hpp"

namespace solidangle {

namespace {

__extension__ typedef __int128 i128;

// tP scaled by the common denominator D, so that vertices and the scanned
// lattice points D*x are integers of type Int.
template <class Int>
struct ScaledPolygon {
    std::vector<Int> vx;
    std::vector<Int> vy;
    Int D;
};

Integer common_denominator(const RationalPolygon& Q)
{
    Integer D = 1;
    for (const RationalPoint& p : Q.vertices()) {
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), p.x.den().get_mpz_t());
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), p.y.den().get_mpz_t());
    }
    return D;
}

Integer scaled(const Rational& q, const Integer& D)
{
    return q.num() * (D / q.den());
}

i128 to_i128(const Integer& z)
{
    return static_cast<i128>(z.get_si());
}

template <class Int>
Int convert(const Integer& z)
{
    if constexpr (std::is_same_v<Int, Integer>)
        return z;
    else
        return to_i128(z);
}

template <class Int>
ScaledPolygon<Int> scale_polygon(const RationalPolygon& Q, const Integer& D)
{
    ScaledPolygon<Int> s;
    s.D = convert<Int>(D);
    for (const RationalPoint& p : Q.vertices()) {
        s.vx.push_back(convert<Int>(scaled(p.x, D)));
        s.vy.push_back(convert<Int>(scaled(p.y, D)));
    }
    return s;
}

LatticeVector as_lattice(const Integer& x, const Integer& y)
{
    return {x, y};
}

LatticeVector as_lattice(i128 x, i128 y)
{
    // Vertex offsets are below 2^62 in magnitude on the fast path.
    return {Integer(static_cast<long>(x)), Integer(static_cast<long>(y))};
}

template <class Int>
PointClass classify_scaled(const ScaledPolygon<Int>& s, const Int& px, const Int& py)
{
    const std::size_t n = s.vx.size();
    PointClass c;
    for (std::size_t i = 0; i < n; ++i)
        if (s.vx[i] == px && s.vy[i] == py) {
            const std::size_t nx = (i + 1) % n;
            const std::size_t pv = (i + n - 1) % n;
            c.tag = PointClass::Tag::vertex;
            c.index = i;
            c.angle = angle_between(as_lattice(s.vx[nx] - px, s.vy[nx] - py),
                                    as_lattice(s.vx[pv] - px, s.vy[pv] - py));
            return c;
        }
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const Int ex = s.vx[j] - s.vx[i];
        const Int ey = s.vy[j] - s.vy[i];
        const Int dx = px - s.vx[i];
        const Int dy = py - s.vy[i];
        const Int cross = ex * dy - ey * dx;
        if (cross == 0) {
            const Int along = dx * (px - s.vx[j]) + dy * (py - s.vy[j]);
            if (along < 0) {
                c.tag = PointClass::Tag::edge_interior;
                c.index = i;
                c.angle = AngleValue(Rational(1, 2));
                return c;
            }
        }
        if (s.vy[i] <= py) {
            if (s.vy[j] > py && cross > 0)
                ++winding;
        } else if (s.vy[j] <= py && cross < 0) {
            --winding;
        }
    }
    if (winding != 0) {
        c.tag = PointClass::Tag::interior;
        c.angle = AngleValue(Rational(1));
    }
    return c;
}

template <class Int>
void scan(const ScaledPolygon<Int>& s, const Int& x0, const Int& x1, const Int& y0, const Int& y1,
          BruteForceResult& r)
{
    long n_int = 0;
    long n_edge = 0;
    for (Int y = y0; y <= y1; ++y) {
        const Int py = y * s.D;
        for (Int x = x0; x <= x1; ++x) {
            const PointClass c = classify_scaled(s, Int(x * s.D), py);
            switch (c.tag) {
            case PointClass::Tag::outside:
                break;
            case PointClass::Tag::interior:
                ++n_int;
                break;
            case PointClass::Tag::edge_interior:
                ++n_edge;
                break;
            case PointClass::Tag::vertex:
                r.n_vertex += 1;
                r.A += c.angle;
                break;
            }
        }
    }
    r.n_interior = n_int;
    r.n_edge_interior = n_edge;
}

Integer ceil_of(const Rational& q)
{
    return -floor(-q);
}

} // namespace

PointClass classify_point(const RationalPolygon& Q, const LatticeVector& x)
{
    const Integer D = common_denominator(Q);
    const ScaledPolygon<Integer> s = scale_polygon<Integer>(Q, D);
    return classify_scaled<Integer>(s, x.x * D, x.y * D);
}

BruteForceResult brute_force(const RationalPolygon& P, const Rational& t)
{
    const RationalPolygon Q = P.dilate(t);
    Rational xmin = Q.vertex(0).x, xmax = xmin, ymin = Q.vertex(0).y, ymax = ymin;
    for (const RationalPoint& p : Q.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const Integer x0 = ceil_of(xmin), x1 = floor(xmax), y0 = ceil_of(ymin), y1 = floor(ymax);

    const Integer D = common_denominator(Q);
    Integer bound = 0;
    for (const Integer& z : {x0, x1, y0, y1}) {
        const Integer m = abs(z) + 1;
        if (m > bound)
            bound = m;
    }
    for (const RationalPoint& p : Q.vertices())
        for (const Rational& q : {p.x, p.y}) {
            const Integer m = abs(floor(q)) + 1;
            if (m > bound)
                bound = m;
        }
    const Integer limit = Integer(1) << 61;

    BruteForceResult r;
    r.n_vertex = 0;
    if (D * bound < limit)
        scan(scale_polygon<i128>(Q, D), to_i128(x0), to_i128(x1), to_i128(y0), to_i128(y1), r);
    else
        scan(scale_polygon<Integer>(Q, D), x0, x1, y0, y1, r);
    r.A += AngleValue(Rational(r.n_interior) + Rational(r.n_edge_interior, 2));
    r.L = r.n_interior + r.n_edge_interior + r.n_vertex;
    return r;
}

AngleValue brute_force_A(const RationalPolygon& P, const Rational& t)
{
    return brute_force(P, t).A;
}

Integer brute_force_L(const RationalPolygon& P, const Rational& t)
{
    return brute_force(P, t).L;
}

Integer brute_force_popoviciu(const Integer& a, const Integer& b, const Integer& n)
{
    if (a <= 0 || b <= 0)
        throw DomainError("popoviciu: a and b must be positive");
    if (n < 0)
        return 0;
    Integer count = 0;
    for (Integer x = 0; a * x <= n; ++x)
        if (Integer(n - a * x) % b == 0)
            ++count;
    return count;
}

RationalPolygon triangle_polygon(const Integer& h, const Integer& k)
{
    return RationalPolygon({{Rational(0), Rational(0)}, {Rational(h), Rational(0)},
                            {Rational(0), Rational(k)}});
}

} // namespace solidangle
