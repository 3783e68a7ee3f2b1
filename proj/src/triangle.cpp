#include "solidangle/triangle.hpp"

#include "solidangle/bernoulli.hpp"
#include "solidangle/errors.hpp"

namespace solidangle {

namespace {

void require_nonzero(const Rational& t)
{
    if (t.is_zero())
        throw DomainError("dilation t must be nonzero");
}

void require_positive(const Rational& t)
{
    if (t.sign() <= 0)
        throw DomainError("dilation t must be positive, got " + t.str());
}

// atan(h/k)/2pi and atan(k/h)/2pi as canonical angle values.
AngleValue atan_h_over_k(const SimplePointedTriangle& T)
{
    return turns_of_direction({T.k(), T.h()});
}

AngleValue atan_k_over_h(const SimplePointedTriangle& T)
{
    return turns_of_direction({T.h(), T.k()});
}

// s(h,k; ht, 0) and s(k,h; kt, 0).
Rational shifted_sum_h(const SimplePointedTriangle& T, const Rational& t)
{
    return dedekind_rademacher({T.h(), T.k(), Rational(T.h()) * t, Rational()});
}

Rational shifted_sum_k(const SimplePointedTriangle& T, const Rational& t)
{
    return dedekind_rademacher({T.k(), T.h(), Rational(T.k()) * t, Rational()});
}

} // namespace

SimplePointedTriangle::SimplePointedTriangle(Integer h, Integer k) : h_(std::move(h)), k_(std::move(k))
{
    if (h_ <= 0 || k_ <= 0)
        throw DomainError("triangle legs must be positive");
    if (gcd(h_, k_) != 1)
        throw DomainError("triangle legs h=" + h_.get_str() + ", k=" + k_.get_str() +
                          " are not coprime");
}

AngleValue CTerms::sum() const
{
    AngleValue s(c1 + c2 + c4 + c5);
    s += c3;
    s += c6;
    return s;
}

Integer FaceCounts::lattice_vertex_count() const
{
    Integer n = 0;
    for (bool b : vertex_is_lattice)
        n += b ? 1 : 0;
    return n;
}

QuasiCoefficients quasi_coefficients(const SimplePointedTriangle& T, const Rational& t)
{
    require_nonzero(t);
    const Rational h(T.h());
    const Rational k(T.k());
    const Rational hkt = h * k * t;

    QuasiCoefficients q;
    q.a2 = h * k / Rational(2);
    q.a1 = -b1_periodic(hkt);
    q.a0 = Rational(1) / (Rational(2) * h * k) * (b2_periodic(hkt) + (h * h + k * k) / Rational(6)) -
           shifted_sum_h(T, t) - shifted_sum_k(T, t);
    if ((h * t).is_integer())
        q.a0 -= atan_h_over_k(T);
    if ((k * t).is_integer())
        q.a0 -= atan_k_over_h(T);
    return q;
}

CTerms c_terms(const SimplePointedTriangle& T, const Rational& t)
{
    require_nonzero(t);
    const Rational h(T.h());
    const Rational k(T.k());
    const Rational b2 = b2_periodic(h * k * t);
    const Rational norm2 = h * h + k * k;

    CTerms c;
    c.c1 = h / (Rational(12) * k);
    c.c4 = k / (Rational(12) * h);
    c.c2 = h / (Rational(2) * k * norm2) * b2;
    c.c5 = k / (Rational(2) * h * norm2) * b2;
    c.c3 = AngleValue(-shifted_sum_h(T, t));
    if ((h * t).is_integer())
        c.c3 -= atan_h_over_k(T);
    c.c6 = AngleValue(-shifted_sum_k(T, t));
    if ((k * t).is_integer())
        c.c6 -= atan_k_over_h(T);
    return c;
}

AngleValue solid_angle_sum_triangle(const SimplePointedTriangle& T, const Rational& t)
{
    const QuasiCoefficients q = quasi_coefficients(T, t);
    return AngleValue(q.a2 * t * t + q.a1 * t) + q.a0;
}

Integer popoviciu(const Integer& a, const Integer& b, const Integer& n)
{
    if (a <= 0 || b <= 0)
        throw DomainError("popoviciu: a and b must be positive");
    if (gcd(a, b) != 1)
        throw DomainError("popoviciu: a and b must be coprime");
    if (n < 0)
        throw DomainError("popoviciu: n must be nonnegative");
    const Integer a_inv = mod_inverse(a, b);
    const Integer b_inv = mod_inverse(b, a);
    const Rational value = Rational(n, Integer(a * b)) - frac(Rational(Integer(b_inv * n), a)) -
                           frac(Rational(Integer(a_inv * n), b)) + Rational(1);
    if (!value.is_integer())
        throw InternalError("popoviciu closed form produced a non-integer");
    return value.num();
}

EdgeCounts edge_counts(const SimplePointedTriangle& T, const Rational& t)
{
    require_nonzero(t);
    const Rational s = abs(t);
    const Rational hks = Rational(T.h()) * Rational(T.k()) * s;
    EdgeCounts e;
    e.e1 = hks.is_integer() ? popoviciu(T.h(), T.k(), hks.num()) : Integer(0);
    e.e2 = floor(Rational(T.k()) * s) + 1;
    e.e3 = floor(Rational(T.h()) * s) + 1;
    return e;
}

Integer ehrhart_triangle(const SimplePointedTriangle& T, const Rational& t)
{
    require_positive(t);
    const EdgeCounts e = edge_counts(T, t);
    AngleValue L = solid_angle_sum_triangle(T, t);
    L += AngleValue(Rational(Integer(e.e1 + e.e2 + e.e3), 2) - Rational(1, 4));
    // Vertex angles at V2 (atan(k/h)) and V3 (atan(h/k)) when they are lattice points.
    if ((Rational(T.h()) * t).is_integer())
        L -= atan_k_over_h(T);
    if ((Rational(T.k()) * t).is_integer())
        L -= atan_h_over_k(T);
    if (L.has_atoms() || !L.rational_part().is_integer())
        throw InternalError("Ehrhart assembly for h=" + T.h().get_str() + ", k=" + T.k().get_str() +
                            ", t=" + t.str() + " left residue " + L.str());
    return L.rational_part().num();
}

Rational ehrhart_triangle_expanded(const SimplePointedTriangle& T, const Rational& t)
{
    require_positive(t);
    const Rational h(T.h());
    const Rational k(T.k());
    const Rational n(floor(h * k * t));
    const Rational ht = h * t;
    const Rational kt = k * t;
    return n * (n + Rational(1)) / (Rational(2) * h * k) +
           Rational(1, 2) * (Rational(floor(ht)) + Rational(floor(kt))) + Rational(3, 4) +
           dedekind_reciprocity_rhs(T.h(), T.k()) + Rational(1, 4) -
           dedekind_rademacher_star({T.h(), T.k(), ht, Rational()}) -
           dedekind_rademacher_star({T.k(), T.h(), kt, Rational()}) -
           Rational(1, 2) * (frac(ht) + frac(kt));
}

Rational ehrhart_at_breakpoint(const SimplePointedTriangle& T, const Integer& n)
{
    if (n <= 0)
        throw DomainError("breakpoint index n must be positive");
    const Rational h(T.h());
    const Rational k(T.k());
    const Rational nq(n);
    const Rational n_over_h = nq / h;
    const Rational n_over_k = nq / k;
    return nq * nq / (Rational(2) * h * k) +
           nq / Rational(2) * (Rational(1) / h + Rational(1) / k + Rational(1) / (h * k)) +
           Rational(1, 4) + dedekind_reciprocity_rhs(T.h(), T.k()) + Rational(1, 4) -
           dedekind_rademacher_star({T.h(), T.k(), n_over_k, Rational()}) -
           dedekind_rademacher_star({T.k(), T.h(), n_over_h, Rational()}) - b1_star(n_over_h) -
           b1_star(n_over_k);
}

FaceCounts face_counts(const SimplePointedTriangle& T, const Rational& t)
{
    require_positive(t);
    const EdgeCounts e = edge_counts(T, t);
    FaceCounts f;
    f.vertex_is_lattice = {true, (Rational(T.h()) * t).is_integer(),
                           (Rational(T.k()) * t).is_integer()};
    const int v2 = f.vertex_is_lattice[1] ? 1 : 0;
    const int v3 = f.vertex_is_lattice[2] ? 1 : 0;
    f.n_edge_interior = {e.e1 - v2 - v3, e.e2 - 1 - v3, e.e3 - 1 - v2};
    f.n_interior = ehrhart_triangle(T, t) - f.n_edge_interior[0] - f.n_edge_interior[1] -
                   f.n_edge_interior[2] - f.lattice_vertex_count();
    return f;
}

} // namespace solidangle
