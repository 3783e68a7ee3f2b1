#pragma once

// Closed-form solid-angle and lattice-point sums for the right triangle with
// vertices V1 = (0,0), V2 = (h,0), V3 = (0,k), gcd(h,k) = 1, dilated by an
// arbitrary nonzero rational t.
//
// Edge labels: E1 is the hypotenuse V2-V3, E2 the vertical leg V1-V3 and E3
// the horizontal leg V1-V2.

#include <array>

#include "solidangle/angle.hpp"
#include "solidangle/exact.hpp"

namespace solidangle {

class SimplePointedTriangle {
public:
    /// Throws DomainError unless h, k > 0 and gcd(h, k) == 1.
    SimplePointedTriangle(Integer h, Integer k);

    const Integer& h() const { return h_; }
    const Integer& k() const { return k_; }

private:
    Integer h_;
    Integer k_;
};

/// A(t) = a2 t^2 + a1(t) t + a0(t); a1 and a0 are 1-periodic in t.
struct QuasiCoefficients {
    Rational a2;
    Rational a1;
    AngleValue a0;
};

/// The six pieces a0 splits into. c1, c2, c4, c5 are rational; c3 and c6 pick
/// up an arctan atom exactly when ht (resp. kt) is an integer.
struct CTerms {
    Rational c1;
    Rational c2;
    AngleValue c3;
    Rational c4;
    Rational c5;
    AngleValue c6;

    AngleValue sum() const;
};

struct EdgeCounts {
    Integer e1;
    Integer e2;
    Integer e3;
};

struct FaceCounts {
    Integer n_interior;
    std::array<Integer, 3> n_edge_interior; // E1, E2, E3
    std::array<bool, 3> vertex_is_lattice;  // V1, V2, V3

    Integer lattice_vertex_count() const;
};

QuasiCoefficients quasi_coefficients(const SimplePointedTriangle& T, const Rational& t);
CTerms c_terms(const SimplePointedTriangle& T, const Rational& t);
AngleValue solid_angle_sum_triangle(const SimplePointedTriangle& T, const Rational& t);

/// Number of (x, y) in Z_{>=0}^2 with a x + b y = n, by the closed form
/// n/(ab) - {b^{-1} n / a} - {a^{-1} n / b} + 1.
Integer popoviciu(const Integer& a, const Integer& b, const Integer& n);

/// Closed lattice-point counts of the three edges of tT. Negative t is
/// handled through the point reflection, which preserves Z^2.
EdgeCounts edge_counts(const SimplePointedTriangle& T, const Rational& t);

/// L(t) assembled from A(t), the edge counts and the vertex angles. Requires
/// t > 0. Throws InternalError if the result is not an atom-free integer.
Integer ehrhart_triangle(const SimplePointedTriangle& T, const Rational& t);

/// The expanded floor/s* form of L(t), evaluated literally (diagnostic only).
Rational ehrhart_triangle_expanded(const SimplePointedTriangle& T, const Rational& t);

/// L at t = n/(hk) through the reduced s* expression with 1/4 constant term.
Rational ehrhart_at_breakpoint(const SimplePointedTriangle& T, const Integer& n);

FaceCounts face_counts(const SimplePointedTriangle& T, const Rational& t);

} // namespace solidangle
