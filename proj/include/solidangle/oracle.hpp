#pragma once

// Brute-force ground truth: every lattice point in the bounding box of tP is
// classified with exact predicates and weighted by its solid angle.

#include <cstddef>

#include "solidangle/angle.hpp"
#include "solidangle/exact.hpp"
#include "solidangle/polygon.hpp"

namespace solidangle {

struct PointClass {
    enum class Tag { outside, interior, edge_interior, vertex };

    Tag tag = Tag::outside;
    std::size_t index = 0; // edge i is V_i -> V_{i+1}; vertex i is V_i
    AngleValue angle;      // solid angle in turns (vertex angle, 1, 1/2 or 0)
};

PointClass classify_point(const RationalPolygon& Q, const LatticeVector& x);

struct BruteForceResult {
    AngleValue A;
    Integer L;
    Integer n_interior;
    Integer n_edge_interior;
    Integer n_vertex;
};

/// One bounding-box scan of tP producing both sums.
BruteForceResult brute_force(const RationalPolygon& P, const Rational& t);
AngleValue brute_force_A(const RationalPolygon& P, const Rational& t);
Integer brute_force_L(const RationalPolygon& P, const Rational& t);

/// #{(x, y) in Z_{>=0}^2 : a x + b y = n} by enumeration over x.
Integer brute_force_popoviciu(const Integer& a, const Integer& b, const Integer& n);

/// Delta(h, k) = conv((0,0), (h,0), (0,k)) as a polygon.
RationalPolygon triangle_polygon(const Integer& h, const Integer& k);

} // namespace solidangle
