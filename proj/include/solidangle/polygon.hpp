#pragma once

// Rational polygons and the reduction pipeline: signed fan from the origin,
// unimodular partition of each fan cone, and transport of every unimodular
// piece onto a dilated simple pointed triangle.

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "solidangle/angle.hpp"
#include "solidangle/exact.hpp"
#include "solidangle/triangle.hpp"

namespace solidangle {

class RationalPolygon {
public:
    /// Throws DomainError unless there are at least 3 vertices in
    /// counterclockwise order, the boundary is simple and no three
    /// consecutive vertices are collinear.
    explicit RationalPolygon(std::vector<RationalPoint> vertices);

    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const RationalPoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    Rational area() const;
    /// t * P; for t < 0 this is the point reflection of |t| * P.
    RationalPolygon dilate(const Rational& t) const;
    RationalPolygon translate(const RationalPoint& offset) const;

private:
    struct Trusted {};
    RationalPolygon(std::vector<RationalPoint> vertices, Trusted) : vertices_(std::move(vertices)) {}

    std::vector<RationalPoint> vertices_;
};

/// Twice the signed area of a vertex loop (positive for counterclockwise).
Rational doubled_signed_area(const std::vector<RationalPoint>& loop);

/// Polygon file: a vertex count, then one "X Y" line per vertex. Lines whose
/// first non-blank character is '#' and blank lines are ignored. Throws
/// ParseError on malformed text and DomainError on an invalid polygon.
RationalPolygon parse_polygon(std::string_view text);
RationalPolygon read_polygon_file(const std::string& path);
std::string format_polygon(const RationalPolygon& P);

struct PointedTriangle {
    RationalPoint a;
    RationalPoint b;
    int sign;
};

/// conv(0, V_i, V_{i+1}) for each edge not collinear with the origin, signed
/// by the orientation of (0, V_i, V_{i+1}).
std::vector<PointedTriangle> fan_decompose(const RationalPolygon& P);

/// Primitive rays u = w_0, ..., w_m = v with det(w_i, w_{i+1}) = 1. Requires
/// primitive u, v with det(u, v) > 0.
std::vector<LatticeVector> unimodularize_cone(const LatticeVector& u, const LatticeVector& v);

struct IntMatrix2 {
    std::array<std::array<Integer, 2>, 2> m;

    Integer det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    LatticeVector apply(const LatticeVector& v) const;
    RationalPoint apply(const RationalPoint& p) const;
};

/// The piece conv(0, p1, p2) of a fan triangle, with p1 = rho_i w_i and
/// p2 = rho_{i+1} w_{i+1}. M maps w0 to (1,0) and w1 to (0,1), so M sends the
/// piece to scale * Delta(base.h, base.k).
struct UnimodularPiece {
    IntMatrix2 M;
    SimplePointedTriangle base;
    Rational scale;
    int sign;
    RationalPoint p1;
    RationalPoint p2;
    LatticeVector w0;
    LatticeVector w1;
};

/// Clips `tri` to the cone (w0, w1) and transports the clipped piece. Throws
/// DomainError if either ray misses the segment [a, b].
UnimodularPiece transport(const PointedTriangle& tri, const LatticeVector& w0, const LatticeVector& w1);

/// All unimodular pieces of all fan triangles of P.
std::vector<UnimodularPiece> decompose(const RationalPolygon& P);

/// Solid-angle sum of t * piece, rebuilt from the face counts of the base
/// triangle at dilation scale * |t| and the piece's own vertex angles.
AngleValue piece_solid_angle(const UnimodularPiece& piece, const Rational& t);

AngleValue solid_angle_sum_polygon(const RationalPolygon& P, const Rational& t);

/// Number of lattice points on the closed segment t * [p1, p2].
Integer segment_lattice_count(const RationalPoint& p1, const RationalPoint& p2, const Rational& t);

/// Interior angle of P at vertex i, in turns.
AngleValue interior_angle(const RationalPolygon& P, std::size_t i);

/// L_P(t) = A_P(t) + (1/2) sum_i L_{E_i}(t) - sum of the interior angles at
/// lattice vertices of tP. Requires t > 0.
Integer ehrhart_polygon(const RationalPolygon& P, const Rational& t);

} // namespace solidangle
