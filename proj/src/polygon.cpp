#include "solidangle/polygon.hpp"

#include <fstream>
#include <sstream>

#include "solidangle/errors.hpp"

namespace solidangle {

namespace {

int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c)
{
    return det(b - a, c - a).sign();
}

// c lies on the closed segment [a, b], given that a, b, c are collinear.
bool within(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c)
{
    return dot(c - a, c - b).sign() <= 0;
}

bool segments_touch(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                    const RationalPoint& d)
{
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && within(a, b, c)) || (o2 == 0 && within(a, b, d)) ||
           (o3 == 0 && within(c, d, a)) || (o4 == 0 && within(c, d, b));
}

void validate(const std::vector<RationalPoint>& v)
{
    const std::size_t n = v.size();
    if (n < 3)
        throw DomainError("polygon needs at least 3 vertices, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        const RationalPoint& a = v[i];
        const RationalPoint& b = v[(i + 1) % n];
        const RationalPoint& c = v[(i + 2) % n];
        if (a == b)
            throw DomainError("polygon has a repeated vertex " + a.str());
        if (orientation(a, b, c) == 0)
            throw DomainError("polygon vertices " + a.str() + ", " + b.str() + ", " + c.str() +
                              " are collinear");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            if (segments_touch(v[i], v[i + 1], v[j], v[(j + 1) % n]))
                throw DomainError("polygon is not simple: edges " + std::to_string(i) + " and " +
                                  std::to_string(j) + " meet");
        }
    if (doubled_signed_area(v).sign() <= 0)
        throw DomainError("polygon vertices must be in counterclockwise order");
}

bool is_lattice(const RationalPoint& p)
{
    return p.x.is_integer() && p.y.is_integer();
}

} // namespace

RationalPolygon::RationalPolygon(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices))
{
    validate(vertices_);
}

Rational RationalPolygon::area() const
{
    return doubled_signed_area(vertices_) / Rational(2);
}

RationalPolygon RationalPolygon::dilate(const Rational& t) const
{
    if (t.is_zero())
        throw DomainError("dilation t must be nonzero");
    std::vector<RationalPoint> out;
    out.reserve(vertices_.size());
    for (const RationalPoint& p : vertices_)
        out.push_back(t * p);
    return RationalPolygon(std::move(out), Trusted{});
}

RationalPolygon RationalPolygon::translate(const RationalPoint& offset) const
{
    std::vector<RationalPoint> out;
    out.reserve(vertices_.size());
    for (const RationalPoint& p : vertices_)
        out.push_back(p + offset);
    return RationalPolygon(std::move(out), Trusted{});
}

Rational doubled_signed_area(const std::vector<RationalPoint>& loop)
{
    Rational s;
    for (std::size_t i = 0; i < loop.size(); ++i)
        s += det(loop[i], loop[(i + 1) % loop.size()]);
    return s;
}

RationalPolygon parse_polygon(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long expected = -1;
    std::vector<RationalPoint> vertices;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (expected < 0) {
            if (tokens.size() != 1)
                throw ParseError(where + "expected the vertex count");
            const Rational n = Rational::parse(tokens[0]);
            if (!n.is_integer() || n.sign() <= 0 || !n.num().fits_slong_p())
                throw ParseError(where + "vertex count must be a positive integer");
            expected = n.num().get_si();
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(where + "expected \"X Y\"");
        if (static_cast<long>(vertices.size()) == expected)
            throw ParseError(where + "more vertices than the declared count " +
                             std::to_string(expected));
        try {
            vertices.push_back({Rational::parse(tokens[0]), Rational::parse(tokens[1])});
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
    }
    if (expected < 0)
        throw ParseError("polygon file is empty");
    if (static_cast<long>(vertices.size()) != expected)
        throw ParseError("polygon file declares " + std::to_string(expected) + " vertices but has " +
                         std::to_string(vertices.size()));
    return RationalPolygon(std::move(vertices));
}

RationalPolygon read_polygon_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open polygon file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygon(buf.str());
}

std::string format_polygon(const RationalPolygon& P)
{
    std::string out = std::to_string(P.size()) + "\n";
    for (const RationalPoint& p : P.vertices())
        out += p.x.str() + " " + p.y.str() + "\n";
    return out;
}

std::vector<PointedTriangle> fan_decompose(const RationalPolygon& P)
{
    std::vector<PointedTriangle> out;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const RationalPoint& a = P.vertex(i);
        const RationalPoint& b = P.vertex(i + 1);
        const int s = det(a, b).sign();
        if (s != 0)
            out.push_back({a, b, s});
    }
    return out;
}

std::vector<LatticeVector> unimodularize_cone(const LatticeVector& u, const LatticeVector& v)
{
    if (gcd(u.x, u.y) != 1 || gcd(v.x, v.y) != 1)
        throw DomainError("cone generators must be primitive");
    if (det(u, v) <= 0)
        throw DomainError("cone generators " + u.str() + ", " + v.str() +
                          " are dependent or not counterclockwise");
    std::vector<LatticeVector> rays{u};
    LatticeVector a = u;
    for (Integer d = det(a, v); d > 1; d = det(a, v)) {
        // w with det(a, w) = 1; then v = alpha * a + d * w.
        const Bezout bz = extended_gcd(a.x, a.y);
        LatticeVector w{-bz.t, bz.s};
        const Integer alpha = det(v, w);
        // Shift w along a so that v = alpha' * a + d * w1 with alpha' in (-d, 0].
        Integer n;
        mpz_cdiv_q(n.get_mpz_t(), alpha.get_mpz_t(), d.get_mpz_t());
        LatticeVector w1 = w + n * a;
        rays.push_back(w1);
        a = std::move(w1);
    }
    if (!(a == v))
        rays.push_back(v);
    return rays;
}

LatticeVector IntMatrix2::apply(const LatticeVector& v) const
{
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}

RationalPoint IntMatrix2::apply(const RationalPoint& p) const
{
    return {Rational(m[0][0]) * p.x + Rational(m[0][1]) * p.y,
            Rational(m[1][0]) * p.x + Rational(m[1][1]) * p.y};
}

UnimodularPiece transport(const PointedTriangle& tri, const LatticeVector& w0, const LatticeVector& w1)
{
    if (det(w0, w1) != 1)
        throw DomainError("transport: cone " + w0.str() + ", " + w1.str() + " is not unimodular");
    RationalPoint a = tri.a;
    RationalPoint b = tri.b;
    if (det(a, b).sign() < 0)
        std::swap(a, b);
    const Rational area2 = det(a, b);
    const RationalPoint edge = b - a;
    auto hit = [&](const LatticeVector& w) {
        const RationalPoint wp = to_point(w);
        const Rational denom = det(wp, edge);
        if (denom.sign() <= 0)
            throw DomainError("transport: ray " + w.str() + " misses segment " + a.str() + "-" +
                              b.str());
        const Rational rho = area2 / denom;
        const RationalPoint p = rho * wp;
        if (det(a, p).sign() < 0 || det(p, b).sign() < 0)
            throw DomainError("transport: ray " + w.str() + " misses segment " + a.str() + "-" +
                              b.str());
        return std::pair{rho, p};
    };
    auto [rho0, p1] = hit(w0);
    auto [rho1, p2] = hit(w1);

    const Rational ratio = rho0 / rho1;
    SimplePointedTriangle base(ratio.num(), ratio.den());
    const Rational scale = rho0 / Rational(base.h());

    IntMatrix2 M{{{{w1.y, -w1.x}, {-w0.y, w0.x}}}};
    return {std::move(M), std::move(base), scale, tri.sign, std::move(p1), std::move(p2), w0, w1};
}

std::vector<UnimodularPiece> decompose(const RationalPolygon& P)
{
    std::vector<UnimodularPiece> pieces;
    for (const PointedTriangle& tri : fan_decompose(P)) {
        RationalPoint a = tri.a;
        RationalPoint b = tri.b;
        if (det(a, b).sign() < 0)
            std::swap(a, b);
        const LatticeVector u = primitive(integer_direction(a)).primitive;
        const LatticeVector v = primitive(integer_direction(b)).primitive;
        const std::vector<LatticeVector> rays = unimodularize_cone(u, v);
        for (std::size_t i = 0; i + 1 < rays.size(); ++i)
            pieces.push_back(transport(tri, rays[i], rays[i + 1]));
    }
    return pieces;
}

AngleValue piece_solid_angle(const UnimodularPiece& piece, const Rational& t)
{
    if (t.is_zero())
        throw DomainError("dilation t must be nonzero");
    const FaceCounts f = face_counts(piece.base, piece.scale * abs(t));
    const Integer edges = f.n_edge_interior[0] + f.n_edge_interior[1] + f.n_edge_interior[2];
    AngleValue A(Rational(f.n_interior) + Rational(edges, 2));
    A += angle_between(piece.w0, piece.w1);
    if (f.vertex_is_lattice[1])
        A += angle_between(piece.p2 - piece.p1, -piece.p1);
    if (f.vertex_is_lattice[2])
        A += angle_between(-piece.p2, piece.p1 - piece.p2);
    if (piece.sign < 0)
        A = -A;
    return A;
}

AngleValue interior_angle(const RationalPolygon& P, std::size_t i)
{
    const std::size_t n = P.size();
    const RationalPoint& x = P.vertex(i);
    return angle_between(P.vertex(i + 1) - x, P.vertex(i + n - 1) - x);
}

AngleValue solid_angle_sum_polygon(const RationalPolygon& P, const Rational& t)
{
    if (t.is_zero())
        throw DomainError("dilation t must be nonzero");
    AngleValue A;
    for (const UnimodularPiece& piece : decompose(P))
        A += piece_solid_angle(piece, t);

    // Every atom left over must come from a lattice vertex of tP.
    AngleValue residue = A;
    for (std::size_t i = 0; i < P.size(); ++i)
        if (is_lattice(t * P.vertex(i)))
            residue -= interior_angle(P, i);
    if (residue.has_atoms())
        throw InternalError("solid-angle assembly left stray atoms: " + residue.str());
    return A;
}

Integer segment_lattice_count(const RationalPoint& p1, const RationalPoint& p2, const Rational& t)
{
    if (p1 == p2)
        throw DomainError("degenerate segment " + p1.str());
    if (t.is_zero())
        throw DomainError("dilation t must be nonzero");
    const RationalPoint A = t * p1;
    const RationalPoint B = t * p2;
    const LatticeVector g = primitive(integer_direction(B - A)).primitive;
    const RationalPoint gp = to_point(g);
    // Lattice points X on the line satisfy det(g, X) = c.
    const Rational c = det(gp, A);
    if (!c.is_integer())
        return 0;
    const Bezout bz = extended_gcd(g.x, g.y);
    const RationalPoint x0{Rational(Integer(-bz.t * c.num())), Rational(Integer(bz.s * c.num()))};
    const Rational gg = dot(gp, gp);
    const Rational length = dot(B - A, gp) / gg;
    const Rational sigma0 = dot(x0 - A, gp) / gg;
    const Integer count = floor(length - sigma0) + floor(sigma0) + 1;
    return count > 0 ? count : Integer(0);
}

Integer ehrhart_polygon(const RationalPolygon& P, const Rational& t)
{
    if (t.sign() <= 0)
        throw DomainError("dilation t must be positive, got " + t.str());
    AngleValue L = solid_angle_sum_polygon(P, t);
    Integer boundary = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        boundary += segment_lattice_count(P.vertex(i), P.vertex(i + 1), t);
        if (is_lattice(t * P.vertex(i)))
            L -= interior_angle(P, i);
    }
    L += AngleValue(Rational(boundary, 2));
    if (L.has_atoms() || !L.rational_part().is_integer())
        throw InternalError("polygon Ehrhart assembly at t=" + t.str() + " left residue " + L.str());
    return L.rational_part().num();
}

} // namespace solidangle
