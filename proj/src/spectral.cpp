#include "solidangle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "solidangle/bernoulli.hpp"
#include "solidangle/errors.hpp"

namespace solidangle {
namespace {

constexpr double two_pi = 2 * std::numbers::pi;
// -1/(2 pi i)
const Complex stokes_factor(0.0, 1.0 / two_pi);

struct LatticePoint {
    long x;
    long y;
};

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

class ComplexSum {
public:
    void add(Complex v)
    {
        re_.add(v.real());
        im_.add(v.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

// Nonzero lattice points with |xi| <= R, by increasing norm then (x, y).
std::vector<LatticePoint> disk(long R)
{
    std::vector<LatticePoint> pts;
    for (long x = -R; x <= R; ++x)
        for (long y = -R; y <= R; ++y)
            if ((x != 0 || y != 0) && x * x + y * y <= R * R)
                pts.push_back({x, y});
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        const long na = a.x * a.x + a.y * a.y;
        const long nb = b.x * b.x + b.y * b.y;
        if (na != nb)
            return na < nb;
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return pts;
}

double damping(double epsilon, const LatticePoint& p)
{
    return std::exp(-epsilon * std::numbers::pi * static_cast<double>(p.x * p.x + p.y * p.y));
}

template <typename Term>
std::vector<Complex> damped_sums(const SpectralConfig& cfg, Term term)
{
    cfg.validate();
    std::vector<Complex> out;
    for (double eps : cfg.epsilon_schedule) {
        ComplexSum acc;
        for (const LatticePoint& p : disk(cfg.radius(eps))) {
            const Complex v = term(p);
            if (v != Complex(0.0))
                acc.add(v * damping(eps, p));
        }
        out.push_back(acc.value());
    }
    return out;
}

RealVector as_real(const LatticePoint& p)
{
    return {static_cast<double>(p.x), static_cast<double>(p.y)};
}

bool is_integral(double v)
{
    return std::floor(v) == v && std::abs(v) < 9.0e15;
}

// e^{-2 pi i q}, reducing q modulo 1 exactly.
Complex unit_phase(const Rational& q)
{
    return std::polar(1.0, -two_pi * frac(q).to_double());
}

struct Face {
    RealVector normal;    // outward unit normal in the plane
    double volume;        // length of the edge
    LatticeVector point;  // a point of the edge
    LatticeVector direction;
};

struct TriangleFaces {
    double h;
    double k;
    double norm;
    Face edge[3];
};

TriangleFaces faces_of(const SimplePointedTriangle& T)
{
    TriangleFaces f;
    f.h = T.h().get_d();
    f.k = T.k().get_d();
    f.norm = std::hypot(f.h, f.k);
    f.edge[0] = {{f.k / f.norm, f.h / f.norm}, f.norm, {T.h(), 0}, {-T.h(), T.k()}};
    f.edge[1] = {{-1.0, 0.0}, f.k, {0, 0}, {0, 1}};
    f.edge[2] = {{0.0, -1.0}, f.h, {0, 0}, {1, 0}};
    return f;
}

struct ChainData {
    int edge;
    int vertex; // -1 for Delta -> E_i; otherwise 0, 1, 2 for V1, V2, V3
};

ChainData chain_data(Chain c)
{
    switch (c) {
    case Chain::e1: return {0, -1};
    case Chain::e2: return {1, -1};
    case Chain::e3: return {2, -1};
    case Chain::e1_v2: return {0, 1};
    case Chain::e1_v3: return {0, 2};
    case Chain::e2_v1: return {1, 0};
    case Chain::e2_v3: return {1, 2};
    case Chain::e3_v1: return {2, 0};
    case Chain::e3_v2: return {2, 1};
    }
    throw DomainError("unknown chain");
}

LatticeVector vertex_point(const SimplePointedTriangle& T, int v)
{
    if (v == 1)
        return {T.h(), 0};
    if (v == 2)
        return {0, T.k()};
    return {0, 0};
}

// Outward unit normal of vertex v inside its edge.
RealVector vertex_normal(const TriangleFaces& f, int edge, int v)
{
    if (edge == 0)
        return v == 1 ? RealVector{f.h / f.norm, -f.k / f.norm} : RealVector{-f.h / f.norm, f.k / f.norm};
    if (edge == 1)
        return v == 0 ? RealVector{0.0, -1.0} : RealVector{0.0, 1.0};
    return v == 0 ? RealVector{-1.0, 0.0} : RealVector{1.0, 0.0};
}

double dot(const RealVector& a, const RealVector& b)
{
    return a[0] * b[0] + a[1] * b[1];
}

Complex exponential_weight(const RealVector& xi, const LatticeVector& point, const Rational& t)
{
    if (is_integral(xi[0]) && is_integral(xi[1])) {
        const Integer n = Integer(static_cast<long>(xi[0])) * point.x +
                          Integer(static_cast<long>(xi[1])) * point.y;
        return unit_phase(t * Rational(n));
    }
    const double phase = t.to_double() * (xi[0] * point.x.get_d() + xi[1] * point.y.get_d());
    return std::polar(1.0, -two_pi * (phase - std::floor(phase)));
}

double require_admissible_double(double v, const char* what)
{
    if (v == 0)
        throw DomainError(std::string("spectral: ") + what + " vanishes");
    return v;
}

} // namespace

SpectralTarget parse_spectral_target(std::string_view name)
{
    static const std::pair<std::string_view, SpectralTarget> names[] = {
        {"a1", SpectralTarget::a1},
        {"b1", SpectralTarget::b1},
        {"b2", SpectralTarget::b2},
        {"b3", SpectralTarget::b3},
        {"c3-sum", SpectralTarget::c3_sum},
        {"c6-sum", SpectralTarget::c6_sum},
        {"twisted-transform", SpectralTarget::twisted_transform},
    };
    for (const auto& [n, target] : names)
        if (n == name)
            return target;
    throw ParseError("unknown spectral target '" + std::string(name) + "'");
}

std::string_view spectral_target_name(SpectralTarget target)
{
    switch (target) {
    case SpectralTarget::a1: return "a1";
    case SpectralTarget::b1: return "b1";
    case SpectralTarget::b2: return "b2";
    case SpectralTarget::b3: return "b3";
    case SpectralTarget::c3_sum: return "c3-sum";
    case SpectralTarget::c6_sum: return "c6-sum";
    case SpectralTarget::twisted_transform: return "twisted-transform";
    }
    return "?";
}

void SpectralConfig::validate() const
{
    if (epsilon_schedule.empty())
        throw DomainError("spectral: empty epsilon schedule");
    for (std::size_t i = 0; i < epsilon_schedule.size(); ++i) {
        const double e = epsilon_schedule[i];
        if (!(e > 0) || !std::isfinite(e))
            throw DomainError("spectral: epsilons must be positive");
        if (i > 0 && !(e < epsilon_schedule[i - 1]))
            throw DomainError("spectral: epsilons must be strictly decreasing");
    }
    if (!(radius_multiplier >= 4) || !std::isfinite(radius_multiplier))
        throw DomainError("spectral: radius multiplier must be at least 4");
}

long SpectralConfig::radius(double epsilon) const
{
    return static_cast<long>(std::ceil(radius_multiplier / std::sqrt(epsilon)));
}

bool chain_admissible(Chain chain, const RealVector& xi, const SimplePointedTriangle& T)
{
    if (xi[0] == 0 && xi[1] == 0)
        return false;
    const ChainData c = chain_data(chain);
    const LatticeVector& d = faces_of(T).edge[c.edge].direction;
    const double along = xi[0] * d.x.get_d() + xi[1] * d.y.get_d();
    return c.vertex < 0 ? along == 0 : along != 0;
}

ChainWeight chain_weight(Chain chain, const RealVector& xi, const SimplePointedTriangle& T,
                         const Rational& t)
{
    if (t.is_zero())
        throw DomainError("spectral: t must be nonzero");
    if (!chain_admissible(chain, xi, T))
        throw DomainError("spectral: frequency outside the admissible set of the chain");
    const TriangleFaces f = faces_of(T);
    const ChainData c = chain_data(chain);
    const Face& edge = f.edge[c.edge];
    const double td = t.to_double();
    const RealVector eta{td * xi[0], td * xi[1]};

    ChainWeight w;
    w.rational = stokes_factor * dot(eta, edge.normal) / dot(eta, eta);
    if (c.vertex < 0) {
        w.rational *= edge.volume;
        w.exponential = exponential_weight(xi, edge.point, t);
    } else {
        const double along = require_admissible_double(dot(eta, vertex_normal(f, c.edge, c.vertex)),
                                                       "edge projection");
        w.rational *= stokes_factor / along;
        w.exponential = exponential_weight(xi, vertex_point(T, c.vertex), t);
    }
    return w;
}

std::vector<Complex> a1_truncated(const SimplePointedTriangle& T, const Rational& t,
                                  const SpectralConfig& cfg)
{
    const double td = t.to_double();
    return damped_sums(cfg, [&](const LatticePoint& p) {
        const RealVector xi = as_real(p);
        Complex v = 0;
        for (Chain c : {Chain::e1, Chain::e2, Chain::e3})
            if (chain_admissible(c, xi, T))
                v += td * chain_weight(c, xi, T, t).value();
        return v;
    });
}

BSums b_sums_truncated(const SimplePointedTriangle& T, const Rational& t, const SpectralConfig& cfg)
{
    const double t2 = t.to_double() * t.to_double();
    auto pair_sum = [&](Chain first, Chain second) {
        return damped_sums(cfg, [&](const LatticePoint& p) {
            const RealVector xi = as_real(p);
            if (!chain_admissible(first, xi, T))
                return Complex(0.0);
            return t2 * (chain_weight(first, xi, T, t).value() + chain_weight(second, xi, T, t).value());
        });
    };
    return {pair_sum(Chain::e1_v2, Chain::e1_v3), pair_sum(Chain::e2_v1, Chain::e2_v3),
            pair_sum(Chain::e3_v1, Chain::e3_v2)};
}

std::vector<Complex> c3_sum_truncated(const SimplePointedTriangle& T, const Rational& t,
                                      const SpectralConfig& cfg)
{
    const long h = T.h().get_si();
    const long k = T.k().get_si();
    const double scale = -1.0 / (two_pi * two_pi);
    return damped_sums(cfg, [&](const LatticePoint& p) {
        const long pole = h * p.x - k * p.y;
        if (p.x == 0 || pole == 0)
            return Complex(0.0);
        const double r = scale * static_cast<double>(k) / (static_cast<double>(pole) * static_cast<double>(p.x));
        return r * unit_phase(t * Rational(Integer(Integer(h) * p.x)));
    });
}

std::vector<Complex> c6_sum_truncated(const SimplePointedTriangle& T, const Rational& t,
                                      const SpectralConfig& cfg)
{
    const long h = T.h().get_si();
    const long k = T.k().get_si();
    const double scale = -1.0 / (two_pi * two_pi);
    return damped_sums(cfg, [&](const LatticePoint& p) {
        const long pole = h * p.x - k * p.y;
        if (p.y == 0 || pole == 0)
            return Complex(0.0);
        const double r = scale * static_cast<double>(h) / (static_cast<double>(pole) * static_cast<double>(p.y));
        return -r * unit_phase(t * Rational(Integer(Integer(k) * p.y)));
    });
}

TwistedCheck twisted_transform_check(const IntMatrix2& M, const LatticeVector& xi,
                                     const RationalPoint& shift, int grid)
{
    const Integer det = M.det();
    if (det == 0)
        throw DomainError("twisted transform: singular matrix");
    if (grid < 2 || grid % 2 != 0)
        throw DomainError("twisted transform: grid must be a positive even number");
    const LatticeVector freq = M.apply(xi);
    if (freq.x == 0 || freq.y == 0)
        throw DomainError("twisted transform: M xi has a zero coordinate");

    const double abs_det = Integer(abs(det)).get_d();
    const Complex shift_phase = unit_phase(Rational(xi.x) * shift.x + Rational(xi.y) * shift.y);

    TwistedCheck r;
    r.closed = abs_det / (Complex(0.0, two_pi) * Complex(0.0, two_pi)) /
               (freq.x.get_d() * freq.y.get_d()) * shift_phase;

    // Integer frequencies make every phase an exact multiple of 1/grid.
    const Integer N(grid);
    const long a = Integer(((freq.x % N) + N) % N).get_si();
    const long b = Integer(((freq.y % N) + N) % N).get_si();
    std::vector<Complex> roots(grid);
    for (int j = 0; j < grid; ++j)
        roots[j] = std::polar(1.0, -two_pi * j / grid);
    std::vector<double> weight(grid + 1);
    for (int i = 0; i <= grid; ++i)
        weight[i] = (i == 0 || i == grid) ? 1.0 : (i % 2 ? 4.0 : 2.0);

    const double step = 1.0 / grid;
    ComplexSum total;
    for (int i = 0; i <= grid; ++i) {
        const double u = i * step - 0.5;
        ComplexSum row;
        for (int j = 0; j <= grid; ++j) {
            const double v = j * step - 0.5;
            const long phase = (a * i + b * j) % grid;
            row.add(weight[j] * u * v * roots[phase]);
        }
        total.add(weight[i] * row.value());
    }
    r.quadrature = abs_det * (step / 3) * (step / 3) * total.value() * shift_phase;
    return r;
}

const std::vector<TwistedCase>& twisted_reference_cases()
{
    auto m = [](long a, long b, long c, long d) {
        return IntMatrix2{{{{Integer(a), Integer(b)}, {Integer(c), Integer(d)}}}};
    };
    auto q = [](long n, long d) { return Rational(Integer(n), Integer(d)); };
    static const std::vector<TwistedCase> cases = {
        {"((2,-3),(1,0)) xi=(1,0)", m(2, -3, 1, 0), {1, 0}, {0, 0}},
        {"identity xi=(1,1)", m(1, 0, 0, 1), {1, 1}, {0, 0}},
        {"((1,1),(-1,2)) xi=(2,-1) shift=(1/3,1/4)", m(1, 1, -1, 2), {2, -1}, {q(1, 3), q(1, 4)}},
        {"((3,1),(1,1)) xi=(1,1) shift=(-1/2,2)", m(3, 1, 1, 1), {1, 1}, {q(-1, 2), 2}},
        {"((0,2),(5,1)) xi=(-1,3) shift=(0,2/7)", m(0, 2, 5, 1), {-1, 3}, {0, q(2, 7)}},
    };
    return cases;
}

ConvergenceReport convergence_report(const SimplePointedTriangle& T, const Rational& t,
                                     const SpectralConfig& cfg)
{
    cfg.validate();
    std::vector<Complex> values;
    double closed = 0;
    switch (cfg.target) {
    case SpectralTarget::a1:
        values = a1_truncated(T, t, cfg);
        closed = quasi_coefficients(T, t).a1.to_double();
        break;
    case SpectralTarget::b1:
        values = b_sums_truncated(T, t, cfg).b1;
        closed = quasi_coefficients(T, t).a0.to_double();
        break;
    case SpectralTarget::b2:
        values = b_sums_truncated(T, t, cfg).b2;
        break;
    case SpectralTarget::b3:
        values = b_sums_truncated(T, t, cfg).b3;
        break;
    case SpectralTarget::c3_sum:
        values = c3_sum_truncated(T, t, cfg);
        closed = c_terms(T, t).c3.to_double();
        break;
    case SpectralTarget::c6_sum:
        values = c6_sum_truncated(T, t, cfg);
        closed = c_terms(T, t).c6.to_double();
        break;
    case SpectralTarget::twisted_transform:
        throw DomainError("spectral: the twisted transform has its own report");
    }

    ConvergenceReport report;
    report.closed_form = closed;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double err = std::abs(values[i].real() - closed);
        if (!report.rows.empty() && err > report.rows.back().abs_error + 1e-12)
            report.monotone = false;
        report.max_imaginary = std::max(report.max_imaginary, std::abs(values[i].imag()));
        report.rows.push_back({cfg.epsilon_schedule[i], values[i].real(), err});
    }
    return report;
}

ConvergenceReport twisted_convergence_report(const IntMatrix2& M, const LatticeVector& xi,
                                             const RationalPoint& shift,
                                             const std::vector<int>& grids)
{
    ConvergenceReport report;
    for (int n : grids) {
        const TwistedCheck c = twisted_transform_check(M, xi, shift, n);
        const double err = std::abs(c.closed - c.quadrature);
        if (!report.rows.empty() && err > report.rows.back().abs_error + 1e-12)
            report.monotone = false;
        report.closed_form = c.closed.real();
        report.max_imaginary = std::max(report.max_imaginary, std::abs(c.quadrature.imag()));
        report.rows.push_back({1.0 / n, c.quadrature.real(), err});
    }
    return report;
}

std::string format_convergence_csv(const ConvergenceReport& report)
{
    std::string out = "epsilon,value,abs_error\n";
    char buf[128];
    for (const ConvergenceRow& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.6e\n", r.epsilon, r.value, r.abs_error);
        out += buf;
    }
    return out;
}

} // namespace solidangle
