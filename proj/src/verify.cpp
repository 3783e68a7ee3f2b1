#include "solidangle/verify.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "solidangle/bernoulli.hpp"
#include "solidangle/corpus.hpp"
#include "solidangle/errors.hpp"
#include "solidangle/oracle.hpp"
#include "solidangle/polygon.hpp"
#include "solidangle/spectral.hpp"
#include "solidangle/triangle.hpp"

namespace solidangle {
namespace {

constexpr std::size_t max_messages = 10;

struct Triple {
    long h, k, p, q;
};

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++result_.checks;
        if (ok)
            return;
        ++result_.failures;
        if (result_.messages.size() < max_messages)
            result_.messages.push_back(describe());
    }

    // Exceptions count as failures of the check that raised them.
    void guarded(const std::function<bool()>& body, const std::function<std::string()>& describe)
    {
        try {
            check(body(), describe);
        } catch (const std::exception& e) {
            const std::string what = e.what();
            check(false, [&] { return describe() + ": " + what; });
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string label(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty())
            out += ' ';
        out += p;
    }
    return out;
}

std::string num(long v)
{
    return std::to_string(v);
}

SuiteResult reciprocity_suite()
{
    Recorder r("reciprocity");
    for (long h = 1; h <= 100; ++h)
        for (long k = 1; k <= 100; ++k) {
            if (gcd(h, k) != 1)
                continue;
            r.guarded(
                [&] {
                    return dedekind_sum(h, k) + dedekind_sum(k, h) == dedekind_reciprocity_rhs(h, k);
                },
                [&] { return label({"reciprocity h=", num(h), "k=", num(k)}); });
            r.guarded([&] { return dedekind_sum_fast(h, k) == dedekind_sum(h, k); },
                      [&] { return label({"fast path h=", num(h), "k=", num(k)}); });
        }
    return r.take();
}

Integer boundary_points(const RationalPolygon& P, const Rational& t)
{
    Integer b = 0;
    for (std::size_t i = 0; i < P.size(); ++i)
        b += segment_lattice_count(P.vertex(i), P.vertex(i + 1), t) - 1;
    return b;
}

SuiteResult pick_suite()
{
    Recorder r("pick");
    for (const CorpusEntry& e : polygon_corpus()) {
        if (!e.lattice)
            continue;
        const RationalPolygon P = parse_polygon(e.text);
        for (long n = 1; n <= 5; ++n) {
            const Rational area = P.area() * Rational(n * n);
            r.guarded([&] { return solid_angle_sum_polygon(P, n) == AngleValue(area); },
                      [&] { return label({"A = area", e.name, "t=", num(n)}); });
            r.guarded(
                [&] {
                    const Rational pick = area + Rational(boundary_points(P, n)) / Rational(2) + Rational(1);
                    return Rational(ehrhart_polygon(P, n)) == pick;
                },
                [&] { return label({"L = Pick", e.name, "t=", num(n)}); });
        }
    }
    for (long h = 1; h <= 12; ++h)
        for (long k = 1; k <= 12; ++k) {
            if (gcd(h, k) != 1)
                continue;
            const SimplePointedTriangle T(h, k);
            for (long n = 1; n <= 4; ++n) {
                const Rational area(Integer(h * k * n * n), Integer(2));
                r.guarded([&] { return solid_angle_sum_triangle(T, n) == AngleValue(area); },
                          [&] { return label({"triangle A h=", num(h), "k=", num(k), "t=", num(n)}); });
                r.guarded(
                    [&] {
                        const EdgeCounts c = edge_counts(T, n);
                        const Integer boundary = c.e1 + c.e2 + c.e3 - 3;
                        return Rational(ehrhart_triangle(T, n)) ==
                               area + Rational(boundary) / Rational(2) + Rational(1);
                    },
                    [&] { return label({"triangle L h=", num(h), "k=", num(k), "t=", num(n)}); });
            }
        }
    return r.take();
}

SuiteResult oracle_suite()
{
    Recorder r("oracle");
    const Rational ts[] = {Rational(Integer(1), Integer(3)), Rational(Integer(1), Integer(2)),
                           Rational(Integer(2), Integer(3)), Rational(1),
                           Rational(Integer(3), Integer(2)), Rational(2)};
    for (const CorpusEntry& e : polygon_corpus()) {
        const RationalPolygon P = parse_polygon(e.text);
        for (const Rational& t : ts) {
            const BruteForceResult b = brute_force(P, t);
            r.guarded([&] { return solid_angle_sum_polygon(P, t) == b.A; },
                      [&] { return label({"polygon A", e.name, "t=", t.str()}); });
            r.guarded([&] { return ehrhart_polygon(P, t) == b.L; },
                      [&] { return label({"polygon L", e.name, "t=", t.str()}); });
        }
    }
    for (long h = 1; h <= 5; ++h)
        for (long k = 1; k <= 5; ++k) {
            if (gcd(h, k) != 1)
                continue;
            const SimplePointedTriangle T(h, k);
            const RationalPolygon P = triangle_polygon(h, k);
            for (long q = 1; q <= 4; ++q)
                for (long p = 1; p <= 12; ++p) {
                    const Rational t{Integer(p), Integer(q)};
                    const BruteForceResult b = brute_force(P, t);
                    r.guarded([&] { return solid_angle_sum_triangle(T, t) == b.A; },
                              [&] { return label({"triangle A h=", num(h), "k=", num(k), "t=", t.str()}); });
                    r.guarded([&] { return solid_angle_sum_triangle(T, -t) == brute_force_A(P, -t); },
                              [&] { return label({"triangle A h=", num(h), "k=", num(k), "t=", (-t).str()}); });
                    r.guarded([&] { return ehrhart_triangle(T, t) == b.L; },
                              [&] { return label({"triangle L h=", num(h), "k=", num(k), "t=", t.str()}); });
                }
        }
    return r.take();
}

SuiteResult knuth_suite()
{
    Recorder r("knuth");
    const Rational nus[] = {Rational(Integer(1), Integer(3)), Rational(Integer(1), Integer(2)),
                            Rational(Integer(5), Integer(7)), Rational(Integer(1), Integer(11)),
                            Rational(Integer(10), Integer(11))};
    for (long h = 1; h <= 8; ++h)
        for (long k = 1; k <= 8; ++k) {
            if (gcd(h, k) != 1)
                continue;
            for (long n = -12; n <= 12; ++n)
                for (const Rational& nu : nus) {
                    const Rational a = (Rational(n) + nu) / Rational(k);
                    const Rational b = Rational(Integer(n), Integer(k));
                    const Rational half(Integer(1), Integer(2));
                    r.guarded(
                        [&] {
                            return dedekind_rademacher_star({h, k, a, 0}) + half * frac(a) ==
                                   dedekind_rademacher_star({h, k, b, 0}) + half * frac(b);
                        },
                        [&] { return label({"step h=", num(h), "k=", num(k), "n=", num(n), "nu=", nu.str()}); });
                }
        }
    return r.take();
}

SuiteResult spectral_suite()
{
    Recorder r("spectral");
    const Triple a1_cases[] = {{1, 1, 3, 10}, {1, 1, 2, 5}, {1, 2, 1, 3}, {2, 1, 3, 10}, {1, 3, 2, 15}};
    SpectralConfig cfg;
    for (const Triple& c : a1_cases) {
        const SimplePointedTriangle T(c.h, c.k);
        const Rational t(Integer(c.p), Integer(c.q));
        const std::string where = label({"h=", num(c.h), "k=", num(c.k), "t=", t.str()});
        cfg.target = SpectralTarget::a1;
        r.guarded(
            [&] {
                const ConvergenceReport rep = convergence_report(T, t, cfg);
                return rep.final_error() < 5e-2 && rep.max_imaginary < 1e-10;
            },
            [&] { return "a1 " + where; });
        r.guarded(
            [&] {
                const BSums b = b_sums_truncated(T, t, cfg);
                for (std::size_t i = 0; i < b.b2.size(); ++i)
                    if (std::abs(b.b2[i]) >= 1e-10 || std::abs(b.b3[i]) >= 1e-10)
                        return false;
                return true;
            },
            [&] { return "b2/b3 vanishing " + where; });
    }
    cfg.target = SpectralTarget::b1;
    for (const Triple& c : {a1_cases[2], Triple{2, 3, 1, 5}}) {
        const SimplePointedTriangle T(c.h, c.k);
        const Rational t(Integer(c.p), Integer(c.q));
        r.guarded(
            [&] {
                const ConvergenceReport rep = convergence_report(T, t, cfg);
                return rep.final_error() < 5e-2 && rep.max_imaginary < 1e-10;
            },
            [&] { return label({"b1 h=", num(c.h), "k=", num(c.k), "t=", t.str()}); });
    }
    for (const TwistedCase& c : twisted_reference_cases())
        r.guarded(
            [&] {
                const TwistedCheck tc = twisted_transform_check(c.M, c.xi, c.shift);
                return std::abs(tc.closed - tc.quadrature) <= 1e-6;
            },
            [&] { return "twisted transform " + c.name; });
    return r.take();
}

} // namespace

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = {"reciprocity", "pick", "oracle", "knuth", "spectral"};
    return names;
}

std::vector<SuiteResult> run_verify(std::string_view suite)
{
    static const std::pair<std::string_view, SuiteResult (*)()> suites[] = {
        {"reciprocity", reciprocity_suite}, {"pick", pick_suite},         {"oracle", oracle_suite},
        {"knuth", knuth_suite},             {"spectral", spectral_suite},
    };
    std::vector<SuiteResult> out;
    for (const auto& [name, run] : suites)
        if (suite == "all" || suite == name)
            out.push_back(run());
    if (out.empty())
        throw ParseError("unknown verify suite '" + std::string(suite) + "'");
    return out;
}

std::string format_verify_summary(const std::vector<SuiteResult>& results)
{
    std::ostringstream os;
    bool all = true;
    for (const SuiteResult& s : results) {
        os << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << " (" << s.checks << " checks, "
           << s.failures << " failures)\n";
        for (const std::string& m : s.messages)
            os << "  " << m << "\n";
        all = all && s.passed();
    }
    os << (all ? "all suites passed" : "verification failed") << "\n";
    return os.str();
}

} // namespace solidangle
