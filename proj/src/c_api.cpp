#include "solidangle/solidangle.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>

#include "solidangle/bernoulli.hpp"
#include "solidangle/errors.hpp"
#include "solidangle/oracle.hpp"
#include "solidangle/polygon.hpp"
#include "solidangle/spectral.hpp"
#include "solidangle/triangle.hpp"
#include "solidangle/verify.hpp"

struct sa_angle {
    solidangle::AngleValue value;
};

struct sa_polygon {
    solidangle::RationalPolygon polygon;
};

namespace {

using namespace solidangle;

thread_local std::string last_error;

struct NullArgument {
    const char* name;
};

struct IoFailure {
    std::string message;
};

sa_status fail(sa_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

template <typename Body>
sa_status guarded(Body body)
{
    try {
        body();
        last_error.clear();
        return SA_OK;
    } catch (const NullArgument& e) {
        return fail(SA_ERR_NULL, std::string(e.name) + " must not be NULL");
    } catch (const IoFailure& e) {
        return fail(SA_ERR_IO, e.message);
    } catch (const ParseError& e) {
        return fail(SA_ERR_PARSE, e.what());
    } catch (const DomainError& e) {
        return fail(SA_ERR_DOMAIN, e.what());
    } catch (const InternalError& e) {
        return fail(SA_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SA_ERR_INTERNAL, e.what());
    }
}

template <typename T>
T* require(T* p, const char* name)
{
    if (p == nullptr)
        throw NullArgument{name};
    return p;
}

Rational rational_arg(const char* text, const char* name)
{
    return Rational::parse(require(text, name));
}

Rational optional_rational(const char* text)
{
    return text == nullptr ? Rational() : Rational::parse(text);
}

Integer integer_arg(const char* text, const char* name)
{
    const Rational q = rational_arg(text, name);
    if (!q.is_integer())
        throw ParseError(std::string(name) + " must be an integer, got '" + text + "'");
    return q.num();
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_string(char** out, const std::string& s)
{
    *require(out, "out") = copy_string(s);
}

void put_angle(sa_angle** out, AngleValue v)
{
    require(out, "out");
    *out = new sa_angle{std::move(v)};
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

extern "C" {

const char* sa_last_error(void)
{
    return last_error.c_str();
}

const char* sa_status_name(sa_status status)
{
    switch (status) {
    case SA_OK: return "ok";
    case SA_ERR_PARSE: return "parse error";
    case SA_ERR_DOMAIN: return "domain error";
    case SA_ERR_IO: return "i/o error";
    case SA_ERR_NULL: return "null argument";
    case SA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void sa_string_free(char* s)
{
    std::free(s);
}

void sa_angle_free(sa_angle* a)
{
    delete a;
}

sa_status sa_angle_str(const sa_angle* a, char** out)
{
    return guarded([&] { put_string(out, require(a, "angle")->value.str()); });
}

sa_status sa_angle_to_double(const sa_angle* a, double* out)
{
    return guarded([&] { *require(out, "out") = require(a, "angle")->value.to_double(); });
}

int sa_angle_has_atoms(const sa_angle* a)
{
    return a != nullptr && a->value.has_atoms() ? 1 : 0;
}

sa_status sa_dedekind(const char* h, const char* k, const char* y, const char* x, int star, int fast,
                      char** out)
{
    return guarded([&] {
        const DedekindParams p{integer_arg(h, "h"), integer_arg(k, "k"), optional_rational(y),
                               optional_rational(x)};
        Rational value;
        if (fast) {
            if (star || !p.y.is_zero() || !p.x.is_zero())
                throw DomainError("the fast path computes only the classical sum s(h,k)");
            value = dedekind_sum_fast(p.h, p.k);
        } else {
            value = star ? dedekind_rademacher_star(p) : dedekind_rademacher(p);
        }
        put_string(out, value.str());
    });
}

sa_status sa_triangle_A(const char* h, const char* k, const char* t, sa_angle** out)
{
    return guarded([&] {
        const SimplePointedTriangle T(integer_arg(h, "h"), integer_arg(k, "k"));
        put_angle(out, solid_angle_sum_triangle(T, rational_arg(t, "t")));
    });
}

sa_status sa_triangle_L(const char* h, const char* k, const char* t, char** out)
{
    return guarded([&] {
        const SimplePointedTriangle T(integer_arg(h, "h"), integer_arg(k, "k"));
        put_string(out, ehrhart_triangle(T, rational_arg(t, "t")).get_str());
    });
}

sa_status sa_triangle_coeffs(const char* h, const char* k, const char* t, char** out)
{
    return guarded([&] {
        const SimplePointedTriangle T(integer_arg(h, "h"), integer_arg(k, "k"));
        const Rational tq = rational_arg(t, "t");
        const QuasiCoefficients q = quasi_coefficients(T, tq);
        const CTerms c = c_terms(T, tq);
        std::ostringstream os;
        os << "a2=" << q.a2.str() << "\n"
           << "a1=" << q.a1.str() << "\n"
           << "a0=" << q.a0.str() << "\n"
           << "c1=" << c.c1.str() << "\n"
           << "c2=" << c.c2.str() << "\n"
           << "c3=" << c.c3.str() << "\n"
           << "c4=" << c.c4.str() << "\n"
           << "c5=" << c.c5.str() << "\n"
           << "c6=" << c.c6.str() << "\n";
        put_string(out, os.str());
    });
}

sa_status sa_polygon_parse(const char* text, sa_polygon** out)
{
    return guarded([&] {
        RationalPolygon p = parse_polygon(require(text, "text"));
        *require(out, "out") = new sa_polygon{std::move(p)};
    });
}

sa_status sa_polygon_read_file(const char* path, sa_polygon** out)
{
    return guarded([&] {
        require(out, "out");
        std::ifstream in(require(path, "path"), std::ios::binary);
        if (!in)
            throw IoFailure{std::string("cannot open polygon file '") + path + "'"};
        std::ostringstream buf;
        buf << in.rdbuf();
        *out = new sa_polygon{parse_polygon(buf.str())};
    });
}

void sa_polygon_free(sa_polygon* p)
{
    delete p;
}

size_t sa_polygon_size(const sa_polygon* p)
{
    return p == nullptr ? 0 : p->polygon.size();
}

sa_status sa_polygon_A(const sa_polygon* p, const char* t, sa_angle** out)
{
    return guarded([&] {
        put_angle(out, solid_angle_sum_polygon(require(p, "polygon")->polygon, rational_arg(t, "t")));
    });
}

sa_status sa_polygon_L(const sa_polygon* p, const char* t, char** out)
{
    return guarded([&] {
        put_string(out, ehrhart_polygon(require(p, "polygon")->polygon, rational_arg(t, "t")).get_str());
    });
}

sa_status sa_oracle_A(const sa_polygon* p, const char* t, sa_angle** out)
{
    return guarded([&] {
        put_angle(out, brute_force_A(require(p, "polygon")->polygon, rational_arg(t, "t")));
    });
}

sa_status sa_oracle_L(const sa_polygon* p, const char* t, char** out)
{
    return guarded([&] {
        put_string(out, brute_force_L(require(p, "polygon")->polygon, rational_arg(t, "t")).get_str());
    });
}

sa_status sa_sweep_csv(const char* h, const char* k, const char* t_min, const char* t_max, long steps,
                       char** out)
{
    return guarded([&] {
        const SimplePointedTriangle T(integer_arg(h, "h"), integer_arg(k, "k"));
        const Rational lo = rational_arg(t_min, "t_min");
        const Rational hi = rational_arg(t_max, "t_max");
        if (lo.sign() <= 0)
            throw DomainError("sweep: t-min must be positive");
        if (!(lo < hi))
            throw DomainError("sweep: t-min must be below t-max");
        if (steps < 1)
            throw DomainError("sweep: steps must be at least 1");
        const Rational step = (hi - lo) / Rational(steps);
        std::string csv = "t,A_float,L_int\n";
        for (long i = 0; i <= steps; ++i) {
            const Rational t = lo + step * Rational(i);
            csv += t.str() + "," + format_double(solid_angle_sum_triangle(T, t).to_double()) + "," +
                   ehrhart_triangle(T, t).get_str() + "\n";
        }
        put_string(out, csv);
    });
}

sa_status sa_spectral_csv(const char* target, const char* h, const char* k, const char* t,
                          const double* eps, size_t n_eps, double c, char** out)
{
    return guarded([&] {
        SpectralConfig cfg;
        cfg.target = parse_spectral_target(require(target, "target"));
        if (cfg.target == SpectralTarget::twisted_transform)
            throw DomainError("use sa_twisted_csv for the twisted-transform target");
        if (eps != nullptr)
            cfg.epsilon_schedule.assign(eps, eps + n_eps);
        cfg.radius_multiplier = c;
        cfg.validate();
        const SimplePointedTriangle T(integer_arg(h, "h"), integer_arg(k, "k"));
        put_string(out, format_convergence_csv(convergence_report(T, rational_arg(t, "t"), cfg)));
    });
}

sa_status sa_twisted_csv(const long matrix[4], const long xi[2], const char* shift_x, const char* shift_y,
                         const int* grids, size_t n_grids, char** out)
{
    return guarded([&] {
        require(matrix, "matrix");
        require(xi, "xi");
        require(grids, "grids");
        if (n_grids == 0)
            throw DomainError("twisted transform: no grid sizes");
        const IntMatrix2 M{{{{Integer(matrix[0]), Integer(matrix[1])}, {Integer(matrix[2]), Integer(matrix[3])}}}};
        const RationalPoint shift{optional_rational(shift_x), optional_rational(shift_y)};
        const std::vector<int> g(grids, grids + n_grids);
        put_string(out, format_convergence_csv(
                            twisted_convergence_report(M, {Integer(xi[0]), Integer(xi[1])}, shift, g)));
    });
}

sa_status sa_verify(const char* suite, char** summary, int* passed)
{
    return guarded([&] {
        require(summary, "summary");
        require(passed, "passed");
        const std::vector<SuiteResult> results = run_verify(require(suite, "suite"));
        bool ok = true;
        for (const SuiteResult& r : results)
            ok = ok && r.passed();
        *summary = copy_string(format_verify_summary(results));
        *passed = ok ? 1 : 0;
    });
}

} // extern "C"
