#include "solidangle/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "solidangle/bernoulli.hpp"
#include "solidangle/errors.hpp"
#include "support.hpp"

namespace solidangle {
namespace {

using test::Q;

constexpr double pi = std::numbers::pi;

SimplePointedTriangle T(long h, long k)
{
    return SimplePointedTriangle(h, k);
}

IntMatrix2 matrix(long m, long n, long p, long q)
{
    return IntMatrix2{{{{Integer(m), Integer(n)}, {Integer(p), Integer(q)}}}};
}

SpectralConfig config(SpectralTarget target, std::vector<double> eps = {0.2, 0.1, 0.05, 0.02})
{
    SpectralConfig cfg;
    cfg.target = target;
    cfg.epsilon_schedule = std::move(eps);
    return cfg;
}

TEST(SpectralConfigTest, Validation)
{
    SpectralConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.radius(0.02), 43);
    EXPECT_EQ(cfg.radius(0.25), 12);
    cfg.radius_multiplier = 3.5;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.radius_multiplier = 6;
    cfg.epsilon_schedule = {0.1, 0.2};
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.epsilon_schedule = {0.1, 0.1};
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.epsilon_schedule = {0.1, -0.05};
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.epsilon_schedule = {};
    EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(SpectralConfigTest, TargetNames)
{
    for (SpectralTarget t : {SpectralTarget::a1, SpectralTarget::b1, SpectralTarget::b2, SpectralTarget::b3,
                             SpectralTarget::c3_sum, SpectralTarget::c6_sum,
                             SpectralTarget::twisted_transform})
        EXPECT_EQ(parse_spectral_target(spectral_target_name(t)), t);
    EXPECT_THROW(parse_spectral_target("a2"), ParseError);
}

TEST(ChainWeightTest, Examples)
{
    const ChainWeight w = chain_weight(Chain::e2_v1, {1.0, 1.0}, T(2, 3), Q(1));
    EXPECT_NEAR(std::abs(w.rational - Complex(-1 / (8 * pi * pi))), 0.0, 1e-15);

    const ChainWeight e = chain_weight(Chain::e3_v2, {1.0, 1.0}, T(2, 3), Q(1));
    EXPECT_NEAR(std::abs(e.exponential - Complex(1.0)), 0.0, 1e-15);

    // Delta -> E1 at xi = eta (k, h) reduces to t^{-1} / (-2 pi i eta) times the
    // phase of the hypotenuse.
    for (long eta : {-3L, -1L, 2L})
        for (const Rational& t : {Q("1/3"), Q("-2/5"), Q(2)}) {
            const SimplePointedTriangle tri = T(2, 3);
            const ChainWeight w1 = chain_weight(Chain::e1, {3.0 * eta, 2.0 * eta}, tri, t);
            const Complex expected = 1.0 / (t.to_double() * Complex(0.0, -2 * pi * eta));
            EXPECT_NEAR(std::abs(w1.rational - expected), 0.0, 1e-14);
            const double phase = frac(t * Q(6 * eta)).to_double();
            EXPECT_NEAR(std::abs(w1.exponential - std::polar(1.0, -2 * pi * phase)), 0.0, 1e-14);
        }
}

TEST(ChainWeightTest, PartialFractionForm)
{
    const long h = 3, k = 2;
    const Rational t = Q("2/7");
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            if (h * x == k * y)
                continue;
            const RealVector xi{double(x), double(y)};
            const double td = t.to_double();
            const double e1 = td * x, e2 = td * y;
            const double r = -1 / (4 * pi * pi) * (k * e1 + h * e2) / ((e1 * e1 + e2 * e2) * (h * e1 - k * e2));
            const ChainWeight w = chain_weight(Chain::e1_v2, xi, T(h, k), t);
            EXPECT_NEAR(std::abs(w.rational - Complex(r)), 0.0, 1e-13);
            const ChainWeight w3 = chain_weight(Chain::e1_v3, xi, T(h, k), t);
            EXPECT_NEAR(std::abs(w3.rational + Complex(r)), 0.0, 1e-13);
        }
}

TEST(ChainWeightTest, Admissibility)
{
    EXPECT_TRUE(chain_admissible(Chain::e1, {3, 2}, T(2, 3)));
    EXPECT_FALSE(chain_admissible(Chain::e1, {1, 1}, T(2, 3)));
    EXPECT_TRUE(chain_admissible(Chain::e1_v2, {1, 1}, T(2, 3)));
    EXPECT_FALSE(chain_admissible(Chain::e1_v2, {3, 2}, T(2, 3)));
    EXPECT_TRUE(chain_admissible(Chain::e2, {4, 0}, T(2, 3)));
    EXPECT_FALSE(chain_admissible(Chain::e2_v1, {4, 0}, T(2, 3)));
    EXPECT_FALSE(chain_admissible(Chain::e3_v2, {0, 0}, T(2, 3)));
    EXPECT_THROW(chain_weight(Chain::e2_v3, {1, 0}, T(2, 3), Q(1)), DomainError);
    EXPECT_THROW(chain_weight(Chain::e1, {1, 1}, T(2, 3), Q(1)), DomainError);
    EXPECT_THROW(chain_weight(Chain::e1, {3, 2}, T(2, 3), Q(0)), DomainError);
}

TEST(SpectralSumTest, A1Targets)
{
    const struct {
        long h, k;
        const char* t;
    } cases[] = {{1, 1, "3/10"}, {1, 1, "2/5"}, {1, 2, "1/3"}, {2, 1, "3/10"}, {1, 3, "2/15"}};
    for (const auto& c : cases) {
        const Rational t = Q(c.t);
        const ConvergenceReport r = convergence_report(T(c.h, c.k), t, config(SpectralTarget::a1));
        EXPECT_DOUBLE_EQ(r.closed_form, (-b1_periodic(Q(c.h * c.k) * t)).to_double());
        EXPECT_LT(r.final_error(), 5e-2) << c.h << " " << c.k << " " << c.t;
        EXPECT_TRUE(r.monotone) << c.h << " " << c.k << " " << c.t;
        EXPECT_LT(r.max_imaginary, 1e-10);
    }
}

TEST(SpectralSumTest, A1AtSawtoothZero)
{
    const std::vector<Complex> v = a1_truncated(T(1, 2), Q("1/4"), config(SpectralTarget::a1));
    for (const Complex& z : v)
        EXPECT_LT(std::abs(z), 1e-12);
}

TEST(SpectralSumTest, BSymmetryVanishing)
{
    for (const auto& [h, k, t] : {std::tuple{2L, 3L, "1/5"}, std::tuple{1L, 1L, "3/10"},
                                  std::tuple{3L, 2L, "1/2"}, std::tuple{1L, 4L, "-2/7"}}) {
        const BSums b = b_sums_truncated(T(h, k), Q(t), config(SpectralTarget::b2, {0.2, 0.05, 0.02}));
        for (std::size_t i = 0; i < b.b2.size(); ++i) {
            EXPECT_LT(std::abs(b.b2[i]), 1e-10);
            EXPECT_LT(std::abs(b.b3[i]), 1e-10);
        }
    }
}

TEST(SpectralSumTest, B1ApproachesA0)
{
    const ConvergenceReport r = convergence_report(T(2, 3), Q("1/5"), config(SpectralTarget::b1));
    EXPECT_DOUBLE_EQ(r.closed_form, quasi_coefficients(T(2, 3), Q("1/5")).a0.to_double());
    EXPECT_LT(r.final_error(), 5e-2);
    EXPECT_LT(r.max_imaginary, 1e-10);

    const ConvergenceReport r2 = convergence_report(T(1, 2), Q("1/3"), config(SpectralTarget::b1));
    EXPECT_LT(r2.final_error(), 5e-2);
    EXPECT_TRUE(r2.monotone);
}

TEST(SpectralSumTest, CTermSumsShrinkTowardClosedForm)
{
    const SpectralConfig cfg = config(SpectralTarget::c3_sum, {0.05, 0.02, 0.005});
    const ConvergenceReport c3 = convergence_report(T(2, 3), Q("1/5"), cfg);
    EXPECT_DOUBLE_EQ(c3.closed_form, c_terms(T(2, 3), Q("1/5")).c3.to_double());
    EXPECT_TRUE(c3.monotone);
    EXPECT_LT(c3.final_error(), 2e-2);

    SpectralConfig cfg6 = cfg;
    cfg6.target = SpectralTarget::c6_sum;
    const ConvergenceReport c6 = convergence_report(T(3, 2), Q("1/5"), cfg6);
    EXPECT_DOUBLE_EQ(c6.closed_form, c_terms(T(3, 2), Q("1/5")).c6.to_double());
    EXPECT_LT(c6.final_error(), 2e-2);
    EXPECT_LT(c6.max_imaginary, 1e-10);
}

TEST(TwistedTransformTest, Examples)
{
    TwistedCheck c = twisted_transform_check(matrix(2, -3, 1, 0), {1, 0}, {0, 0});
    EXPECT_NEAR(c.closed.real(), -3 / (8 * pi * pi), 1e-15);
    EXPECT_NEAR(c.closed.real(), -0.0379954, 1e-7);
    EXPECT_LT(std::abs(c.closed - c.quadrature), 1e-6);

    c = twisted_transform_check(matrix(1, 0, 0, 1), {1, 1}, {0, 0});
    EXPECT_NEAR(c.closed.real(), -1 / (4 * pi * pi), 1e-15);
    EXPECT_LT(std::abs(c.closed - c.quadrature), 1e-6);
}

TEST(TwistedTransformTest, ShiftsAndMatrices)
{
    const struct {
        IntMatrix2 M;
        LatticeVector xi;
        RationalPoint shift;
    } cases[] = {
        {matrix(1, 1, -1, 2), {2, -1}, {Q("1/3"), Q("1/4")}},
        {matrix(3, 1, 1, 1), {1, 1}, {Q("-1/2"), Q(2)}},
        {matrix(0, 2, 5, 1), {-1, 3}, {Q(0), Q("2/7")}},
    };
    for (const auto& c : cases) {
        const TwistedCheck r = twisted_transform_check(c.M, c.xi, c.shift);
        EXPECT_LT(std::abs(r.closed - r.quadrature), 1e-6);
    }
}

TEST(TwistedTransformTest, Rejections)
{
    EXPECT_THROW(twisted_transform_check(matrix(1, 2, 2, 4), {1, 0}, {0, 0}), DomainError);
    EXPECT_THROW(twisted_transform_check(matrix(2, -3, 1, 0), {0, 1}, {0, 0}, 64), DomainError);
    EXPECT_THROW(twisted_transform_check(matrix(1, 1, 0, 1), {1, -1}, {0, 0}, 64), DomainError);
    EXPECT_THROW(twisted_transform_check(matrix(1, 0, 0, 1), {1, 1}, {0, 0}, 63), DomainError);
}

TEST(TwistedTransformTest, ReportRows)
{
    const ConvergenceReport r =
        twisted_convergence_report(matrix(2, -3, 1, 0), {1, 0}, {0, 0}, {256, 512, 1024, 2048});
    ASSERT_EQ(r.rows.size(), 4u);
    EXPECT_DOUBLE_EQ(r.rows[0].epsilon, 1.0 / 256);
    EXPECT_TRUE(r.monotone);
    EXPECT_LT(r.final_error(), 1e-6);
}

TEST(ConvergenceCsvTest, Format)
{
    ConvergenceReport r;
    r.rows = {{0.2, 0.5, 0.25}, {0.02, -0.125, 1e-12}};
    EXPECT_EQ(format_convergence_csv(r),
              "epsilon,value,abs_error\n0.2,0.5,2.500000e-01\n0.02,-0.125,1.000000e-12\n");
}

TEST(ConvergenceCsvTest, Deterministic)
{
    const SpectralConfig cfg = config(SpectralTarget::b1, {0.2, 0.1});
    EXPECT_EQ(format_convergence_csv(convergence_report(T(2, 3), Q("1/5"), cfg)),
              format_convergence_csv(convergence_report(T(2, 3), Q("1/5"), cfg)));
}

} // namespace
} // namespace solidangle
