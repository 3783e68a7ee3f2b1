#pragma once

// Floating-point check of the Fourier side: chain weights on the face poset of
// Delta(h, k), heat-kernel damped lattice sums for a1 and a0 and their pieces,
// and the twisted sawtooth transform, each compared with its closed form.

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "solidangle/exact.hpp"
#include "solidangle/polygon.hpp"
#include "solidangle/triangle.hpp"

namespace solidangle {

using Complex = std::complex<double>;
using RealVector = std::array<double, 2>;

enum class SpectralTarget { a1, b1, b2, b3, c3_sum, c6_sum, twisted_transform };

/// Accepts a1, b1, b2, b3, c3-sum, c6-sum and twisted-transform.
SpectralTarget parse_spectral_target(std::string_view name);
std::string_view spectral_target_name(SpectralTarget target);

struct SpectralConfig {
    std::vector<double> epsilon_schedule{0.2, 0.1, 0.05, 0.02};
    double radius_multiplier = 6.0;
    SpectralTarget target = SpectralTarget::a1;

    /// Throws DomainError unless the epsilons are positive and strictly
    /// decreasing and the multiplier is at least 4.
    void validate() const;
    /// ceil(c / sqrt(epsilon)).
    long radius(double epsilon) const;
};

/// Chains of the face poset: Delta -> E_i and Delta -> E_i -> V_j.
enum class Chain { e1, e2, e3, e1_v2, e1_v3, e2_v1, e2_v3, e3_v1, e3_v2 };

struct ChainWeight {
    Complex rational;
    Complex exponential;

    Complex value() const { return rational * exponential; }
};

/// Delta -> E_i needs xi orthogonal to E_i; Delta -> E_i -> V_j needs xi not
/// orthogonal to E_i. The zero vector is never admissible.
bool chain_admissible(Chain chain, const RealVector& xi, const SimplePointedTriangle& T);

/// W(t xi) = R(t xi) E(t xi). Throws DomainError outside the admissible set.
ChainWeight chain_weight(Chain chain, const RealVector& xi, const SimplePointedTriangle& T,
                         const Rational& t);

/// One damped truncated sum per epsilon of the schedule.
std::vector<Complex> a1_truncated(const SimplePointedTriangle& T, const Rational& t,
                                  const SpectralConfig& cfg);

struct BSums {
    std::vector<Complex> b1;
    std::vector<Complex> b2;
    std::vector<Complex> b3;
};

BSums b_sums_truncated(const SimplePointedTriangle& T, const Rational& t, const SpectralConfig& cfg);

/// The partial-fraction pieces of b1 that carry e^{-2 pi i h xi1 t} and
/// e^{-2 pi i k xi2 t} against the single pole h xi1 = k xi2.
std::vector<Complex> c3_sum_truncated(const SimplePointedTriangle& T, const Rational& t,
                                      const SpectralConfig& cfg);
std::vector<Complex> c6_sum_truncated(const SimplePointedTriangle& T, const Rational& t,
                                      const SpectralConfig& cfg);

struct TwistedCheck {
    Complex closed;
    Complex quadrature;
};

/// Transform of (y1 - 1/2)(y2 - 1/2) on [0,1]^2 pushed forward by x = M^T y +
/// shift, in closed form and by composite Simpson on a grid x grid mesh.
/// Throws DomainError for det M = 0, an odd grid or a vanishing row of M xi.
TwistedCheck twisted_transform_check(const IntMatrix2& M, const LatticeVector& xi,
                                     const RationalPoint& shift, int grid = 2048);

struct TwistedCase {
    std::string name;
    IntMatrix2 M;
    LatticeVector xi;
    RationalPoint shift;
};

/// Five fixed (M, xi, shift) instances, the first two with closed forms
/// -3/(8 pi^2) and -1/(4 pi^2).
const std::vector<TwistedCase>& twisted_reference_cases();

struct ConvergenceRow {
    double epsilon;
    double value;
    double abs_error;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double closed_form = 0;
    double max_imaginary = 0;
    bool monotone = true;

    double final_error() const { return rows.empty() ? 0 : rows.back().abs_error; }
};

/// Runs cfg.target (any target but twisted-transform) against its closed form.
ConvergenceReport convergence_report(const SimplePointedTriangle& T, const Rational& t,
                                     const SpectralConfig& cfg);

/// Twisted-transform rows: the epsilon column holds 1/grid, the value the real
/// part of the quadrature and the error |closed - quadrature|.
ConvergenceReport twisted_convergence_report(const IntMatrix2& M, const LatticeVector& xi,
                                             const RationalPoint& shift,
                                             const std::vector<int>& grids);

/// "epsilon,value,abs_error" header and one LF-terminated row per entry.
std::string format_convergence_csv(const ConvergenceReport& report);

} // namespace solidangle
