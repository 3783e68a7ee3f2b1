#pragma once

// Periodic Bernoulli polynomials and Dedekind-type sums over exact rationals.

#include "solidangle/exact.hpp"

namespace solidangle {

/// Sawtooth: 0 at integers, {x} - 1/2 elsewhere.
Rational b1_periodic(const Rational& x);
/// {x} - 1/2 everywhere (-1/2 at integers).
Rational b1_star(const Rational& x);
/// {x}^2 - {x} + 1/6.
Rational b2_periodic(const Rational& x);

/// Parameters of s(h, k; y, x). `y` shifts the argument of the first sawtooth
/// factor, `x` shifts the residue.
struct DedekindParams {
    Integer h;
    Integer k;
    Rational y;
    Rational x;
};

/// sum_{r mod k} B1(h(r+x)/k + y) * B1((r+x)/k), by direct O(k) summation.
/// Throws DomainError unless h, k > 0 and gcd(h, k) == 1.
Rational dedekind_rademacher(const DedekindParams& p);

/// Same sum with the everywhere-sawtooth b1_star in both factors.
Rational dedekind_rademacher_star(const DedekindParams& p);

/// Classical s(h, k) by direct summation.
Rational dedekind_sum(const Integer& h, const Integer& k);

/// Classical s(h, k) through the reciprocity recursion; O(log min(h, k))
/// arithmetic steps.
Rational dedekind_sum_fast(const Integer& h, const Integer& k);

/// (1/12)(h/k + 1/(hk) + k/h) - 1/4, the right-hand side of Dedekind
/// reciprocity.
Rational dedekind_reciprocity_rhs(const Integer& h, const Integer& k);

} // namespace solidangle
