#pragma once

// Closed-form norms for quadratic symbols
//
//   phi(s) = c0*s + c1 + cr*r^{-s} + cr2*r^{-2s},   cr, cr2 > 0.
//
// Expanding n^{-phi} and collecting powers of r^{-s} turns the coefficient
// 1-norm into a Hermite-polynomial series:
//
//   ||n^{-phi}|| = n^{-Re c1} * sum_k |H_k(lambda_n)| / k! * x_n^k
//
// with x_n = sqrt(cr2 * log n) and lambda_n = -cr/(2 sqrt(cr2)) * sqrt(log n).
// The growth threshold T = cr^2/(8 cr2) + cr2 separates compact, bounded and
// unbounded composition operators. Magnitudes along the recurrence blow up
// far past double range before the 1/k! tames them, so everything is carried
// with an explicit power-of-two exponent.

#include <complex>
#include <cstdint>

#include "wd/numeric.hpp"
#include "wd/symbol.hpp"

namespace wd {

struct QuadraticSymbol {
    std::uint32_t c0;
    Complex c1;
    std::uint64_t r;
    double cr;
    double cr2;

    // Validates r >= 2 and cr, cr2 > 0 (real and positive by type).
    QuadraticSymbol(std::uint32_t c0, Complex c1, std::uint64_t r, double cr,
                    double cr2);
};

// The same symbol as a generic CompositionSymbol, for cross-checking the
// closed form against the direct exponential expansion.
CompositionSymbol as_composition(const QuadraticSymbol& sym);

// Per-n quantities of the closed form.
struct NormProfile {
    std::uint64_t n;
    double x_n;
    double lambda_n;
};

NormProfile make_profile(const QuadraticSymbol& sym, std::uint64_t n);

// value = frac * 2^exp2 with frac in [0.5, 1) up to sign (0 when frac = 0).
// The scaling is exact, so arithmetic on ScaledReal rounds exactly like
// plain doubles while the exponent range is effectively unbounded.
struct ScaledReal {
    double frac = 0.0;
    std::int64_t exp2 = 0;

    static ScaledReal from(double v);
    double to_double() const;  // may overflow to +-inf for huge exponents
    double log_abs() const;    // natural log of |value|; -inf for zero
    int sign() const;          // -1, 0, +1
};

ScaledReal sr_mul(ScaledReal a, double factor);
ScaledReal sr_add(ScaledReal a, ScaledReal b);
ScaledReal sr_abs(ScaledReal a);

// H_k(lambda) by the recurrence H_{k+1} = 2*lambda*H_k - 2*k*H_{k-1} in
// plain doubles. Requires k <= 1e5; throws HermiteOverflow when the value
// leaves double range (switch to hermite_scaled then).
double hermite(std::uint32_t k, double lambda);

// Same recurrence carried in ScaledReal; never overflows.
ScaledReal hermite_scaled(std::uint32_t k, double lambda);

// The k-th summand |H_k(lambda_n)| / k! * x_n^k of the closed form.
double hermite_series_term(std::uint32_t k, const NormProfile& profile);

// Partial closed-form norm with terms k = 0..K. Requires K >= 1.
// Non-decreasing in K; agrees with the partial norm of
// image_basis(as_composition(sym), n, n^c0 * r^K).
double closed_form_norm(const QuadraticSymbol& sym, std::uint64_t n,
                        std::uint32_t K);

struct AutoNormResult {
    double value;
    std::uint32_t terms_used;  // largest k included
};

// Extends K until the dropped tail is provably below rel_tail of the value,
// using the sharp Hermite magnitude bound |H_k| <= (2^k k!)^{1/2} e^{l^2/2}:
// past k ~ 8 cr2 log n the terms decay faster than geometrically with
// ratio 1/2.
AutoNormResult closed_form_norm_auto(const QuadraticSymbol& sym,
                                     std::uint64_t n, double rel_tail);

// n^{-Re c1 + cr^2/(8 cr2) + cr2}, the value of the closed form at the
// maximizing phase; a lower bound of the norm. Only meaningful when the
// maximizing point lands on the admissible range, i.e. cr <= 4*cr2; throws
// NotApplicable otherwise.
double lower_bound(const QuadraticSymbol& sym, std::uint64_t n);

// T = cr^2/(8*cr2) + cr2.
double growth_threshold(const QuadraticSymbol& sym);

// Five-way decision for the quadratic family, comparing Re c1 against T
// with tolerance 1e-12 (snapped equalities are called out in the evidence):
//   Re c1 > T                         -> Compact
//   Re c1 = T, cr != 4*cr2            -> Bounded
//   Re c1 = T, cr  = 4*cr2            -> Unbounded
//   Re c1 < T, cr <= 4*cr2            -> Unbounded
//   Re c1 < T, cr > 4*cr2             -> Bounded if Re c1 >= cr + cr2
//                                        (contraction rule), else Inconclusive
OperatorDiagnosis classify(const QuadraticSymbol& sym);

struct OrdinaryPointReport {
    double theta0;
    double t2_real_part;
    bool ordinary;
};

// Behavior of psi(z) = exp(-(c1 + c2 z + c4 z^2) log 2) near the point
// theta0 where |psi(e^{i theta})| attains its maximum 1. Requires that the
// maximum actually is 1 (Re c1 must cancel the minimum of the exponent's
// real part within 1e-9; MaxNotOnCircle otherwise). theta0 = arccos of the
// clamped vertex -c2/(4 c4); the returned t2_real_part is the real part of
// the second Taylor coefficient of log psi(e^{i(theta0+t)}) in t, and the
// point is ordinary when it is nonzero (|t2| > 1e-12): bounded power norms
// hinge on exactly this.
OrdinaryPointReport ordinary_point_test(Complex c1, double c2, double c4);

// Verifies |H_k(lambda)| <= (2^k k!)^{1/2} * exp(lambda^2/2), comparing in
// the log domain.
bool indritz_check(std::uint32_t k, double lambda);

}  // namespace wd
