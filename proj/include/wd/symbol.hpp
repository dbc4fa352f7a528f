#pragma once

// Symbols phi(s) = c0*s + c1 + sum_{n>=2} c_n n^{-s} and the rules deciding
// what the induced composition operator f -> f(phi) does to the coefficient
// 1-norm. The central object is the image of the basis element n^{-s}:
//
//   n^{-phi(s)} = (n^{c0})^{-s} * n^{-c1} * n^{-omega(s)}
//
// with omega the tail. Its partial norms drive every verdict here: uniformly
// bounded means the operator is bounded, vanishing means compact, constant
// one means isometric.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wd/dirichlet.hpp"
#include "wd/numeric.hpp"

namespace wd {

class CompositionSymbol {
public:
    using Index = std::uint64_t;

    // coeffs maps n >= 1 to c_n; the index-1 entry is the constant c1.
    // Exact zeros are dropped. Constant symbols (c0 = 0 and no tail) are
    // rejected: they compose nothing. Throws ConstantSymbol / ValidationError.
    CompositionSymbol(std::uint32_t c0, std::map<Index, Complex> coeffs);

    std::uint32_t c0() const { return c0_; }
    Complex c1() const;

    // Every stored coefficient, constant included, ascending by index.
    const std::map<Index, Complex>& coeffs() const { return coeffs_; }

    // The tail omega: entries with index >= 2.
    std::map<Index, Complex> tail() const;

private:
    std::uint32_t c0_;
    std::map<Index, Complex> coeffs_;
};

enum class Verdict { Compact, BoundedContraction, Bounded, Unbounded, Inconclusive };

const char* verdict_name(Verdict v);

// Result of applying one analysis rule: the verdict, a sentence saying which
// rule fired and why, and whatever norm data the rule looked at.
struct OperatorDiagnosis {
    Verdict verdict;
    std::string evidence;
    std::vector<std::pair<std::uint64_t, double>> norm_samples;
};

// The series n^{-phi}, truncated at cutoff. Requires n >= 1 and that
// n^{c0} times the smallest tail index is representable in 64 bits
// (IndexOverflow otherwise). When n^{c0} already exceeds the cutoff the
// result is empty.
DirichletSeries image_basis(const CompositionSymbol& phi, std::uint64_t n,
                            std::uint64_t cutoff);

// Partial norms of image_basis(phi, n, cutoff) for n = 1..n_max, computed
// in parallel across n. Requires n_max >= 2. Each value is a lower bound of
// the true norm of n^{-phi}, non-decreasing in the cutoff.
std::vector<std::pair<std::uint64_t, double>> norm_sequence(
    const CompositionSymbol& phi, std::uint64_t n_max, std::uint64_t cutoff);

// Contraction rule: Re c1 >= sum_{n>=2} |c_n| makes every image norm at
// most 1 (strict inequality pushes them to 0, hence compactness). Equality
// is decided with absolute tolerance 1e-12. Returns Inconclusive when the
// comparison fails; this rule alone never proves unboundedness.
OperatorDiagnosis sufficient_condition(const CompositionSymbol& phi);

// True iff the prime-exponent vectors of the given integers are linearly
// independent over the rationals (exact integer rank). Requires each q >= 2.
bool multiplicative_independence(const std::vector<std::uint64_t>& qs);

// inf over t of Re phi(sigma + it), in closed form: when the tail indices
// q_j are multiplicatively independent, the oscillating terms can be phased
// arbitrarily and the infimum is c0*sigma + Re c1 - sum |d_j| q_j^{-sigma}.
// Requires sigma > 0; throws NotIndependent if the tail support fails the
// independence test.
double kronecker_inf(const CompositionSymbol& phi, double sigma);

// True iff phi(s) = c0*s + i*tau with c0 >= 1 (Re c1 tested against 0 with
// tolerance 1e-12, tail must be empty): exactly the symbols whose
// composition operator preserves the 1-norm.
bool dirichlet_isometry_check(const CompositionSymbol& phi);

// Scans pairs m < n <= n_max in lexicographic order for truncated supports
// of image_basis that intersect; returns the first such pair or nullopt.
// An isometric symbol must produce disjoint supports, so a hit here is a
// certificate of non-isometry. Requires n_max >= 2.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
spectra_disjointness_probe(const CompositionSymbol& phi, std::uint64_t n_max,
                           std::uint64_t cutoff);

}  // namespace wd
