#pragma once

// Trigonometric polynomials on the k-torus with absolutely summable
// coefficients, and the composition symbols acting on them. Monomial
// symbols phi_i(z) = eps_i * z^(row i of A) act on exponents through the
// transpose map A*, so isometry questions reduce to exact integer linear
// algebra; general symbols are screened by the two spectra conditions and,
// when those are silent, by a constructive search for colliding powers.
// Power-norm probes for the one-variable growth questions live here too.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wd/exact.hpp"
#include "wd/numeric.hpp"

namespace wd {

// Exponent tuple of one torus monomial. The dimension is fixed by the
// polynomial that owns the key; components stay below 2^31 so sums of a few
// of them cannot overflow an int64.
using MultiIndex = std::vector<std::uint32_t>;

std::uint64_t total_degree(const MultiIndex& alpha);

class TorusPolynomial {
public:
    explicit TorusPolynomial(std::size_t dim);

    std::size_t dim() const { return dim_; }

    // Exact-zero pruning as everywhere else. Throws DimensionMismatch if the
    // key has the wrong arity, ValidationError if a component is >= 2^31.
    void set(const MultiIndex& alpha, Complex value);
    void add_to(const MultiIndex& alpha, Complex value);

    Complex coefficient(const MultiIndex& alpha) const;

    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    // Lexicographic key order; the canonical iteration and serialization
    // order for this type.
    const std::map<MultiIndex, Complex>& terms() const { return coeffs_; }

private:
    std::size_t dim_;
    std::map<MultiIndex, Complex> coeffs_;
};

// Coefficient 1-norm. Moduli are accumulated smallest-first (compensated),
// so any two polynomials whose coefficient multisets agree get bitwise
// equal norms, regardless of how the terms are keyed: composition with an
// injective monomial symbol preserves this value exactly.
double one_norm(const TorusPolynomial& f);

// Largest total degree in the support (0 for the empty polynomial).
std::uint64_t max_total_degree(const TorusPolynomial& f);

// Convolution of coefficients, dropping result keys whose total degree
// exceeds degree_cap. Dimensions must agree (DimensionMismatch).
inline constexpr std::uint64_t kNoDegreeCap = ~static_cast<std::uint64_t>(0);
TorusPolynomial tpoly_mul(const TorusPolynomial& f, const TorusPolynomial& g,
                          std::uint64_t degree_cap);

// phi_i(z) = signs[i] * prod_j z_j^{matrix[i][j]}: dim_out monomial
// components in dim_in variables.
struct MonomialSymbol {
    std::size_t dim_in;
    std::size_t dim_out;
    std::vector<std::vector<std::uint32_t>> matrix;  // dim_out x dim_in
    std::vector<Complex> signs;                      // dim_out entries

    // Validates the shape and |signs[i]| = 1 within 1e-12.
    MonomialSymbol(std::vector<std::vector<std::uint32_t>> matrix,
                   std::vector<Complex> signs);
};

// The transpose action on exponents: gamma_j = sum_i matrix[i][j] *
// alpha[i]. alpha must have dimension dim_out; the result lives in dim_in.
// Components that leave the 2^31 range raise IndexOverflow.
MultiIndex astar_apply(const MonomialSymbol& sym, const MultiIndex& alpha);

// f(phi(z)): every term a z^alpha becomes a * signs^alpha * z^{A*(alpha)};
// colliding images accumulate. f must have dimension dim_out.
TorusPolynomial monomial_compose(const MonomialSymbol& sym,
                                 const TorusPolynomial& f);

struct MonomialIsometryReport {
    bool is_isometry;
    // Two distinct exponent tuples with the same image, if any were found
    // within the searched degree; (found later, found earlier).
    std::optional<std::pair<MultiIndex, MultiIndex>> witness;
    // Exact determinant, present when the matrix is square.
    std::optional<BigInt> determinant;
};

// Square symbols are decided exactly by the determinant (nonzero means A*
// is injective on exponents, hence an isometry). Independently, exponent
// tuples of total degree <= search_degree are enumerated (by degree, then
// lexicographically) for image collisions; for a singular square matrix a
// collision always exists within degree dim_in * max matrix entry.
// Non-square symbols report is_isometry from the search alone, certified
// only up to search_degree.
MonomialIsometryReport isometry_check_monomial(const MonomialSymbol& sym,
                                               std::uint64_t search_degree);

// Symbol with arbitrary polynomial components phi_i (all of the same input
// dimension). Components must map the polydisk into the closed unit disk:
// construction estimates each sup-norm on the torus and throws
// SupNormExceedsOne above 1 + 1e-9.
class GeneralSymbol {
public:
    explicit GeneralSymbol(std::vector<TorusPolynomial> components);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return components_.size(); }
    const std::vector<TorusPolynomial>& components() const {
        return components_;
    }

private:
    std::size_t dim_in_;
    std::vector<TorusPolynomial> components_;
};

struct GeneralIsometryReport {
    // (a): every component is a unimodular constant times a polynomial with
    // non-negative coefficients summing to 1 (tolerance 1e-12).
    bool conditions_a;
    // (b): the spectra of the powers phi^alpha are pairwise disjoint, for
    // all alpha of total degree <= degree_bound, extended by a constructive
    // search when a non-monomial component is present.
    bool conditions_b;
    std::optional<std::pair<MultiIndex, MultiIndex>> witness;
    std::uint64_t degree_bound;  // the bound the certificate is valid for
};

// The two isometry conditions for general symbols. The operator is an
// isometry iff both hold for every exponent tuple; (b) is certified up to
// degree_bound by enumeration, and when brute force finds nothing but some
// component is not a monomial, an exact kernel computation on the spectrum
// columns manufactures a candidate colliding pair (verified directly before
// it is reported).
GeneralIsometryReport isometry_check_general(const GeneralSymbol& sym,
                                             std::uint64_t degree_bound);

// True iff the symbol permutes coordinates with unimodular signs: a square
// permutation matrix. Exactly the invertible-with-isometric-inverse case.
bool automorphism_check(const MonomialSymbol& sym);

// Smallest Taylor length that provably keeps the dropped tail of every
// power phi^n (n <= n_max) below rel_tail times its norm, for the disk
// automorphism phi(z) = (z - a)/(1 - conj(a) z).
std::size_t blaschke_min_taylor_len(Complex a, std::uint64_t n_max,
                                    double rel_tail);

// 1-norms of the truncated Taylor expansions of phi^n for n = 1..n_max.
// Requires |a| < 1 and taylor_len >= blaschke_min_taylor_len(a, n_max, 1e-6);
// the dropped tail is then below 1e-6 of each norm.
std::vector<std::pair<std::uint64_t, double>> blaschke_power_norms(
    Complex a, std::uint64_t n_max, std::size_t taylor_len);

// 1-norms of p^n for n = 1..n_max, p a one-variable polynomial mapping the
// circle into the closed disk (sup-norm grid check, SupNormExceedsOne above
// 1 + 1e-9). Powers are exact: the degree only grows linearly.
std::vector<std::pair<std::uint64_t, double>> newman_boundedness_probe(
    const TorusPolynomial& p, std::uint64_t n_max);

}  // namespace wd
