#pragma once

// The correspondence between Dirichlet series and power series in
// prime-exponent variables: n = p_1^{a_1}...p_r^{a_r} turns n^{-s} into the
// monomial z_1^{a_1}...z_r^{a_r}. The map is a pure reindexing, so it is an
// isometry for the coefficient 1-norm; we keep power-series keys sorted by
// their integer preimage so that both sides iterate, sum, and serialize in
// exactly the same order.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wd/dirichlet.hpp"
#include "wd/numeric.hpp"

namespace wd {

// Exponent vector (a_1, ..., a_r) of a positive integer, trailing zeros
// trimmed: the last stored entry is nonzero and the empty vector is 1.
// Canonical per integer, so equality of vectors is equality of integers.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::uint32_t> exps);

    const std::vector<std::uint32_t>& exps() const { return exps_; }

    // Number of prime positions used (index of the last nonzero exponent).
    std::size_t positions() const { return exps_.size(); }

    // p_1^{a_1}...p_r^{a_r}, or nullopt if the product overflows 64 bits.
    std::optional<std::uint64_t> integer_image() const;

    bool operator==(const ExponentVector&) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

// Strict ordering of exponent vectors by integer image. Images are compared
// exactly up to 2^128; past that (unreachable through factorize, possible
// only for handcrafted keys) the order falls back to comparing log-images
// and then lexicographic exponents, which is still deterministic.
struct ImageOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Ascending list of the first r primes.
class PrimeTable {
public:
    static PrimeTable first(std::size_t count);

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

private:
    PrimeTable() = default;
    std::vector<std::uint64_t> primes_;
};

// The j-th prime, 1-indexed: nth_prime(1) = 2. Thread-safe (each thread
// keeps its own grown-on-demand cache; the sequence is deterministic).
std::uint64_t nth_prime(std::size_t j);

// Power series in the variables z_1, z_2, ..., sparse over exponent vectors.
// prime_budget caps how many variable positions keys may use.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t prime_budget);

    std::size_t prime_budget() const { return prime_budget_; }

    // Replace / accumulate with the same exact-zero pruning rules as
    // DirichletSeries. Throws ValidationError if alpha uses a position
    // beyond prime_budget.
    void set(const ExponentVector& alpha, Complex value);
    void add_to(const ExponentVector& alpha, Complex value);

    Complex coefficient(const ExponentVector& alpha) const;

    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    // Keys ascend by integer image, mirroring DirichletSeries iteration.
    const std::map<ExponentVector, Complex, ImageOrder>& terms() const {
        return coeffs_;
    }

private:
    std::size_t prime_budget_;
    std::map<ExponentVector, Complex, ImageOrder> coeffs_;
};

// Coefficient 1-norm, compensated, in key order. Because keys ascend by
// integer image, one_norm(lift(f)) adds the same doubles in the same order
// as a_plus_norm_partial(f) and the two results are bitwise equal.
double one_norm(const PowerSeries& F);

// Canonical exponent vector of n >= 1 by trial division.
ExponentVector factorize(std::uint64_t n);

// Reindex a Dirichlet series onto exponent-vector keys. The prime budget of
// the result is the largest position used by its support.
PowerSeries lift(const DirichletSeries& f);

// Exact inverse of lift. The result's cutoff is the largest integer image
// (1 for the empty series). Throws IndexOverflow if a key's image does not
// fit in 64 bits.
DirichletSeries inverse_lift(const PowerSeries& F);

// Evaluates F at the point (p_j^{-s})_j, the image of the half-plane point
// s under the variable substitution. Requires Re s > 0 and prime_budget <=
// table.size(). For F = lift(f) this reproduces evaluate(f, s) up to
// rounding.
Complex eval_at_half_plane_point(const PowerSeries& F, Complex s,
                                 const PrimeTable& table);

}  // namespace wd
