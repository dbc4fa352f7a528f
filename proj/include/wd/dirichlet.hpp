#pragma once

// Finitely supported Dirichlet series with absolutely summable coefficients.
// A series is a map n -> a_n (n >= 1) together with a cutoff N; every index
// is kept in [1, N] and coefficients that are exactly zero are never stored.
// The 1-norm of the coefficient sequence is the natural size measure here,
// and all arithmetic below is exact on indices (overflowing products are
// dropped, which is the correct behaviour: such terms lie beyond any cutoff
// we can represent).

#include <complex>
#include <cstdint>
#include <map>

#include "wd/numeric.hpp"

namespace wd {

class DirichletSeries {
public:
    using Index = std::uint64_t;

    explicit DirichletSeries(Index cutoff);

    // Series with a_1 = 1 and nothing else: the multiplicative identity.
    static DirichletSeries unit(Index cutoff);

    Index cutoff() const { return cutoff_; }

    // Replaces the coefficient at n. Storing an exact zero removes the entry.
    // Throws ValidationError if n is outside [1, cutoff].
    void set(Index n, Complex value);

    // Adds value to the coefficient at n, with the same pruning rule as set().
    void add_to(Index n, Complex value);

    Complex coefficient(Index n) const;

    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    // Ascending-index view of the support. Iteration order is part of the
    // contract: norms and evaluations sum in this order, deterministically.
    const std::map<Index, Complex>& terms() const { return coeffs_; }

private:
    Index cutoff_;
    std::map<Index, Complex> coeffs_;
};

// Pointwise sum. The result carries the smaller of the two cutoffs and terms
// beyond it are dropped.
DirichletSeries add(const DirichletSeries& f, const DirichletSeries& g);

// Dirichlet convolution c_n = sum over ij = n of a_i b_j, truncated at
// cutoff. Index products are formed with overflow-checked multiplication;
// a pair whose product overflows 64 bits is skipped, never mangled.
DirichletSeries mul(const DirichletSeries& f, const DirichletSeries& g,
                    DirichletSeries::Index cutoff);

// Partial 1-norm: sum of |a_n| in ascending index order, compensated.
double a_plus_norm_partial(const DirichletSeries& f);

// The series r^{-upsilon} = sum_k (-log r)^k upsilon^k / k!, truncated at
// cutoff. Requires r >= 1 and upsilon without a constant term (no index-1
// coefficient); throws ConstantTermPresent otherwise. Because upsilon is
// then supported on indices >= 2, upsilon^k vanishes under the cutoff once
// 2^k exceeds it, so the expansion is finite.
DirichletSeries exp_neg_log(double r, const DirichletSeries& upsilon,
                            DirichletSeries::Index cutoff);

// Pointwise value sum a_n n^{-s}. Requires Re s > 0.
Complex evaluate(const DirichletSeries& f, Complex s);

// Max of |f(sigma + it)| over a uniform grid of `samples` points covering
// [0, t_max]. Requires samples >= 2. A grid maximum only ever underestimates
// the true sup, which is the safe direction for the acceptance checks that
// compare against the 1-norm from above.
double sup_norm_estimate(const DirichletSeries& f, double sigma, double t_max,
                         int samples);

}  // namespace wd
