#pragma once

// Exact integer and rational linear algebra for the handful of places where
// a floating answer is not acceptable: determinants deciding injectivity,
// ranks deciding multiplicative independence, and kernel vectors feeding the
// collision construction for spectra checks. Matrices here are tiny (tens of
// rows at most), so arbitrary precision costs nothing that matters.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wd {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Determinant by Bareiss fraction-free elimination (all divisions exact).
// Requires a square matrix; rows must all have the same length.
BigInt int_determinant(IntMatrix m);

// Rank over the rationals.
std::size_t int_rank(const IntMatrix& m);

// A nonzero integer solution x of m x = 0 (columns are the unknowns), with
// denominators cleared, or nullopt when the kernel is trivial. The choice is
// deterministic: the first free column gets value 1.
std::optional<std::vector<BigInt>> int_kernel_vector(const IntMatrix& m);

}  // namespace wd
