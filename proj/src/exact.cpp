#include "wd/exact.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "wd/errors.hpp"

namespace wd {

namespace {

using BigRat = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<BigRat>>;

void check_rectangular(const IntMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.front().size()) {
            throw ValidationError("matrix rows have unequal lengths");
        }
    }
}

// Row echelon form over the rationals. Returns the pivot column of each
// eliminated row, in order; `m` is modified in place.
std::vector<std::size_t> echelon(RatMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            const BigRat factor = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] -= factor * m[row][j];
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

BigInt int_determinant(IntMatrix m) {
    if (m.empty()) return 1;  // empty product convention
    check_rectangular(m);
    const std::size_t n = m.size();
    if (m.front().size() != n) {
        throw ValidationError("int_determinant: matrix is not square");
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss update: the division by the previous pivot is
                // always exact in integers.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t int_rank(const IntMatrix& m) {
    if (m.empty()) return 0;
    check_rectangular(m);
    RatMatrix work(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        work[i].assign(m[i].begin(), m[i].end());
    }
    return echelon(work).size();
}

std::optional<std::vector<BigInt>> int_kernel_vector(const IntMatrix& m) {
    if (m.empty()) return std::nullopt;
    check_rectangular(m);
    const std::size_t cols = m.front().size();
    RatMatrix work(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        work[i].assign(m[i].begin(), m[i].end());
    }
    const std::vector<std::size_t> pivot_cols = echelon(work);
    if (pivot_cols.size() == cols) return std::nullopt;

    // First column that carries no pivot becomes the free variable.
    std::size_t free_col = 0;
    {
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t c : pivot_cols) is_pivot[c] = true;
        while (is_pivot[free_col]) ++free_col;
    }

    std::vector<BigRat> x(cols, 0);
    x[free_col] = 1;
    // Back-substitute through the pivot rows above the free column.
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
        const std::size_t pc = pivot_cols[r];
        if (pc > free_col) continue;
        BigRat rhs = 0;
        for (std::size_t j = pc + 1; j < cols; ++j) {
            rhs -= work[r][j] * x[j];
        }
        x[pc] = rhs / work[r][pc];
    }

    BigInt scale = 1;
    for (const auto& v : x) {
        const BigInt d = boost::multiprecision::denominator(v);
        scale = boost::multiprecision::lcm(scale, d);
    }
    std::vector<BigInt> out(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        out[j] = boost::multiprecision::numerator(x[j]) *
                 (scale / boost::multiprecision::denominator(x[j]));
    }
    return out;
}

}  // namespace wd
