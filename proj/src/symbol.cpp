#include "wd/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wd/bohr.hpp"
#include "wd/errors.hpp"
#include "wd/exact.hpp"

namespace wd {

namespace {

constexpr double kEqualityTol = 1e-12;

bool exactly_zero(Complex v) {
    return v.real() == 0.0 && v.imag() == 0.0;
}

}  // namespace

CompositionSymbol::CompositionSymbol(std::uint32_t c0,
                                     std::map<Index, Complex> coeffs)
    : c0_(c0), coeffs_(std::move(coeffs)) {
    if (coeffs_.count(0) != 0) {
        throw ValidationError("CompositionSymbol: coefficient index 0 is invalid");
    }
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        it = exactly_zero(it->second) ? coeffs_.erase(it) : std::next(it);
    }
    bool has_tail = false;
    for (const auto& [n, c] : coeffs_) {
        (void)c;
        if (n >= 2) {
            has_tail = true;
            break;
        }
    }
    if (c0_ == 0 && !has_tail) {
        throw ConstantSymbol(
            "CompositionSymbol: c0 = 0 with an empty tail is a constant map");
    }
}

Complex CompositionSymbol::c1() const {
    auto it = coeffs_.find(1);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

std::map<CompositionSymbol::Index, Complex> CompositionSymbol::tail() const {
    std::map<Index, Complex> t(coeffs_);
    t.erase(1);
    return t;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Compact: return "Compact";
        case Verdict::BoundedContraction: return "BoundedContraction";
        case Verdict::Bounded: return "Bounded";
        case Verdict::Unbounded: return "Unbounded";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

DirichletSeries image_basis(const CompositionSymbol& phi, std::uint64_t n,
                            std::uint64_t cutoff) {
    if (n < 1) throw ValidationError("image_basis: requires n >= 1");
    if (n == 1) return DirichletSeries::unit(cutoff);

    const auto tail = phi.tail();
    const auto shift = checked_pow(n, phi.c0());
    if (!shift) {
        throw IndexOverflow("image_basis: n^c0 exceeds the 64-bit index range");
    }
    if (!tail.empty()) {
        // The smallest image index after the exponential is n^c0 times the
        // smallest tail index; it has to be representable even if it ends
        // up beyond the cutoff.
        if (!checked_mul(*shift, tail.begin()->first)) {
            throw IndexOverflow(
                "image_basis: n^c0 times the smallest tail index exceeds the "
                "64-bit index range");
        }
    }

    DirichletSeries out(cutoff);
    if (*shift > cutoff) return out;  // everything lands beyond the cutoff

    const std::uint64_t inner_cutoff = cutoff / *shift;
    DirichletSeries upsilon(inner_cutoff > 0 ? inner_cutoff : 1);
    for (const auto& [m, c] : tail) {
        if (m <= upsilon.cutoff()) upsilon.set(m, c);
    }
    const DirichletSeries expanded =
        exp_neg_log(static_cast<double>(n), upsilon, upsilon.cutoff());

    // n^{-c1} in polar form: the magnitude is exp(-Re c1 * log n), so a
    // purely imaginary c1 gives exactly unit-modulus coefficients.
    const double log_n = std::log(static_cast<double>(n));
    const Complex scalar =
        std::polar(std::exp(-phi.c1().real() * log_n), -phi.c1().imag() * log_n);

    for (const auto& [m, a] : expanded.terms()) {
        out.set(*shift * m, scalar * a);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, double>> norm_sequence(
    const CompositionSymbol& phi, std::uint64_t n_max, std::uint64_t cutoff) {
    if (n_max < 2) throw ValidationError("norm_sequence: requires n_max >= 2");
    std::vector<std::pair<std::uint64_t, double>> out(n_max);
    parallel_for(n_max, [&](std::size_t i) {
        const std::uint64_t n = i + 1;
        out[i] = {n, a_plus_norm_partial(image_basis(phi, n, cutoff))};
    });
    return out;
}

OperatorDiagnosis sufficient_condition(const CompositionSymbol& phi) {
    NeumaierSum tail_sum;
    for (const auto& [n, c] : phi.tail()) {
        (void)n;
        tail_sum.add(std::abs(c));
    }
    const double tail_norm = tail_sum.value();
    const double margin = phi.c1().real() - tail_norm;

    OperatorDiagnosis d;
    if (margin > kEqualityTol) {
        d.verdict = Verdict::Compact;
        d.evidence =
            "Re c1 exceeds the tail coefficient 1-norm by " +
            std::to_string(margin) +
            "; image norms decay like a negative power of n, so the "
            "composition operator is compact";
    } else if (margin >= -kEqualityTol) {
        d.verdict = Verdict::BoundedContraction;
        d.evidence =
            "Re c1 equals the tail coefficient 1-norm (within 1e-12); every "
            "image norm is at most 1, so the composition operator is a "
            "contraction";
    } else {
        d.verdict = Verdict::Inconclusive;
        d.evidence =
            "Re c1 falls short of the tail coefficient 1-norm; the "
            "contraction rule does not apply and decides nothing";
    }
    return d;
}

bool multiplicative_independence(const std::vector<std::uint64_t>& qs) {
    if (qs.empty()) return true;
    IntMatrix rows;
    std::size_t width = 0;
    rows.reserve(qs.size());
    std::vector<ExponentVector> vectors;
    vectors.reserve(qs.size());
    for (std::uint64_t q : qs) {
        if (q < 2) {
            throw ValidationError("multiplicative_independence: requires q >= 2");
        }
        vectors.push_back(factorize(q));
        width = std::max(width, vectors.back().positions());
    }
    for (const auto& v : vectors) {
        std::vector<BigInt> row(width, 0);
        for (std::size_t j = 0; j < v.exps().size(); ++j) {
            row[j] = v.exps()[j];
        }
        rows.push_back(std::move(row));
    }
    return int_rank(rows) == qs.size();
}

double kronecker_inf(const CompositionSymbol& phi, double sigma) {
    if (!(sigma > 0.0)) throw ValidationError("kronecker_inf: requires sigma > 0");
    const auto tail = phi.tail();
    std::vector<std::uint64_t> qs;
    qs.reserve(tail.size());
    for (const auto& [q, d] : tail) {
        (void)d;
        qs.push_back(q);
    }
    if (!multiplicative_independence(qs)) {
        throw NotIndependent(
            "kronecker_inf: tail indices are multiplicatively dependent; the "
            "phases cannot be aligned independently");
    }
    // With independent tail frequencies, the phases of the q_j^{-it} can be
    // steered to any target simultaneously, so each tail term contributes
    // its full negative modulus to the infimum.
    NeumaierSum drop;
    for (const auto& [q, d] : tail) {
        drop.add(std::abs(d) * std::pow(static_cast<double>(q), -sigma));
    }
    return phi.c0() * sigma + phi.c1().real() - drop.value();
}

bool dirichlet_isometry_check(const CompositionSymbol& phi) {
    if (phi.c0() < 1) return false;
    if (!phi.tail().empty()) return false;
    return std::abs(phi.c1().real()) <= kEqualityTol;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
spectra_disjointness_probe(const CompositionSymbol& phi, std::uint64_t n_max,
                           std::uint64_t cutoff) {
    if (n_max < 2) {
        throw ValidationError("spectra_disjointness_probe: requires n_max >= 2");
    }
    std::vector<std::vector<std::uint64_t>> supports(n_max);
    parallel_for(n_max, [&](std::size_t i) {
        const auto image = image_basis(phi, i + 1, cutoff);
        supports[i].reserve(image.support_size());
        for (const auto& [idx, c] : image.terms()) {
            (void)c;
            supports[i].push_back(idx);
        }
    });
    for (std::uint64_t m = 1; m < n_max; ++m) {
        for (std::uint64_t n = m + 1; n <= n_max; ++n) {
            // Supports are ascending; walk them like a merge.
            const auto& a = supports[m - 1];
            const auto& b = supports[n - 1];
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return std::make_pair(m, n);
                if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace wd
