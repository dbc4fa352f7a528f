#include "wd/dirichlet.hpp"

#include <cmath>
#include <string>

#include "wd/errors.hpp"

namespace wd {

namespace {

// Storing an exact zero would violate the class invariant; values that merely
// round to zero are kept. No epsilon pruning anywhere, it would break the
// algebra laws the tests rely on.
bool exactly_zero(Complex v) {
    return v.real() == 0.0 && v.imag() == 0.0;
}

DirichletSeries scale(const DirichletSeries& f, Complex factor) {
    DirichletSeries out(f.cutoff());
    for (const auto& [n, a] : f.terms()) out.set(n, a * factor);
    return out;
}

}  // namespace

DirichletSeries::DirichletSeries(Index cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw ValidationError("DirichletSeries: cutoff must be >= 1");
}

DirichletSeries DirichletSeries::unit(Index cutoff) {
    DirichletSeries f(cutoff);
    f.set(1, Complex(1.0, 0.0));
    return f;
}

void DirichletSeries::set(Index n, Complex value) {
    if (n < 1 || n > cutoff_) {
        throw ValidationError("DirichletSeries: index " + std::to_string(n) +
                              " outside [1, " + std::to_string(cutoff_) + "]");
    }
    if (exactly_zero(value)) {
        coeffs_.erase(n);
    } else {
        coeffs_[n] = value;
    }
}

void DirichletSeries::add_to(Index n, Complex value) {
    if (n < 1 || n > cutoff_) {
        throw ValidationError("DirichletSeries: index " + std::to_string(n) +
                              " outside [1, " + std::to_string(cutoff_) + "]");
    }
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        if (!exactly_zero(value)) coeffs_.emplace(n, value);
        return;
    }
    it->second += value;
    if (exactly_zero(it->second)) coeffs_.erase(it);
}

Complex DirichletSeries::coefficient(Index n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

DirichletSeries add(const DirichletSeries& f, const DirichletSeries& g) {
    const auto cutoff = std::min(f.cutoff(), g.cutoff());
    DirichletSeries out(cutoff);
    for (const auto& [n, a] : f.terms()) {
        if (n <= cutoff) out.set(n, a);
    }
    for (const auto& [n, b] : g.terms()) {
        if (n <= cutoff) out.add_to(n, b);
    }
    return out;
}

DirichletSeries mul(const DirichletSeries& f, const DirichletSeries& g,
                    DirichletSeries::Index cutoff) {
    DirichletSeries out(cutoff);
    for (const auto& [i, a] : f.terms()) {
        if (i > cutoff) break;
        for (const auto& [j, b] : g.terms()) {
            // Early exit: j only grows, so once i*j passes the cutoff every
            // later pair does too. checked_mul keeps the comparison honest
            // when i*j does not even fit in 64 bits.
            const auto ij = checked_mul(i, j);
            if (!ij || *ij > cutoff) break;
            out.add_to(*ij, a * b);
        }
    }
    return out;
}

double a_plus_norm_partial(const DirichletSeries& f) {
    NeumaierSum sum;
    for (const auto& [n, a] : f.terms()) {
        (void)n;
        sum.add(std::abs(a));
    }
    return sum.value();
}

DirichletSeries exp_neg_log(double r, const DirichletSeries& upsilon,
                            DirichletSeries::Index cutoff) {
    if (!(r >= 1.0)) throw ValidationError("exp_neg_log: requires r >= 1");
    if (!exactly_zero(upsilon.coefficient(1))) {
        throw ConstantTermPresent(
            "exp_neg_log: series has an index-1 term; split the constant "
            "part off before exponentiating");
    }

    // Restrict upsilon to the target cutoff first. Terms beyond it cannot
    // reach any retained index in a product, since every index is >= 2.
    DirichletSeries base(cutoff);
    for (const auto& [n, c] : upsilon.terms()) {
        if (n <= cutoff) base.set(n, c);
    }

    const double factor = -std::log(r);
    DirichletSeries result = DirichletSeries::unit(cutoff);
    DirichletSeries term = scale(base, Complex(factor, 0.0));
    // Support of term^k starts at 2^k, so this loop runs at most
    // log2(cutoff) + 1 times before term empties out.
    for (int k = 1; !term.empty(); ++k) {
        result = add(result, term);
        term = scale(mul(term, base, cutoff),
                     Complex(factor / (k + 1), 0.0));
    }
    return result;
}

Complex evaluate(const DirichletSeries& f, Complex s) {
    if (!(s.real() > 0.0)) throw ValidationError("evaluate: requires Re s > 0");
    NeumaierSum re;
    NeumaierSum im;
    for (const auto& [n, a] : f.terms()) {
        const Complex v =
            a * std::exp(-s * std::log(static_cast<double>(n)));
        re.add(v.real());
        im.add(v.imag());
    }
    return Complex(re.value(), im.value());
}

double sup_norm_estimate(const DirichletSeries& f, double sigma, double t_max,
                         int samples) {
    if (!(sigma > 0.0)) throw ValidationError("sup_norm_estimate: requires sigma > 0");
    if (samples < 2) throw ValidationError("sup_norm_estimate: requires samples >= 2");
    if (!(t_max >= 0.0)) throw ValidationError("sup_norm_estimate: requires t_max >= 0");
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = t_max * static_cast<double>(i) /
                         static_cast<double>(samples - 1);
        best = std::max(best, std::abs(evaluate(f, Complex(sigma, t))));
    }
    return best;
}

}  // namespace wd
