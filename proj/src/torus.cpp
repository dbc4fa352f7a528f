#include "wd/torus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "wd/errors.hpp"

namespace wd {

namespace {

constexpr std::uint64_t kComponentCap = 1ull << 31;

bool exactly_zero(Complex v) {
    return v.real() == 0.0 && v.imag() == 0.0;
}

void check_key(const MultiIndex& alpha, std::size_t dim) {
    if (alpha.size() != dim) {
        throw DimensionMismatch("torus key has dimension " +
                                std::to_string(alpha.size()) + ", expected " +
                                std::to_string(dim));
    }
    for (std::uint32_t c : alpha) {
        if (c >= kComponentCap) {
            throw ValidationError("torus exponent component exceeds 2^31 - 1");
        }
    }
}

Complex tpoly_eval(const TorusPolynomial& f, const std::vector<Complex>& z) {
    Complex sum(0.0, 0.0);
    for (const auto& [alpha, a] : f.terms()) {
        Complex monomial = a;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] != 0) {
                monomial *= std::pow(z[j], static_cast<double>(alpha[j]));
            }
        }
        sum += monomial;
    }
    return sum;
}

// Grid (or, beyond three variables, fixed-seed sampling) estimate of the
// sup of |f| on the torus. A lower bound of the true sup, which is the safe
// direction for the polydisk admission check.
double sup_norm_circle_estimate(const TorusPolynomial& f) {
    const std::size_t k = f.dim();
    const double two_pi = 8.0 * std::atan(1.0);
    double best = 0.0;
    std::vector<Complex> z(k);
    if (k <= 3) {
        const std::size_t per_axis = k == 1 ? 8192 : (k == 2 ? 128 : 24);
        std::vector<std::size_t> idx(k, 0);
        for (;;) {
            for (std::size_t j = 0; j < k; ++j) {
                z[j] = std::polar(1.0, two_pi * static_cast<double>(idx[j]) /
                                           static_cast<double>(per_axis));
            }
            best = std::max(best, std::abs(tpoly_eval(f, z)));
            std::size_t j = 0;
            while (j < k && ++idx[j] == per_axis) idx[j++] = 0;
            if (j == k) break;
        }
        return best;
    }
    std::mt19937 rng(0x5eed);
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    for (int i = 0; i < 65536; ++i) {
        for (std::size_t j = 0; j < k; ++j) z[j] = std::polar(1.0, angle(rng));
        best = std::max(best, std::abs(tpoly_eval(f, z)));
    }
    return best;
}

// Integer power of a unimodular constant by binary exponentiation; exact
// for the representable units (1, -1, i, -i) and stable in general.
Complex sign_power(Complex base, std::uint64_t e) {
    Complex result(1.0, 0.0);
    while (e > 0) {
        if (e & 1ull) result *= base;
        e >>= 1ull;
        if (e > 0) base *= base;
    }
    return result;
}

// Visits every exponent tuple in N^m of total degree <= bound, ordered by
// degree and then lexicographically. Stops early when fn returns false.
void enumerate_graded(std::size_t m, std::uint64_t bound,
                      const std::function<bool(const MultiIndex&)>& fn) {
    MultiIndex scratch(m, 0);
    bool stop = false;
    const std::function<void(std::size_t, std::uint64_t)> fill =
        [&](std::size_t pos, std::uint64_t remaining) {
            if (stop) return;
            if (pos + 1 == m) {
                scratch[pos] = static_cast<std::uint32_t>(remaining);
                if (!fn(scratch)) stop = true;
                return;
            }
            for (std::uint64_t v = 0; v <= remaining && !stop; ++v) {
                scratch[pos] = static_cast<std::uint32_t>(v);
                fill(pos + 1, remaining - v);
            }
        };
    for (std::uint64_t d = 0; d <= bound && !stop; ++d) fill(0, d);
}

TorusPolynomial tpoly_pow(const TorusPolynomial& base, std::uint64_t e) {
    TorusPolynomial result(base.dim());
    result.set(MultiIndex(base.dim(), 0), Complex(1.0, 0.0));
    TorusPolynomial square = base;
    for (;;) {
        if (e & 1ull) result = tpoly_mul(result, square, kNoDegreeCap);
        e >>= 1ull;
        if (e == 0) break;
        square = tpoly_mul(square, square, kNoDegreeCap);
    }
    return result;
}

}  // namespace

std::uint64_t total_degree(const MultiIndex& alpha) {
    std::uint64_t sum = 0;
    for (std::uint32_t c : alpha) sum += c;
    return sum;
}

TorusPolynomial::TorusPolynomial(std::size_t dim) : dim_(dim) {
    if (dim < 1) throw ValidationError("TorusPolynomial: requires dim >= 1");
}

void TorusPolynomial::set(const MultiIndex& alpha, Complex value) {
    check_key(alpha, dim_);
    if (exactly_zero(value)) {
        coeffs_.erase(alpha);
    } else {
        coeffs_[alpha] = value;
    }
}

void TorusPolynomial::add_to(const MultiIndex& alpha, Complex value) {
    check_key(alpha, dim_);
    auto it = coeffs_.find(alpha);
    if (it == coeffs_.end()) {
        if (!exactly_zero(value)) coeffs_.emplace(alpha, value);
        return;
    }
    it->second += value;
    if (exactly_zero(it->second)) coeffs_.erase(it);
}

Complex TorusPolynomial::coefficient(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

double one_norm(const TorusPolynomial& f) {
    std::vector<double> moduli;
    moduli.reserve(f.support_size());
    for (const auto& [alpha, a] : f.terms()) {
        (void)alpha;
        moduli.push_back(std::abs(a));
    }
    // Smallest-first makes the sum a function of the coefficient multiset
    // alone, so reindexing a polynomial cannot move its norm by even an ulp.
    std::sort(moduli.begin(), moduli.end());
    NeumaierSum sum;
    for (double m : moduli) sum.add(m);
    return sum.value();
}

std::uint64_t max_total_degree(const TorusPolynomial& f) {
    std::uint64_t best = 0;
    for (const auto& [alpha, a] : f.terms()) {
        (void)a;
        best = std::max(best, total_degree(alpha));
    }
    return best;
}

TorusPolynomial tpoly_mul(const TorusPolynomial& f, const TorusPolynomial& g,
                          std::uint64_t degree_cap) {
    if (f.dim() != g.dim()) {
        throw DimensionMismatch("tpoly_mul: dimensions " +
                                std::to_string(f.dim()) + " and " +
                                std::to_string(g.dim()) + " differ");
    }
    TorusPolynomial out(f.dim());
    MultiIndex key(f.dim());
    for (const auto& [a, fa] : f.terms()) {
        for (const auto& [b, gb] : g.terms()) {
            std::uint64_t degree = 0;
            for (std::size_t j = 0; j < key.size(); ++j) {
                const std::uint64_t c = static_cast<std::uint64_t>(a[j]) + b[j];
                degree += c;
                key[j] = static_cast<std::uint32_t>(c);
            }
            if (degree > degree_cap) continue;
            for (std::size_t j = 0; j < key.size(); ++j) {
                if (static_cast<std::uint64_t>(a[j]) + b[j] >= kComponentCap) {
                    throw IndexOverflow(
                        "tpoly_mul: exponent component exceeds 2^31 - 1");
                }
            }
            out.add_to(key, fa * gb);
        }
    }
    return out;
}

MonomialSymbol::MonomialSymbol(std::vector<std::vector<std::uint32_t>> matrix_,
                               std::vector<Complex> signs_)
    : dim_in(0),
      dim_out(matrix_.size()),
      matrix(std::move(matrix_)),
      signs(std::move(signs_)) {
    if (matrix.empty()) {
        throw ValidationError("MonomialSymbol: requires at least one row");
    }
    dim_in = matrix.front().size();
    if (dim_in == 0) {
        throw ValidationError("MonomialSymbol: rows must not be empty");
    }
    for (const auto& row : matrix) {
        if (row.size() != dim_in) {
            throw DimensionMismatch("MonomialSymbol: rows have unequal lengths");
        }
        for (std::uint32_t e : row) {
            if (e >= kComponentCap) {
                throw ValidationError(
                    "MonomialSymbol: matrix entry exceeds 2^31 - 1");
            }
        }
    }
    if (signs.size() != dim_out) {
        throw DimensionMismatch("MonomialSymbol: expected " +
                                std::to_string(dim_out) + " signs, got " +
                                std::to_string(signs.size()));
    }
    for (Complex s : signs) {
        if (std::abs(std::abs(s) - 1.0) > 1e-12) {
            throw ValidationError(
                "MonomialSymbol: signs must be unimodular within 1e-12");
        }
    }
}

MultiIndex astar_apply(const MonomialSymbol& sym, const MultiIndex& alpha) {
    if (alpha.size() != sym.dim_out) {
        throw DimensionMismatch("astar_apply: exponent tuple has dimension " +
                                std::to_string(alpha.size()) + ", expected " +
                                std::to_string(sym.dim_out));
    }
    MultiIndex gamma(sym.dim_in);
    for (std::size_t j = 0; j < sym.dim_in; ++j) {
        unsigned __int128 acc = 0;
        for (std::size_t i = 0; i < sym.dim_out; ++i) {
            acc += static_cast<unsigned __int128>(sym.matrix[i][j]) * alpha[i];
        }
        if (acc >= kComponentCap) {
            throw IndexOverflow(
                "astar_apply: image component exceeds 2^31 - 1");
        }
        gamma[j] = static_cast<std::uint32_t>(acc);
    }
    return gamma;
}

TorusPolynomial monomial_compose(const MonomialSymbol& sym,
                                 const TorusPolynomial& f) {
    if (f.dim() != sym.dim_out) {
        throw DimensionMismatch("monomial_compose: polynomial has dimension " +
                                std::to_string(f.dim()) + ", symbol expects " +
                                std::to_string(sym.dim_out));
    }
    TorusPolynomial out(sym.dim_in);
    for (const auto& [alpha, a] : f.terms()) {
        Complex eps_alpha(1.0, 0.0);
        for (std::size_t i = 0; i < sym.dim_out; ++i) {
            if (alpha[i] != 0) {
                eps_alpha *= sign_power(sym.signs[i], alpha[i]);
            }
        }
        out.add_to(astar_apply(sym, alpha), eps_alpha * a);
    }
    return out;
}

MonomialIsometryReport isometry_check_monomial(const MonomialSymbol& sym,
                                               std::uint64_t search_degree) {
    MonomialIsometryReport report;
    report.is_isometry = false;

    std::map<MultiIndex, MultiIndex> image_owner;
    enumerate_graded(sym.dim_out, search_degree, [&](const MultiIndex& alpha) {
        auto [it, inserted] = image_owner.try_emplace(astar_apply(sym, alpha),
                                                      alpha);
        if (!inserted) {
            report.witness = std::make_pair(alpha, it->second);
            return false;
        }
        return true;
    });

    if (sym.dim_in == sym.dim_out) {
        IntMatrix m(sym.dim_out, std::vector<BigInt>(sym.dim_in));
        for (std::size_t i = 0; i < sym.dim_out; ++i) {
            for (std::size_t j = 0; j < sym.dim_in; ++j) {
                m[i][j] = sym.matrix[i][j];
            }
        }
        report.determinant = int_determinant(std::move(m));
        report.is_isometry = *report.determinant != 0;
    } else {
        report.is_isometry = !report.witness.has_value();
    }
    return report;
}

GeneralSymbol::GeneralSymbol(std::vector<TorusPolynomial> components)
    : dim_in_(0), components_(std::move(components)) {
    if (components_.empty()) {
        throw ValidationError("GeneralSymbol: requires at least one component");
    }
    dim_in_ = components_.front().dim();
    for (const auto& c : components_) {
        if (c.dim() != dim_in_) {
            throw DimensionMismatch(
                "GeneralSymbol: components have unequal dimensions");
        }
        // Admission into the closed polydisk. The coefficient 1-norm bounds
        // the sup, so most symbols pass without any sampling.
        if (one_norm(c) <= 1.0 + 1e-9) continue;
        const double sup = sup_norm_circle_estimate(c);
        if (sup > 1.0 + 1e-9) {
            throw SupNormExceedsOne(
                "GeneralSymbol: component sup-norm estimate " +
                std::to_string(sup) + " exceeds 1");
        }
    }
}

namespace {

// Condition (a) of the isometry test: the component is a unimodular
// constant times a polynomial with non-negative coefficients summing to 1.
bool component_condition_a(const TorusPolynomial& c) {
    if (c.empty()) return false;
    const Complex lead = c.terms().begin()->second;
    const Complex eps = lead / std::abs(lead);
    NeumaierSum sum;
    for (const auto& [alpha, a] : c.terms()) {
        (void)alpha;
        const Complex rotated = a / eps;
        if (std::abs(rotated.imag()) > 1e-12) return false;
        if (rotated.real() < -1e-12) return false;
        sum.add(rotated.real());
    }
    return std::abs(sum.value() - 1.0) <= 1e-12;
}

// Constructive collision search used when enumeration is silent: pick a
// non-monomial component, two points s, t of its spectrum and one point of
// each other spectrum, and look for an exact integer relation
//
//   l (s - t) + m_p t + sum_i m_i w_i = 0.
//
// Writing each integer as a difference of non-negative parts (the pivot
// entries shifted together until the binomial range covers l) yields
// exponent tuples alpha != alpha' whose powers share a spectrum point; the
// candidate is verified directly before being reported.
std::optional<std::pair<MultiIndex, MultiIndex>> collision_from_kernel(
    const GeneralSymbol& sym) {
    const std::size_t m = sym.dim_out();
    const std::size_t k = sym.dim_in();
    for (const auto& c : sym.components()) {
        if (c.empty()) return std::nullopt;  // degenerate symbol, no search
    }
    for (std::size_t pivot = 0; pivot < m; ++pivot) {
        const auto& terms = sym.components()[pivot].terms();
        if (terms.size() < 2) continue;
        std::vector<MultiIndex> spectrum;
        spectrum.reserve(terms.size());
        for (const auto& [alpha, a] : terms) {
            (void)a;
            spectrum.push_back(alpha);
        }
        for (std::size_t si = 0; si < spectrum.size(); ++si) {
            for (std::size_t ti = si + 1; ti < spectrum.size(); ++ti) {
                const MultiIndex& s = spectrum[si];
                const MultiIndex& t = spectrum[ti];
                // Columns: s - t, then the base point of every component
                // (the pivot's own base point is t).
                IntMatrix cols(k, std::vector<BigInt>(m + 1));
                for (std::size_t row = 0; row < k; ++row) {
                    cols[row][0] = BigInt(s[row]) - BigInt(t[row]);
                    for (std::size_t i = 0; i < m; ++i) {
                        const MultiIndex& w =
                            i == pivot ? t
                                       : sym.components()[i].terms().begin()->first;
                        cols[row][i + 1] = w[row];
                    }
                }
                const auto kernel = int_kernel_vector(cols);
                if (!kernel) continue;

                const BigInt& l = (*kernel)[0];
                const BigInt rho = l > 0 ? l : BigInt(0);
                const BigInt rho_prime = l < 0 ? BigInt(-l) : BigInt(0);
                std::vector<BigInt> a_parts(m), b_parts(m);
                for (std::size_t i = 0; i < m; ++i) {
                    const BigInt& mu = (*kernel)[i + 1];
                    a_parts[i] = mu > 0 ? mu : BigInt(0);
                    b_parts[i] = mu < 0 ? BigInt(-mu) : BigInt(0);
                }
                // The binomial index range [0, a_pivot] has to contain rho
                // (and likewise for the primed pair); shifting both pivot
                // entries by the same amount keeps the relation intact.
                BigInt shift = 0;
                if (rho - a_parts[pivot] > shift) shift = rho - a_parts[pivot];
                if (rho_prime - b_parts[pivot] > shift) {
                    shift = rho_prime - b_parts[pivot];
                }
                a_parts[pivot] += shift;
                b_parts[pivot] += shift;

                bool representable = true;
                MultiIndex alpha(m), alpha_prime(m);
                for (std::size_t i = 0; i < m; ++i) {
                    if (a_parts[i] >= kComponentCap ||
                        b_parts[i] >= kComponentCap) {
                        representable = false;
                        break;
                    }
                    alpha[i] = static_cast<std::uint32_t>(a_parts[i]);
                    alpha_prime[i] = static_cast<std::uint32_t>(b_parts[i]);
                }
                if (!representable || alpha == alpha_prime) continue;
                if (total_degree(alpha) > 10000 ||
                    total_degree(alpha_prime) > 10000) {
                    continue;  // beyond any sane verification budget
                }

                // Verify: cancellations could in principle erase the
                // predicted common point, so trust only computed spectra.
                TorusPolynomial pa(k), pb(k);
                pa.set(MultiIndex(k, 0), Complex(1.0, 0.0));
                pb.set(MultiIndex(k, 0), Complex(1.0, 0.0));
                for (std::size_t i = 0; i < m; ++i) {
                    if (alpha[i] != 0) {
                        pa = tpoly_mul(pa,
                                       tpoly_pow(sym.components()[i], alpha[i]),
                                       kNoDegreeCap);
                    }
                    if (alpha_prime[i] != 0) {
                        pb = tpoly_mul(
                            pb, tpoly_pow(sym.components()[i], alpha_prime[i]),
                            kNoDegreeCap);
                    }
                }
                for (const auto& [key, value] : pa.terms()) {
                    (void)value;
                    if (pb.terms().count(key) != 0) {
                        return std::make_pair(alpha, alpha_prime);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

GeneralIsometryReport isometry_check_general(const GeneralSymbol& sym,
                                             std::uint64_t degree_bound) {
    if (degree_bound < 1) {
        throw ValidationError("isometry_check_general: requires degree_bound >= 1");
    }
    GeneralIsometryReport report;
    report.degree_bound = degree_bound;
    report.conditions_a = true;
    for (const auto& c : sym.components()) {
        if (!component_condition_a(c)) {
            report.conditions_a = false;
            break;
        }
    }

    report.conditions_b = true;
    std::map<MultiIndex, TorusPolynomial> powers;
    std::map<MultiIndex, MultiIndex> point_owner;
    enumerate_graded(sym.dim_out(), degree_bound, [&](const MultiIndex& alpha) {
        TorusPolynomial power(sym.dim_in());
        if (total_degree(alpha) == 0) {
            power.set(MultiIndex(sym.dim_in(), 0), Complex(1.0, 0.0));
        } else {
            std::size_t i = 0;
            while (alpha[i] == 0) ++i;
            MultiIndex predecessor = alpha;
            --predecessor[i];
            power = tpoly_mul(powers.at(predecessor), sym.components()[i],
                              kNoDegreeCap);
        }
        for (const auto& [point, value] : power.terms()) {
            (void)value;
            auto [it, inserted] = point_owner.try_emplace(point, alpha);
            if (!inserted && it->second != alpha) {
                report.conditions_b = false;
                report.witness = std::make_pair(alpha, it->second);
                return false;
            }
        }
        powers.emplace(alpha, std::move(power));
        return true;
    });

    if (report.conditions_b) {
        bool has_non_monomial = false;
        for (const auto& c : sym.components()) {
            if (c.support_size() >= 2) {
                has_non_monomial = true;
                break;
            }
        }
        if (has_non_monomial) {
            if (auto pair = collision_from_kernel(sym)) {
                report.conditions_b = false;
                report.witness = pair;
            }
        }
    }
    return report;
}

bool automorphism_check(const MonomialSymbol& sym) {
    if (sym.dim_in != sym.dim_out) {
        throw ValidationError("automorphism_check: requires a square symbol");
    }
    std::vector<bool> column_used(sym.dim_in, false);
    for (const auto& row : sym.matrix) {
        std::size_t ones = 0;
        std::size_t where = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            if (row[j] != 1) return false;
            ++ones;
            where = j;
        }
        if (ones != 1 || column_used[where]) return false;
        column_used[where] = true;
    }
    return true;  // signs are unimodular by construction
}

namespace {

// Majorant of the disk automorphism's Taylor coefficients at radius rho:
// |c_0| = |a| and |c_j| <= (1 - |a|^2) |a|^{j-1}, so on |w| = rho the
// coefficient series is dominated by g(rho) below, and Cauchy gives
// |[w^j] phi^n| <= g(rho)^n / rho^j.
double blaschke_majorant(double abs_a, double rho) {
    return abs_a + (1.0 - abs_a * abs_a) * rho / (1.0 - abs_a * rho);
}

}  // namespace

std::size_t blaschke_min_taylor_len(Complex a, std::uint64_t n_max,
                                    double rel_tail) {
    const double abs_a = std::abs(a);
    if (!(abs_a < 1.0)) {
        throw ValidationError("blaschke_min_taylor_len: requires |a| < 1");
    }
    if (n_max < 1 || !(rel_tail > 0.0)) {
        throw ValidationError(
            "blaschke_min_taylor_len: requires n_max >= 1 and rel_tail > 0");
    }
    // Tail over indices >= L: sum_{j>=L} g(rho)^n rho^{-j}
    //   = g(rho)^n rho^{-L} * rho/(rho - 1),
    // minimized over a grid of radii 1 < rho < 1/|a|. The norms themselves
    // are at least the sup-norm 1, so comparing against rel_tail directly
    // is sound.
    const double rho_cap = abs_a > 0.0 ? 0.9999 / abs_a : 1e9;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 512; ++i) {
        const double rho =
            std::exp(std::log(1.0 + 1e-6) +
                     (std::log(rho_cap) - std::log(1.0 + 1e-6)) * i / 512.0);
        if (rho <= 1.0) continue;
        const double g = blaschke_majorant(abs_a, rho);
        const double len =
            (static_cast<double>(n_max) * std::log(g) +
             std::log(rho / (rho - 1.0)) - std::log(rel_tail)) /
            std::log(rho);
        best = std::min(best, std::max(len, 0.0));
    }
    return static_cast<std::size_t>(std::ceil(best)) + 1;
}

std::vector<std::pair<std::uint64_t, double>> blaschke_power_norms(
    Complex a, std::uint64_t n_max, std::size_t taylor_len) {
    if (!(std::abs(a) < 1.0)) {
        throw ValidationError("blaschke_power_norms: requires |a| < 1");
    }
    if (n_max < 1) {
        throw ValidationError("blaschke_power_norms: requires n_max >= 1");
    }
    const std::size_t needed = blaschke_min_taylor_len(a, n_max, 1e-6);
    if (taylor_len < needed) {
        throw ValidationError(
            "blaschke_power_norms: taylor_len " + std::to_string(taylor_len) +
            " cannot certify the 1e-6 tail for n_max " +
            std::to_string(n_max) + "; need at least " +
            std::to_string(needed));
    }

    // phi(w) = (w - a)/(1 - conj(a) w) = -a + (1-|a|^2) sum conj(a)^{j-1} w^j.
    std::vector<Complex> phi;
    phi.reserve(taylor_len);
    phi.push_back(-a);
    const double head = 1.0 - std::norm(a);
    Complex geometric(1.0, 0.0);
    for (std::size_t j = 1; j < taylor_len; ++j) {
        const Complex c = head * geometric;
        // The geometric decay makes coefficients negligible long before
        // taylor_len; trimming them caps the convolution cost without
        // touching the 1e-6 budget.
        if (std::abs(c) < 1e-30) break;
        phi.push_back(c);
        geometric *= std::conj(a);
    }

    std::vector<std::pair<std::uint64_t, double>> norms;
    norms.reserve(n_max);
    std::vector<Complex> current(phi);
    current.resize(taylor_len, Complex(0.0, 0.0));
    std::vector<Complex> next(taylor_len);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        NeumaierSum sum;
        for (const Complex& c : current) sum.add(std::abs(c));
        norms.emplace_back(n, sum.value());
        if (n == n_max) break;
        parallel_for(taylor_len, [&](std::size_t i) {
            Complex acc(0.0, 0.0);
            const std::size_t j_max = std::min(i, phi.size() - 1);
            for (std::size_t j = 0; j <= j_max; ++j) {
                acc += phi[j] * current[i - j];
            }
            next[i] = acc;
        });
        std::swap(current, next);
    }
    return norms;
}

std::vector<std::pair<std::uint64_t, double>> newman_boundedness_probe(
    const TorusPolynomial& p, std::uint64_t n_max) {
    if (p.dim() != 1) {
        throw DimensionMismatch("newman_boundedness_probe: requires dim 1");
    }
    if (n_max < 1) {
        throw ValidationError("newman_boundedness_probe: requires n_max >= 1");
    }
    const double sup = sup_norm_circle_estimate(p);
    if (sup > 1.0 + 1e-9) {
        throw SupNormExceedsOne(
            "newman_boundedness_probe: sup-norm estimate " +
            std::to_string(sup) + " exceeds 1; powers would grow trivially");
    }
    const std::size_t degree = static_cast<std::size_t>(max_total_degree(p));
    std::vector<Complex> base(degree + 1, Complex(0.0, 0.0));
    for (const auto& [alpha, c] : p.terms()) base[alpha[0]] = c;

    std::vector<std::pair<std::uint64_t, double>> norms;
    norms.reserve(n_max);
    std::vector<Complex> current(base);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        NeumaierSum sum;
        for (const Complex& c : current) sum.add(std::abs(c));
        norms.emplace_back(n, sum.value());
        if (n == n_max) break;
        std::vector<Complex> next(current.size() + degree, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = 0; j <= degree; ++j) {
                next[i + j] += current[i] * base[j];
            }
        }
        current = std::move(next);
    }
    return norms;
}

}  // namespace wd
