#include "wd/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wd/errors.hpp"

namespace wd {

namespace {

// Grow-on-demand prime cache. Each thread owns one, so lookups never lock;
// the sequence is the same everywhere because trial division is
// deterministic. Desk scale: positions stay in the tens of thousands.
std::vector<std::uint64_t>& prime_cache() {
    thread_local std::vector<std::uint64_t> cache = {2, 3};
    return cache;
}

void grow_primes(std::vector<std::uint64_t>& cache) {
    std::uint64_t candidate = cache.back();
    for (;;) {
        candidate += 2;
        bool composite = false;
        for (std::uint64_t p : cache) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                composite = true;
                break;
            }
        }
        if (!composite) {
            cache.push_back(candidate);
            return;
        }
    }
}

constexpr unsigned __int128 kSaturated = ~static_cast<unsigned __int128>(0);

unsigned __int128 sat_mul128(unsigned __int128 a, unsigned __int128 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

// p^e with saturation at 2^128 - 1; the saturated value is treated as
// "too large to compare exactly" by ImageOrder.
unsigned __int128 sat_pow128(std::uint64_t base, std::uint32_t exp) {
    unsigned __int128 result = 1;
    unsigned __int128 b = base;
    while (exp > 0) {
        if (exp & 1u) result = sat_mul128(result, b);
        exp >>= 1u;
        if (exp > 0) b = sat_mul128(b, b);
        if (result == kSaturated) return kSaturated;
    }
    return result;
}

unsigned __int128 sat_image(const ExponentVector& v) {
    unsigned __int128 image = 1;
    const auto& exps = v.exps();
    for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        image = sat_mul128(image, sat_pow128(nth_prime(j + 1), exps[j]));
        if (image == kSaturated) return kSaturated;
    }
    return image;
}

double log_image(const ExponentVector& v) {
    double sum = 0.0;
    const auto& exps = v.exps();
    for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        sum += static_cast<double>(exps[j]) *
               std::log(static_cast<double>(nth_prime(j + 1)));
    }
    return sum;
}

}  // namespace

std::uint64_t nth_prime(std::size_t j) {
    auto& cache = prime_cache();
    while (cache.size() < j) grow_primes(cache);
    return cache[j - 1];
}

ExponentVector::ExponentVector(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)) {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::optional<std::uint64_t> ExponentVector::integer_image() const {
    std::uint64_t image = 1;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] == 0) continue;
        const auto power = checked_pow(nth_prime(j + 1), exps_[j]);
        if (!power) return std::nullopt;
        const auto next = checked_mul(image, *power);
        if (!next) return std::nullopt;
        image = *next;
    }
    return image;
}

bool ImageOrder::operator()(const ExponentVector& a,
                            const ExponentVector& b) const {
    const auto ia = sat_image(a);
    const auto ib = sat_image(b);
    if (ia != ib) return ia < ib;
    if (ia != kSaturated) return false;  // equal exact images: same key
    // Both images exceed 2^128. Order by log-image, then lexicographically;
    // not exactly image order if the logs round to the same double, but
    // still a deterministic total order.
    const double la = log_image(a);
    const double lb = log_image(b);
    if (la != lb) return la < lb;
    return a.exps() < b.exps();
}

PrimeTable PrimeTable::first(std::size_t count) {
    PrimeTable table;
    table.primes_.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        table.primes_.push_back(nth_prime(j));
    }
    return table;
}

PowerSeries::PowerSeries(std::size_t prime_budget)
    : prime_budget_(prime_budget) {}

void PowerSeries::set(const ExponentVector& alpha, Complex value) {
    if (alpha.positions() > prime_budget_) {
        throw ValidationError("PowerSeries: key uses position " +
                              std::to_string(alpha.positions()) +
                              ", beyond the prime budget " +
                              std::to_string(prime_budget_));
    }
    if (value.real() == 0.0 && value.imag() == 0.0) {
        coeffs_.erase(alpha);
    } else {
        coeffs_[alpha] = value;
    }
}

void PowerSeries::add_to(const ExponentVector& alpha, Complex value) {
    if (alpha.positions() > prime_budget_) {
        throw ValidationError("PowerSeries: key uses position " +
                              std::to_string(alpha.positions()) +
                              ", beyond the prime budget " +
                              std::to_string(prime_budget_));
    }
    auto it = coeffs_.find(alpha);
    if (it == coeffs_.end()) {
        if (value.real() != 0.0 || value.imag() != 0.0) {
            coeffs_.emplace(alpha, value);
        }
        return;
    }
    it->second += value;
    if (it->second.real() == 0.0 && it->second.imag() == 0.0) {
        coeffs_.erase(it);
    }
}

Complex PowerSeries::coefficient(const ExponentVector& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

double one_norm(const PowerSeries& F) {
    NeumaierSum sum;
    for (const auto& [alpha, c] : F.terms()) {
        (void)alpha;
        sum.add(std::abs(c));
    }
    return sum.value();
}

ExponentVector factorize(std::uint64_t n) {
    if (n < 1) throw ValidationError("factorize: requires n >= 1");
    std::vector<std::uint32_t> exps;
    std::uint64_t rest = n;
    for (std::size_t j = 1; rest > 1; ++j) {
        const std::uint64_t p = nth_prime(j);
        if (p > rest / p) break;  // p^2 > rest: the remainder is prime
        std::uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        exps.push_back(e);
    }
    if (rest > 1) {
        // One prime factor above the square root remains; place a single
        // exponent at its position in the prime sequence.
        std::size_t j = exps.size() + 1;
        while (nth_prime(j) < rest) ++j;
        exps.resize(j, 0);
        exps[j - 1] = 1;
    }
    return ExponentVector(std::move(exps));
}

PowerSeries lift(const DirichletSeries& f) {
    std::vector<std::pair<ExponentVector, Complex>> entries;
    entries.reserve(f.support_size());
    std::size_t budget = 0;
    for (const auto& [n, a] : f.terms()) {
        entries.emplace_back(factorize(n), a);
        budget = std::max(budget, entries.back().first.positions());
    }
    PowerSeries F(budget);
    for (auto& [alpha, a] : entries) F.set(alpha, a);
    return F;
}

DirichletSeries inverse_lift(const PowerSeries& F) {
    std::vector<std::pair<std::uint64_t, Complex>> entries;
    entries.reserve(F.support_size());
    std::uint64_t cutoff = 1;
    for (const auto& [alpha, c] : F.terms()) {
        const auto n = alpha.integer_image();
        if (!n) {
            throw IndexOverflow(
                "inverse_lift: monomial image exceeds the 64-bit index range");
        }
        entries.emplace_back(*n, c);
        cutoff = std::max(cutoff, *n);
    }
    DirichletSeries f(cutoff);
    for (const auto& [n, c] : entries) f.set(n, c);
    return f;
}

Complex eval_at_half_plane_point(const PowerSeries& F, Complex s,
                                 const PrimeTable& table) {
    if (!(s.real() > 0.0)) {
        throw ValidationError("eval_at_half_plane_point: requires Re s > 0");
    }
    if (F.prime_budget() > table.size()) {
        throw ValidationError(
            "eval_at_half_plane_point: prime budget " +
            std::to_string(F.prime_budget()) + " exceeds table size " +
            std::to_string(table.size()));
    }
    std::vector<double> logs(F.prime_budget());
    for (std::size_t j = 0; j < logs.size(); ++j) {
        logs[j] = std::log(static_cast<double>(table.primes()[j]));
    }
    NeumaierSum re;
    NeumaierSum im;
    for (const auto& [alpha, c] : F.terms()) {
        // Substituting z_j = p_j^{-s} turns the monomial into
        // exp(-s * sum_j a_j log p_j), the same shape evaluate() uses.
        double w = 0.0;
        const auto& exps = alpha.exps();
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (exps[j] != 0) w += static_cast<double>(exps[j]) * logs[j];
        }
        const Complex v = c * std::exp(-s * w);
        re.add(v.real());
        im.add(v.imag());
    }
    return Complex(re.value(), im.value());
}

}  // namespace wd
