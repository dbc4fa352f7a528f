#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>

namespace wd {

using Complex = std::complex<double>;

// Neumaier's variant of Kahan summation: the compensation also catches the
// case where the incoming term is larger than the running sum.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Guarded 64-bit multiply: nullopt means the true product exceeds 2^64 - 1.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

// base^exp, or nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

// Number of worker threads to use: hardware concurrency capped by the
// WD_THREADS environment variable (values < 1 are treated as 1).
unsigned thread_budget();

// Runs fn(i) for i in [0, count) on up to thread_budget() threads.
// Iterations must be independent; results keyed by i are deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace wd
