#include "wd/numeric.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace wd {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t acc = 1;
    std::uint64_t sq = base;
    while (exp > 0) {
        if (exp & 1u) {
            auto p = checked_mul(acc, sq);
            if (!p) return std::nullopt;
            acc = *p;
        }
        exp >>= 1u;
        if (exp > 0) {
            auto p = checked_mul(sq, sq);
            if (!p) return std::nullopt;
            sq = *p;
        }
    }
    return acc;
}

unsigned thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("WD_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < 1024) {
            n = std::min<unsigned>(n, static_cast<unsigned>(v));
        } else if (end != env && v < 1) {
            n = 1;
        }
    }
    return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace wd
