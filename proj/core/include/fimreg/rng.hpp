#pragma once

#include <cstdint>
#include <random>

namespace fimreg {

/*
 * Deterministic RNG: mt19937_64 has a standard-mandated sequence, and the
 * rejection sampling below is hand-rolled, so identical seeds give identical
 * draws on every platform (std::uniform_int_distribution does not promise
 * that).
 */
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    /* Uniform in [0, n); n >= 1. */
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~0ull;
        // smallest all-ones mask covering n-1
        std::uint64_t top = n - 1;
        mask = top;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t v = eng_() & mask;
            if (v < n) return v;
        }
    }

    /* Uniform in [lo, hi] inclusive. */
    int int_in(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1ull) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace fimreg
