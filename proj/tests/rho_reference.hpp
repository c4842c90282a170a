#pragma once

#include "fimreg/errors.hpp"
#include "fimreg/rho.hpp"

/* Independent check evaluator for the regularity-bound recursion: a direct
 * transcription with no memoization, no branch analysis, and no closed-form
 * jumps, so a bug in the engine's shortcuts cannot also be in here.  Kept
 * deliberately naive; only usable where the values are small. */
namespace refimpl {

inline fimreg::BigInt rho_ref(int m, const fimreg::BigInt& d, const fimreg::BigInt& r) {
    using fimreg::BigInt;
    if (m < 1 || d < -1 || r < -1) throw fimreg::InputError("rho_ref: bad arguments");
    if (d == -1) return BigInt(-1);
    if (m == 1) {
        const BigInt a = d, b = d + r - 1;
        return a >= b ? a : b;
    }
    /* ascend the first argument iteratively so deep d does not recurse */
    BigInt prev = -1;
    for (BigInt dp = 0; dp <= d; ++dp) {
        const BigInt rho1 = rho_ref(1, dp, r);
        const BigInt lower = rho_ref(m - 1, dp, r);
        BigInt rp = prev + 2;
        if (r > rp) rp = r;
        BigInt rpp = prev + 3;
        const BigInt alt = 4 + rho1 + lower;
        if (alt > rpp) rpp = alt;
        const BigInt tail = rho_ref(m - 1, rp, rpp);
        BigInt cur = rp + tail;
        if (prev + 1 > cur) cur = prev + 1;
        prev = cur;
    }
    return prev;
}

inline fimreg::BigInt rho_prime_ref(int m, const fimreg::BigInt& d, const fimreg::BigInt& r) {
    fimreg::BigInt v = 2 + rho_ref(m, d - 1, r);
    if (r > v) v = r;
    return v;
}

inline fimreg::BigInt rho_dprime_ref(int m, const fimreg::BigInt& d, const fimreg::BigInt& r) {
    fimreg::BigInt v = 3 + rho_ref(m, d - 1, r);
    const fimreg::BigInt alt = 4 + rho_ref(1, d, r) + rho_ref(m - 1, d, r);
    return alt > v ? alt : v;
}

}  // namespace refimpl
