#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fimreg/json_io.hpp"

namespace fimreg {

/* Regularity-bound recursion.
 *
 * rho(1, d, r) = max{d, d+r-1}, rho(m, -1, r) = -1, and for m >= 2, d >= 0:
 *
 *   rho'(m, d, r)  = max{2 + rho(m, d-1, r), r}
 *   rho''(m, d, r) = max{3 + rho(m, d-1, r), 4 + rho(1, d, r) + rho(m-1, d, r)}
 *   rho(m, d, r)   = max{rho' + rho(m-1, rho', rho''), 1 + rho(m, d-1, r)}
 *
 * Values explode doubly fast in m: already rho(3, 2, r) has more bits than
 * atoms in the universe.  Everything here is exact integer arithmetic; a
 * computation whose *result size* would exceed the configured budget is
 * refused with BudgetError before any large allocation happens. */

using BigInt = boost::multiprecision::cpp_int;

struct RhoBudget {
    /* Refuse any value whose binary size would exceed this many bits. */
    std::int64_t max_bits = 64'000'000;
    /* Refuse after this many recursion/iteration steps. */
    std::int64_t max_steps = 4'000'000;
};

/* Memoizing evaluator.  Arguments are arbitrary-precision because the
 * recursion feeds rho' / rho'' (astronomical for m >= 3) back in as degrees.
 * Not thread-safe; use one engine per thread. */
class RhoEngine {
public:
    explicit RhoEngine(RhoBudget budget = {});

    /* m >= 1, d >= -1, r >= -1; InputError otherwise. */
    BigInt rho(int m, const BigInt& d, const BigInt& r);

    /* Defined for m >= 2 and d >= 0 only; InputError otherwise. */
    BigInt rho_prime(int m, const BigInt& d, const BigInt& r);
    BigInt rho_dprime(int m, const BigInt& d, const BigInt& r);

    const RhoBudget& budget() const { return budget_; }
    std::int64_t steps_used() const { return steps_; }

private:
    /* The step budget is per public call: entering rho/rho'/rho'' from
     * outside resets the counter, nested internal calls keep charging it.
     * Keeps refusals independent of how many cells an engine served before
     * (memo warmth can still turn a refusal into a hit, never the reverse). */
    struct EntryGuard {
        explicit EntryGuard(RhoEngine& e) : eng(e), outermost(!e.in_call_) {
            if (outermost) {
                eng.in_call_ = true;
                eng.steps_ = 0;
            }
        }
        ~EntryGuard() {
            if (outermost) eng.in_call_ = false;
        }
        RhoEngine& eng;
        bool outermost;
    };

    void charge_step();
    void check_args(int m, const BigInt& d, const BigInt& r) const;

    /* Bottom-up m = 2 evaluation in O(min(d, log r)) iterations: once every
     * max{} branch has stabilized the tail is the affine map x -> 3x + 6,
     * which is jumped in closed form. */
    BigInt rho2(const BigInt& d, const BigInt& r);

    /* Bottom-up over the first argument for m >= 3 (memoizes every prefix). */
    BigInt rho_high(int m, const BigInt& d, const BigInt& r);

    RhoBudget budget_;
    std::int64_t steps_ = 0;
    bool in_call_ = false;
    std::map<std::tuple<int, BigInt, BigInt>, BigInt> memo_;
};

/* Censored-range bound for the truncated-window campaigns: i + d + r - 1.
 * i >= 1 (homological degree of an actual syzygy level); InputError on i < 1. */
long long ce_bound(long long d, long long r, long long i);

/* Verdict of one rho'' > rho' comparison.  "direct" means both values were
 * materialized and compared; "certified" means the values are too large to
 * materialize and the inequality was established branchwise:
 *   3 + rho(m,d-1,r) > 2 + rho(m,d-1,r)       (same subterm on both sides)
 *   4 + rho(1,d,r) + rho(m-1,d,r) >= d+r+2 > r (rho >= -1 pointwise)
 * which dominates both branches of rho'. */
struct StrictGapCheck {
    bool holds = false;
    std::string route;   // "direct" or "certified"
    std::string detail;
};

StrictGapCheck dprime_exceeds_prime(RhoEngine& eng, int m, const BigInt& d,
                                    const BigInt& r);

/* Grid dump of rho / rho' / rho'' with per-cell budget refusals recorded
 * instead of thrown, plus the two observational reports: the strict gap
 * rho'' > rho' on every comparable cell, and monotonicity of rho in d and r
 * (checked on the computed sub-grid with m <= 3, d, r <= 6; an observation
 * about these tables, not a proved theorem). */
struct RhoCell {
    int m = 0;
    long long d = 0;
    long long r = 0;
    bool have_rho = false, have_prime = false, have_dprime = false;
    std::string rho, prime, dprime;  // decimal; empty when not computed
    std::string note;                // "" | "budget" | "undefined"
    std::string gap_route;           // "" | "direct" | "certified"
};

struct RhoTable {
    int m_max = 0;
    long long d_max = 0, r_max = 0;
    std::vector<RhoCell> cells;               // (m, d, r) lexicographic
    std::vector<std::string> gap_violations;  // expected empty
    bool monotone_d = true, monotone_r = true;
    std::string monotone_note;
    std::string growth_note;
};

RhoTable rho_table(int m_max, long long d_max, long long r_max,
                   RhoBudget budget = {});

std::string rho_table_csv(const RhoTable& table);
ordered_json rho_table_json(const RhoTable& table);

}  // namespace fimreg
