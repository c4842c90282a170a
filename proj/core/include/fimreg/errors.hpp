#pragma once

#include <stdexcept>
#include <string>

namespace fimreg {

/* Bad user-facing input: malformed files, out-of-range parameters, unknown
 * options.  CLI maps this to exit code 2. */
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/* A computation was refused because its estimated size or work exceeds the
 * configured budget.  Never silent: CLI maps this to exit code 3, campaign
 * runners record an explicit per-instance skip. */
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/* An internal invariant failed (inexact solve, non-closed subspace, ...).
 * Always a bug in this library or corrupted input data; surfaced loudly. */
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace fimreg
