#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fimreg {

/* A degree in the m-fold product of the injection categories: a tuple of
 * nonnegative coordinates.  The partial order is coordinatewise. */
struct MultiIndex {
    std::vector<int> c;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> coords) : c(std::move(coords)) {}
    MultiIndex(std::initializer_list<int> coords) : c(coords) {}

    int arity() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int& operator[](int i) { return c[static_cast<size_t>(i)]; }

    /* |n| = sum of coordinates. */
    int total() const;

    bool operator==(const MultiIndex& o) const { return c == o.c; }
    bool operator!=(const MultiIndex& o) const { return c != o.c; }
    /* Lexicographic; used only for deterministic container ordering. */
    bool operator<(const MultiIndex& o) const { return c < o.c; }

    MultiIndex plus(int i, int delta = 1) const;

    std::string str() const;
};

/* a ⪯ b coordinatewise; morphisms a → b exist exactly when this holds. */
bool leq(const MultiIndex& a, const MultiIndex& b);
bool strictly_less(const MultiIndex& a, const MultiIndex& b);

/* All degrees with given arity and total ≤ cap, sorted by (total, lex).
 * This is the canonical degree enumeration used everywhere. */
std::vector<MultiIndex> degrees_up_to(int arity, int cap);

}  // namespace fimreg
