#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fimreg/multiindex.hpp"

namespace fimreg {

/*
 * Morphisms between degrees are tuples of injections, one per coordinate.
 * An injection [a] -> [b] is stored by its image list (f(1),...,f(a)) with
 * 1-based values in [1,b].
 *
 * Every injection factors uniquely as f = sigma . iota^(b-a) where iota is
 * the standard inclusion t |-> t and sigma is the permutation of [b] that
 * agrees with f on [a] and is order-preserving from {a+1..b} onto the
 * complement of im(f).  sigma is recorded as a reduced word in adjacent
 * transpositions s_j = (j, j+1); the word [j_1,...,j_l] denotes the
 * composite s_{j_1} . s_{j_2} . ... . s_{j_l} (rightmost applied first).
 * Together with the transpositions, the standard inclusions generate the
 * whole category, which is what lets module actions be replayed from the
 * per-degree generator matrices alone.
 */
struct Injection {
    int a = 0;  // source size
    int b = 0;  // target size
    std::vector<int> img;

    Injection() = default;
    Injection(int a_, int b_, std::vector<int> img_);

    int operator()(int t) const { return img[static_cast<size_t>(t - 1)]; }
    bool is_identity() const;
    bool operator==(const Injection& o) const { return a == o.a && b == o.b && img == o.img; }
    std::string str() const;
};

/* The standard inclusion [a] -> [b], t |-> t. */
Injection standard_inclusion(int a, int b);
/* The one-step shift [a] -> [a+1], t |-> t+1. */
Injection shift_injection(int a);
/* The adjacent transposition (j, j+1) in [n], 1 <= j <= n-1. */
Injection adjacent_transposition(int n, int j);

struct MorphismTuple {
    std::vector<Injection> comp;

    MorphismTuple() = default;
    explicit MorphismTuple(std::vector<Injection> comps) : comp(std::move(comps)) {}

    int arity() const { return static_cast<int>(comp.size()); }
    MultiIndex source() const;
    MultiIndex target() const;
    bool operator==(const MorphismTuple& o) const { return comp == o.comp; }
    /* Lex on the concatenated image lists; the basis order of free modules. */
    bool operator<(const MorphismTuple& o) const;
    std::string str() const;
};

/* Identity at degree n. */
MorphismTuple identity_morphism(const MultiIndex& n);

/* Number of morphisms a -> b: prod_i b_i!/(b_i - a_i)!.  Zero when a is not
 * coordinatewise <= b.  Throws InputError on 64-bit overflow. */
std::int64_t hom_size(const MultiIndex& a, const MultiIndex& b);

/* All morphisms a -> b in lex order on concatenated image lists. */
std::vector<MorphismTuple> enumerate_injections(const MultiIndex& a, const MultiIndex& b);

/* g . f (apply f first).  Degree mismatch throws InputError. */
Injection compose(const Injection& g, const Injection& f);
MorphismTuple compose(const MorphismTuple& g, const MorphismTuple& f);

/* One coordinate of a factorization: the number of standard-inclusion steps
 * followed by the reduced word of the residual permutation of [b_i]. */
struct CoordinateWord {
    int incl_steps = 0;
    std::vector<int> word;  // adjacent transposition indices in the target
};

struct FactorizationWord {
    std::vector<CoordinateWord> coord;
    int arity() const { return static_cast<int>(coord.size()); }
};

/* Reduced word for a permutation given in one-line notation (1-based values).
 * perm must be a bijection of [n]; the word has length = inversion count. */
std::vector<int> permutation_word(const std::vector<int>& perm);

/* Canonical factorization of every coordinate of f. */
FactorizationWord canonical_factorization(const MorphismTuple& f);

/* Rebuild the morphism a -> (a + steps) encoded by a factorization word.
 * Inverse of canonical_factorization; used as its replay check. */
MorphismTuple replay_factorization(const MultiIndex& source, const FactorizationWord& w);

}  // namespace fimreg
