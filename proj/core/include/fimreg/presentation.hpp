#pragma once

#include <cstdint>
#include <vector>

#include "fimreg/field.hpp"
#include "fimreg/module.hpp"
#include "fimreg/morphism.hpp"
#include "fimreg/rng.hpp"

namespace fimreg {

/*
 * A finitely presented module: free generators at degrees w_j, modulo the
 * submodule generated by finitely many relation vectors.  A relation at
 * degree u is a combination of basis elements (j, f: w_j -> u) of the free
 * cover, with exact rational coefficients (mapped into the working field at
 * build time).
 */
struct RelationTerm {
    int gen = 0;
    MorphismTuple map;
    Rational coeff;
};

struct Relation {
    MultiIndex degree;
    std::vector<RelationTerm> terms;
};

struct Presentation {
    int m = 1;
    int N = 0;
    FieldConfig field;
    std::vector<MultiIndex> generators;
    std::vector<Relation> relations;

    /* d = max generator total, r = max relation total; -1 when empty. */
    int gen_degree() const;
    int rel_degree() const;
    /* Structural validity (arities, window fit, term sources); throws InputError. */
    void check() const;
};

/* Uniformly random injection tuple a -> b (a <= b coordinatewise). */
MorphismTuple random_injection(DetRng& rng, const MultiIndex& a, const MultiIndex& b);

/*
 * Seeded random presentation with the declared degrees attained exactly:
 * one generator of total degree d always present (others uniform in [0,d]),
 * and when rel_count > 0 one relation of total degree exactly r.  Identical
 * arguments give identical presentations on every platform.
 */
Presentation random_presentation(int m, int d, int r, int gen_count, int rel_count,
                                 std::uint64_t seed, int N, FieldConfig field);

template <class F>
struct PresentedModule {
    FreeModuleData<F> cover;
    std::vector<RrefBasis<F>> relation_span;  // per degree id, inside the cover
    QuotientModuleData<F> quotient;           // .mod is the presented module
};

/*
 * Cokernel of the relations inside the free cover.  The relation submodule
 * is grown degree by degree in window order: seeds are the relation vectors
 * at that degree plus one-step inclusion images of the spans below, closed
 * under the degree's transpositions — every morphism from lower degrees
 * factors through those.
 */
template <class F>
PresentedModule<F> build_module(const Presentation& pres, const F& field) {
    pres.check();
    WindowPtr win = make_window(pres.m, pres.N);
    PresentedModule<F> out{free_module(win, field, pres.generators), {}, {TruncatedModule<F>(win, field), {}}};
    const auto& cover = out.cover;
    std::vector<std::vector<std::vector<typename F::Elem>>> rel_at(
        static_cast<size_t>(win->size()));
    for (const auto& rel : pres.relations) {
        const int id = win->id(rel.degree);
        std::vector<typename F::Elem> v(static_cast<size_t>(cover.mod.dim_at(id)), field.zero());
        for (const auto& term : rel.terms) {
            const int col = cover.basis_index(id, term.gen, term.map);
            v[static_cast<size_t>(col)] =
                field.add(v[static_cast<size_t>(col)], field.from_rational(term.coeff));
        }
        rel_at[static_cast<size_t>(id)].push_back(std::move(v));
    }
    out.relation_span.reserve(static_cast<size_t>(win->size()));
    for (int id = 0; id < win->size(); ++id) {
        const MultiIndex n = win->at(id);
        std::vector<std::vector<typename F::Elem>> seeds = std::move(rel_at[static_cast<size_t>(id)]);
        for (int i = 0; i < pres.m; ++i) {
            if (n.c[static_cast<size_t>(i)] == 0) continue;
            const MultiIndex below = n.plus(i, -1);
            const Mat<F>& inc = cover.mod.incl_mat(below, i);
            for (const auto& row : out.relation_span[static_cast<size_t>(win->id(below))].rows()) {
                seeds.push_back(mat_vec(field, inc, row));
            }
        }
        std::vector<const Mat<F>*> ops;
        for (int i = 0; i < pres.m; ++i) {
            for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                ops.push_back(&cover.mod.trans_mat(n, i, j));
            }
        }
        out.relation_span.push_back(span_closure(field, cover.mod.dim_at(id), seeds, ops));
    }
    out.quotient = quotient_module(cover.mod, out.relation_span);
    return out;
}

}  // namespace fimreg
