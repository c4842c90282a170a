#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fimreg/errors.hpp"
#include "fimreg/matrix.hpp"
#include "fimreg/module.hpp"
#include "fimreg/morphism.hpp"
#include "fimreg/rng.hpp"
#include "fimreg/table.hpp"

namespace fimreg {

/* Shared lex-sorted hom-set enumerations, keyed by (source, target). */
class HomCache {
public:
    const std::vector<MorphismTuple>& get(const MultiIndex& a, const MultiIndex& b) {
        const auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, enumerate_injections(a, b)).first;
        return it->second;
    }
    /* Position of f in the lex enumeration of its hom-set. */
    int index(const MultiIndex& a, const MultiIndex& b, const MorphismTuple& f) {
        const auto& list = get(a, b);
        const auto it = std::lower_bound(list.begin(), list.end(), f);
        if (it == list.end() || !(*it == f)) throw InternalError("hom enumeration lookup failed");
        return static_cast<int>(it - list.begin());
    }

private:
    std::map<std::pair<MultiIndex, MultiIndex>, std::vector<MorphismTuple>> cache_;
};

enum class LiftStrategy { PivotGreedy, SeededRandom };

struct EngineOptions {
    int max_level = 2;  // compute H_0..H_{max_level}
    LiftStrategy strategy = LiftStrategy::PivotGreedy;
    std::uint64_t seed = 1;  // used by SeededRandom lifts
    /* Refuse any single certificate or kernel whose dense size (entries)
     * exceeds this; refusal is an explicit error, never a wrong answer. */
    std::int64_t budget_cells = 400'000'000;
};

/* One materialized resolution level: its free cover and, per degree, the
 * dense differential into the previous level (into V for level 0). */
template <class F>
struct ResolutionData {
    std::vector<std::vector<MultiIndex>> gen_degrees;  // per level
    std::vector<FreeModuleData<F>> covers;
    std::vector<std::vector<Mat<F>>> diff;  // diff[l][degree id]
};

/*
 * Economical free resolution of V on the window, built degree by degree and
 * level by level, with homology read off along the way.
 *
 * For each level i and degree n the engine maintains the span basis
 * SB[i][n] = im(d_i)_n = ker(d_{i-1})_n inside the previous level's space
 * (SB[0][n] spans all of V_n).  Processing degree n at level i:
 *
 *   - expected = dim ker(d_{i-1})_n telescopes combinatorially from the
 *     exactness already certified below: expected_0 = dim V_n and
 *     expected_i = dim P_{i-1}@n - expected_{i-1}.
 *   - The span of all lower-degree images is seeded by the one-step
 *     inclusion images of SB[i][n - e_c] and closed under the degree's
 *     transpositions (every lower morphism factors through those).  Seeds
 *     from coordinate c only need the one new transposition s_{c, n_c - 1}
 *     applied to them: the seed span is invariant under all the others.
 *   - If the closed span already has dimension `expected`, the level is
 *     exact at n and H_i(V)_n = 0 — nothing else is computed.
 *   - Otherwise the deficit equals dim H_0(ker d_{i-1})_n: new generators
 *     are drafted from an explicit kernel basis (lift strategy decides
 *     which vectors) and their transposition orbits close the gap.  Then
 *     dim H_i(V)_n = deficit - rank of the projection of ker(d_{i-1})_n to
 *     the automorphism coordinates of level i-1 (the induced differential
 *     on H_0 covers exactly that much of the deficit).
 *
 * No automorphism group is ever enumerated and no level beyond max_level is
 * ever built; every certificate is exact.
 */
template <class F>
class ResolutionEngine {
public:
    using Elem = typename F::Elem;

    ResolutionEngine(const TruncatedModule<F>& v, EngineOptions opt)
        : v_(&v),
          field_(v.field()),
          win_(v.window()),
          opt_(opt),
          rng_(opt.seed),
          levels_(static_cast<size_t>(opt.max_level) + 1),
          span_(static_cast<size_t>(opt.max_level) + 1,
                std::vector<RrefBasis<F>>()),
          expected_(static_cast<size_t>(opt.max_level) + 2,
                    std::vector<int>(static_cast<size_t>(win_->size()), 0)),
          deficit_(static_cast<size_t>(opt.max_level) + 1,
                   std::vector<int>(static_cast<size_t>(win_->size()), 0)) {
        if (opt_.max_level < 0) throw InputError("max homological index must be >= 0");
        for (auto& s : span_) {
            s.reserve(static_cast<size_t>(win_->size()));
            for (int id = 0; id < win_->size(); ++id) s.emplace_back(field_, 0);
        }
    }

    void run() {
        if (ran_) return;
        for (int id = 0; id < win_->size(); ++id) {
            const MultiIndex n = win_->at(id);
            for (int i = 0; i <= opt_.max_level; ++i) process_cell(i, id, n);
        }
        table_.I = opt_.max_level;
        table_.N = win_->cap();
        for (int i = 0; i <= opt_.max_level; ++i) {
            for (int id = 0; id < win_->size(); ++id) {
                table_.set(i, win_->at(id), homology_[{i, id}]);
            }
        }
        table_.finalize();
        ran_ = true;
    }

    const HomologyTable& table() const {
        if (!ran_) throw InternalError("engine not run");
        return table_;
    }

    const std::vector<MultiIndex>& level_gen_degrees(int i) const {
        return levels_[static_cast<size_t>(i)].gen_deg;
    }

    int level_dim(int i, const MultiIndex& n) const {
        std::int64_t total = 0;
        for (const auto& w : levels_[static_cast<size_t>(i)].gen_deg) total += hom_size(w, n);
        if (total > (1 << 30)) throw BudgetError("free level dimension overflows budget at " + n.str());
        return static_cast<int>(total);
    }

    /* Dense covers and differentials for the first `level_count` levels. */
    ResolutionData<F> materialize(int level_count, std::int64_t cell_budget) const {
        if (!ran_) throw InternalError("engine not run");
        if (level_count > opt_.max_level + 1) {
            throw InputError("materialize: engine only built " + std::to_string(opt_.max_level + 1) +
                             " levels");
        }
        ResolutionData<F> out;
        // cost the dense covers and differentials before building anything
        std::int64_t cells = 0;
        for (int l = 0; l < level_count; ++l) {
            for (int id = 0; id < win_->size(); ++id) {
                const std::int64_t dim = level_dim(l, win_->at(id));
                const std::int64_t rows = l == 0 ? v_->dim_at(id) : level_dim(l - 1, win_->at(id));
                cells += dim * dim + rows * dim;
            }
        }
        if (cells > cell_budget) {
            throw BudgetError("materializing the resolution needs more than " +
                              std::to_string(cell_budget) + " matrix cells (" +
                              std::to_string(cells) + " required)");
        }
        for (int l = 0; l < level_count; ++l) {
            out.gen_degrees.push_back(levels_[static_cast<size_t>(l)].gen_deg);
            out.covers.push_back(free_module(win_, field_, out.gen_degrees.back()));
        }
        out.diff.resize(static_cast<size_t>(level_count));
        for (int l = 0; l < level_count; ++l) {
            auto& mats = out.diff[static_cast<size_t>(l)];
            mats.reserve(static_cast<size_t>(win_->size()));
            const auto& cover = out.covers[static_cast<size_t>(l)];
            for (int id = 0; id < win_->size(); ++id) {
                const MultiIndex n = win_->at(id);
                const int rows = l == 0 ? v_->dim_at(id) : out.covers[static_cast<size_t>(l - 1)].mod.dim_at(id);
                Mat<F> mat(rows, cover.mod.dim_at(id));
                for (int col = 0; col < mat.cols; ++col) {
                    const auto& [g, f] = cover.basis[static_cast<size_t>(id)][static_cast<size_t>(col)];
                    mat.set_col(col, apply_prev(l, f, levels_[static_cast<size_t>(l)].gvec[static_cast<size_t>(g)]));
                }
                mats.push_back(std::move(mat));
            }
        }
        return out;
    }

private:
    struct Level {
        std::vector<MultiIndex> gen_deg;
        std::vector<std::vector<Elem>> gvec;  // in the previous level's space (V for level 0)
    };

    /* f_*(x) in level i's own free space, by composition scatter. */
    std::vector<Elem> apply_free(int i, const MorphismTuple& f, const std::vector<Elem>& x) const {
        const MultiIndex a = f.source();
        const MultiIndex b = f.target();
        const Level& lv = levels_[static_cast<size_t>(i)];
        std::vector<Elem> out(static_cast<size_t>(level_dim(i, b)), field_.zero());
        int off_a = 0;
        int off_b = 0;
        for (const auto& w : lv.gen_deg) {
            const std::int64_t ca = hom_size(w, a);
            const std::int64_t cb = hom_size(w, b);
            if (ca > 0) {
                const auto& enum_a = homs_.get(w, a);
                for (int t = 0; t < static_cast<int>(ca); ++t) {
                    const Elem& val = x[static_cast<size_t>(off_a + t)];
                    if (field_.is_zero(val)) continue;
                    const int pos = off_b + homs_.index(w, b, compose(f, enum_a[static_cast<size_t>(t)]));
                    out[static_cast<size_t>(pos)] = field_.add(out[static_cast<size_t>(pos)], val);
                }
            }
            off_a += static_cast<int>(ca);
            off_b += static_cast<int>(cb);
        }
        return out;
    }

    /* f_*(x) in the space level l maps into (V for l == 0). */
    std::vector<Elem> apply_prev(int l, const MorphismTuple& f, const std::vector<Elem>& x) const {
        if (l == 0) return v_->act_apply(f, x);
        return apply_free(l - 1, f, x);
    }

    int prev_dim(int i, const MultiIndex& n) const {
        return i == 0 ? v_->dim_at(n) : level_dim(i - 1, n);
    }

    MorphismTuple transposition_tuple(const MultiIndex& n, int c, int j) const {
        MorphismTuple t = identity_morphism(n);
        t.comp[static_cast<size_t>(c)] = adjacent_transposition(n.c[static_cast<size_t>(c)], j);
        return t;
    }

    MorphismTuple inclusion_tuple(const MultiIndex& below, int c) const {
        MorphismTuple t = identity_morphism(below);
        t.comp[static_cast<size_t>(c)] = standard_inclusion(below.c[static_cast<size_t>(c)],
                                                            below.c[static_cast<size_t>(c)] + 1);
        return t;
    }

    void process_cell(int i, int id, const MultiIndex& n) {
        const int pdim = prev_dim(i, n);
        if (i == 0) expected_[0][static_cast<size_t>(id)] = v_->dim_at(id);
        // dim ker(d_{i-1})@n, telescoped from the exactness certified below
        const int expected = expected_[static_cast<size_t>(i)][static_cast<size_t>(id)];
        if (expected < 0) throw InternalError("negative expected kernel dimension — exactness broken");
        if (static_cast<std::int64_t>(expected) * pdim > opt_.budget_cells) {
            throw BudgetError("homology certificate at level " + std::to_string(i) + ", degree " +
                              n.str() + " needs " + std::to_string(static_cast<std::int64_t>(expected) * pdim) +
                              " cells (budget " + std::to_string(opt_.budget_cells) + ")");
        }
        RrefBasis<F> basis(field_, pdim);
        // worklist entries: (vector, seed coordinate or -1 for closure vectors)
        std::deque<std::pair<std::vector<Elem>, int>> work;
        const int m = win_->arity();
        for (int c = 0; c < m && basis.rank() < expected; ++c) {
            if (n.c[static_cast<size_t>(c)] == 0) continue;
            const MultiIndex below = n.plus(c, -1);
            const MorphismTuple inc = inclusion_tuple(below, c);
            const auto& sb = span_[static_cast<size_t>(i)][static_cast<size_t>(win_->id(below))];
            for (const auto& row : sb.rows()) {
                auto v = apply_prev(i, inc, row);
                if (basis.insert(v)) {
                    work.emplace_back(std::move(v), c);
                    if (basis.rank() == expected) break;
                }
            }
        }
        while (!work.empty() && basis.rank() < expected) {
            auto [u, seed_coord] = std::move(work.back());
            work.pop_back();
            for (int c = 0; c < m && basis.rank() < expected; ++c) {
                const int nc = n.c[static_cast<size_t>(c)];
                for (int j = 1; j < nc; ++j) {
                    // seed spans are invariant under everything except the
                    // transposition touching their own new slot
                    if (seed_coord >= 0 && !(c == seed_coord && j == nc - 1)) continue;
                    auto w = apply_prev(i, transposition_tuple(n, c, j), u);
                    if (basis.insert(w)) {
                        work.emplace_back(std::move(w), -1);
                        if (basis.rank() == expected) break;
                    }
                }
            }
        }
        const int deficit = expected - basis.rank();
        deficit_[static_cast<size_t>(i)][static_cast<size_t>(id)] = deficit;
        if (deficit > 0) repair(i, n, expected, basis);
        int rbar = 0;
        if (deficit > 0 && i >= 1) rbar = h0_image_rank(i - 1, n, basis);
        homology_[{i, id}] = deficit - rbar;
        // after repair rank(d_i)@n == expected, so this is dim ker(d_i)@n
        expected_[static_cast<size_t>(i + 1)][static_cast<size_t>(id)] = level_dim(i, n) - expected;
        span_[static_cast<size_t>(i)][static_cast<size_t>(id)] = std::move(basis);
    }

    /* Draft new level-i generators at n from ker(d_{i-1})_n until covered. */
    void repair(int i, const MultiIndex& n, int expected, RrefBasis<F>& basis) {
        std::vector<std::vector<Elem>> kernel_rows;
        const int pdim = prev_dim(i, n);
        if (i == 0) {
            kernel_rows.reserve(static_cast<size_t>(pdim));
            for (int t = 0; t < pdim; ++t) {
                std::vector<Elem> e(static_cast<size_t>(pdim), field_.zero());
                e[static_cast<size_t>(t)] = field_.one();
                kernel_rows.push_back(std::move(e));
            }
        } else {
            kernel_rows = dense_kernel(i - 1, n);
        }
        size_t scan = 0;
        while (basis.rank() < expected) {
            std::vector<Elem> v = pick_lift(kernel_rows, basis, scan);
            levels_[static_cast<size_t>(i)].gen_deg.push_back(n);
            levels_[static_cast<size_t>(i)].gvec.push_back(v);
            // close the new generator's transposition orbit into the span
            std::deque<std::vector<Elem>> work;
            if (basis.insert(v)) work.push_back(std::move(v));
            while (!work.empty() && basis.rank() < expected) {
                auto u = std::move(work.back());
                work.pop_back();
                for (int c = 0; c < win_->arity() && basis.rank() < expected; ++c) {
                    for (int j = 1; j < n.c[static_cast<size_t>(c)]; ++j) {
                        auto w = apply_prev(i, transposition_tuple(n, c, j), u);
                        if (basis.insert(w)) work.push_back(std::move(w));
                        if (basis.rank() == expected) break;
                    }
                }
            }
        }
    }

    /* Kernel of d_{l}@n as dense RREF kernel rows (l >= 0). */
    std::vector<std::vector<Elem>> dense_kernel(int l, const MultiIndex& n) {
        const int cols = level_dim(l, n);
        const int rows = prev_dim(l, n);
        if (static_cast<std::int64_t>(cols) * rows > opt_.budget_cells) {
            throw BudgetError("kernel materialization at level " + std::to_string(l) + ", degree " +
                              n.str() + " needs " + std::to_string(static_cast<std::int64_t>(cols) * rows) +
                              " cells (budget " + std::to_string(opt_.budget_cells) + ")");
        }
        Mat<F> mat(rows, cols);
        const Level& lv = levels_[static_cast<size_t>(l)];
        int off = 0;
        for (size_t g = 0; g < lv.gen_deg.size(); ++g) {
            const MultiIndex& w = lv.gen_deg[g];
            const std::int64_t cnt = hom_size(w, n);
            if (cnt > 0) {
                const auto& maps = homs_.get(w, n);
                for (int t = 0; t < static_cast<int>(cnt); ++t) {
                    mat.set_col(off + t, apply_prev(l, maps[static_cast<size_t>(t)], lv.gvec[g]));
                }
            }
            off += static_cast<int>(cnt);
        }
        auto res = rref_rank_kernel(field_, std::move(mat), true);
        std::vector<std::vector<Elem>> out;
        out.reserve(static_cast<size_t>(res.kernel.rows));
        for (int r = 0; r < res.kernel.rows; ++r) out.push_back(res.kernel.row_vec(r));
        return out;
    }

    /* Lift choice: the strategies must agree on homology, not on the lift. */
    std::vector<Elem> pick_lift(const std::vector<std::vector<Elem>>& kernel_rows,
                                const RrefBasis<F>& basis, size_t& scan) {
        if (opt_.strategy == LiftStrategy::SeededRandom && !kernel_rows.empty()) {
            const int dim = static_cast<int>(kernel_rows.front().size());
            for (int attempt = 0; attempt < 32; ++attempt) {
                std::vector<Elem> v(static_cast<size_t>(dim), field_.zero());
                for (const auto& row : kernel_rows) {
                    const int c = rng_.int_in(-2, 2);
                    if (c == 0) continue;
                    const Elem ce = field_.from_int(c);
                    for (int t = 0; t < dim; ++t) {
                        v[static_cast<size_t>(t)] =
                            field_.add(v[static_cast<size_t>(t)], field_.mul(ce, row[static_cast<size_t>(t)]));
                    }
                }
                if (!basis.contains(v)) return v;
            }
            // fall through to the greedy scan if randomness keeps landing inside
        }
        for (; scan < kernel_rows.size(); ++scan) {
            if (!basis.contains(kernel_rows[scan])) return kernel_rows[scan++];
        }
        throw InternalError("kernel rows failed to cover the certified deficit");
    }

    /* rank of the projection of ker(d_{i})_n (= span basis at level i+1's
     * anchor, here passed in) onto the automorphism coordinates of level l. */
    int h0_image_rank(int l, const MultiIndex& n, const RrefBasis<F>& kernel_span) {
        const Level& lv = levels_[static_cast<size_t>(l)];
        // coordinate ranges of generators sitting exactly at degree n
        std::vector<std::pair<int, int>> ranges;
        int off = 0;
        int h0dim = 0;
        for (const auto& w : lv.gen_deg) {
            const std::int64_t cnt = hom_size(w, n);
            if (w == n) {
                ranges.emplace_back(off, static_cast<int>(cnt));
                h0dim += static_cast<int>(cnt);
            }
            off += static_cast<int>(cnt);
        }
        if (h0dim == 0) return 0;
        RrefBasis<F> proj(field_, h0dim);
        for (const auto& row : kernel_span.rows()) {
            std::vector<Elem> p;
            p.reserve(static_cast<size_t>(h0dim));
            for (const auto& [start, len] : ranges) {
                for (int t = 0; t < len; ++t) p.push_back(row[static_cast<size_t>(start + t)]);
            }
            proj.insert(std::move(p));
        }
        return proj.rank();
    }

    const TruncatedModule<F>* v_;
    F field_;
    WindowPtr win_;
    EngineOptions opt_;
    DetRng rng_;
    mutable HomCache homs_;
    std::vector<Level> levels_;
    std::vector<std::vector<RrefBasis<F>>> span_;  // span_[i][id] = im(d_i)@id
    std::vector<std::vector<int>> expected_;
    std::vector<std::vector<int>> deficit_;
    std::map<std::pair<int, int>, int> homology_;
    HomologyTable table_;
    bool ran_ = false;
};

template <class F>
HomologyTable homology_table(const TruncatedModule<F>& v, int max_i,
                             EngineOptions opt = EngineOptions{}) {
    opt.max_level = max_i;
    ResolutionEngine<F> engine(v, opt);
    engine.run();
    return engine.table();
}

/* Degree of the module: max |n| with V_n != 0, -1 for the zero module;
 * censored when the top band is occupied (growth may continue past N). */
template <class F>
std::pair<int, bool> module_degree(const TruncatedModule<F>& v) {
    int deg = -1;
    for (int id = 0; id < v.window()->size(); ++id) {
        if (v.dim_at(id) > 0) deg = std::max(deg, v.window()->at(id).total());
    }
    return {deg, deg == v.window()->cap()};
}

inline RegularityReport regularity_report(const HomologyTable& table) {
    RegularityReport rep;
    rep.I = table.I;
    rep.N = table.N;
    rep.t = table.t;
    rep.censored = table.censored;
    rep.reg = -1;
    rep.conclusive.assign(static_cast<size_t>(table.I) + 1, false);
    for (int i = 0; i <= table.I; ++i) {
        if (table.t[static_cast<size_t>(i)] >= 0) {
            rep.reg = std::max(rep.reg, table.t[static_cast<size_t>(i)] - i);
        }
        rep.conclusive[static_cast<size_t>(i)] = table.t[static_cast<size_t>(i)] < table.N;
    }
    return rep;
}

}  // namespace fimreg
