#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fimreg/errors.hpp"
#include "fimreg/matrix.hpp"
#include "fimreg/module.hpp"
#include "fimreg/morphism.hpp"
#include "fimreg/table.hpp"

namespace fimreg {

/*
 * Reference homology computation, kept deliberately naive so it shares no
 * shortcut with the resolution engine: the cover at every level takes one
 * generator per kernel basis vector at every degree of the window (level 0:
 * one generator per basis vector of V), all differentials are materialized
 * densely, kernels come from full RREF, and the induced complex on
 * H_0 = (coordinates of generators sitting at their own degree) enumerates
 * automorphisms explicitly.  Exactness holds by construction, so the only
 * outputs are the homology dimensions.  Costs explode with the window; the
 * budget turns oversized requests into a refusal instead of a wrong answer.
 */
template <class F>
class TorOracle {
public:
    using Elem = typename F::Elem;

    TorOracle(const TruncatedModule<F>& v, int max_i, std::int64_t budget_cells = 100'000'000)
        : v_(&v), field_(v.field()), win_(v.window()), max_i_(max_i), budget_(budget_cells) {
        if (max_i < 0) throw InputError("max homological index must be >= 0");
    }

    HomologyTable run() {
        build_levels();
        HomologyTable table;
        table.I = max_i_;
        table.N = win_->cap();
        for (int id = 0; id < win_->size(); ++id) {
            const MultiIndex n = win_->at(id);
            std::vector<int> h0dim(static_cast<size_t>(max_i_) + 2, 0);
            std::vector<int> dbar_rank(static_cast<size_t>(max_i_) + 2, 0);
            for (int j = 0; j <= max_i_ + 1; ++j) {
                h0dim[static_cast<size_t>(j)] = h0_dim(j, n);
                if (j >= 1) dbar_rank[static_cast<size_t>(j)] = mat_rank(field_, h0_diff(j, n));
            }
            for (int i = 0; i <= max_i_; ++i) {
                table.set(i, n,
                          h0dim[static_cast<size_t>(i)] - dbar_rank[static_cast<size_t>(i)] -
                              dbar_rank[static_cast<size_t>(i + 1)]);
            }
        }
        table.finalize();
        return table;
    }

private:
    struct Level {
        std::vector<MultiIndex> deg;
        std::vector<std::vector<Elem>> gvec;  // in the previous level's space (V for level 0)
    };

    const std::vector<MorphismTuple>& homs(const MultiIndex& a, const MultiIndex& b) {
        const auto key = std::make_pair(a, b);
        auto it = hom_cache_.find(key);
        if (it == hom_cache_.end()) it = hom_cache_.emplace(key, enumerate_injections(a, b)).first;
        return it->second;
    }

    int level_dim(int j, const MultiIndex& n) const {
        std::int64_t d = 0;
        for (const auto& w : levels_[static_cast<size_t>(j)].deg) d += hom_size(w, n);
        return static_cast<int>(d);
    }

    /* f_*(x) for x in level j's free space, by composition scatter. */
    std::vector<Elem> push(int j, const MorphismTuple& f, const std::vector<Elem>& x) {
        const MultiIndex a = f.source();
        const MultiIndex b = f.target();
        std::vector<Elem> out(static_cast<size_t>(level_dim(j, b)), field_.zero());
        int off_a = 0;
        int off_b = 0;
        for (const auto& w : levels_[static_cast<size_t>(j)].deg) {
            const std::int64_t ca = hom_size(w, a);
            const std::int64_t cb = hom_size(w, b);
            if (ca > 0) {
                const auto& enum_a = homs(w, a);
                const auto& enum_b = homs(w, b);
                for (int t = 0; t < static_cast<int>(ca); ++t) {
                    const Elem& val = x[static_cast<size_t>(off_a + t)];
                    if (field_.is_zero(val)) continue;
                    const MorphismTuple fg = compose(f, enum_a[static_cast<size_t>(t)]);
                    const auto pos = std::lower_bound(enum_b.begin(), enum_b.end(), fg);
                    if (pos == enum_b.end() || !(*pos == fg)) throw InternalError("oracle scatter lookup failed");
                    const int p = off_b + static_cast<int>(pos - enum_b.begin());
                    out[static_cast<size_t>(p)] = field_.add(out[static_cast<size_t>(p)], val);
                }
            }
            off_a += static_cast<int>(ca);
            off_b += static_cast<int>(cb);
        }
        return out;
    }

    std::vector<Elem> push_prev(int j, const MorphismTuple& f, const std::vector<Elem>& x) {
        if (j == 0) return v_->act_apply(f, x);
        return push(j - 1, f, x);
    }

    /* Dense matrix of d_j at degree n (rows: previous level's space). */
    Mat<F> diff_at(int j, const MultiIndex& n) {
        const Level& lv = levels_[static_cast<size_t>(j)];
        const int rows = j == 0 ? v_->dim_at(n) : level_dim(j - 1, n);
        const int cols = level_dim(j, n);
        charge(static_cast<std::int64_t>(rows) * cols);
        Mat<F> m(rows, cols);
        int off = 0;
        for (size_t g = 0; g < lv.deg.size(); ++g) {
            const std::int64_t cnt = hom_size(lv.deg[g], n);
            if (cnt > 0) {
                const auto& maps = homs(lv.deg[g], n);
                for (int t = 0; t < static_cast<int>(cnt); ++t) {
                    m.set_col(off + t, push_prev(j, maps[static_cast<size_t>(t)], lv.gvec[g]));
                }
            }
            off += static_cast<int>(cnt);
        }
        return m;
    }

    void build_levels() {
        levels_.assign(static_cast<size_t>(max_i_) + 2, Level{});
        Level& q0 = levels_[0];
        for (int id = 0; id < win_->size(); ++id) {
            const MultiIndex n = win_->at(id);
            for (int t = 0; t < v_->dim_at(id); ++t) {
                std::vector<Elem> e(static_cast<size_t>(v_->dim_at(id)), field_.zero());
                e[static_cast<size_t>(t)] = field_.one();
                q0.deg.push_back(n);
                q0.gvec.push_back(std::move(e));
            }
        }
        for (int j = 0; j <= max_i_; ++j) {
            Level& next = levels_[static_cast<size_t>(j) + 1];
            for (int id = 0; id < win_->size(); ++id) {
                const MultiIndex n = win_->at(id);
                // the kernel basis matrix can be nearly square in the columns
                const std::int64_t cols = level_dim(j, n);
                charge(cols * cols);
                auto res = rref_rank_kernel(field_, diff_at(j, n), true);
                for (int r = 0; r < res.kernel.rows; ++r) {
                    next.deg.push_back(n);
                    next.gvec.push_back(res.kernel.row_vec(r));
                }
            }
        }
    }

    int h0_dim(int j, const MultiIndex& n) const {
        std::int64_t d = 0;
        for (const auto& w : levels_[static_cast<size_t>(j)].deg) {
            if (w == n) d += hom_size(n, n);
        }
        return static_cast<int>(d);
    }

    /* Induced map H_0(Q_j)_n -> H_0(Q_{j-1})_n, automorphisms enumerated. */
    Mat<F> h0_diff(int j, const MultiIndex& n) {
        const int rows = h0_dim(j - 1, n);
        const int cols = h0_dim(j, n);
        Mat<F> m(rows, cols);
        if (rows == 0 || cols == 0) return m;
        // each column pushes a full vector through level j-1's space
        charge(static_cast<std::int64_t>(rows) * cols +
               static_cast<std::int64_t>(cols) * level_dim(j - 1, n));
        // row coordinate ranges: generators of level j-1 sitting at n
        std::vector<int> starts;
        {
            int off = 0;
            for (const auto& w : levels_[static_cast<size_t>(j - 1)].deg) {
                const std::int64_t cnt = hom_size(w, n);
                if (w == n) starts.push_back(off);
                off += static_cast<int>(cnt);
            }
        }
        const auto& auts = homs(n, n);
        const Level& lv = levels_[static_cast<size_t>(j)];
        int col = 0;
        for (size_t g = 0; g < lv.deg.size(); ++g) {
            if (!(lv.deg[g] == n)) continue;
            for (const auto& sigma : auts) {
                const auto full = push_prev(j, sigma, lv.gvec[g]);
                std::vector<Elem> proj;
                proj.reserve(static_cast<size_t>(rows));
                for (const int s : starts) {
                    for (size_t t = 0; t < auts.size(); ++t) proj.push_back(full[static_cast<size_t>(s) + t]);
                }
                m.set_col(col++, proj);
            }
        }
        return m;
    }

    void charge(std::int64_t cells) {
        spent_ += cells;
        if (spent_ > budget_) {
            throw BudgetError("reference homology needs more than " + std::to_string(budget_) +
                              " matrix cells; shrink the window or instance");
        }
    }

    const TruncatedModule<F>* v_;
    F field_;
    WindowPtr win_;
    int max_i_;
    std::int64_t budget_;
    std::int64_t spent_ = 0;
    std::vector<Level> levels_;
    std::map<std::pair<MultiIndex, MultiIndex>, std::vector<MorphismTuple>> hom_cache_;
};

template <class F>
HomologyTable tor_oracle(const TruncatedModule<F>& v, int max_i,
                         std::int64_t budget_cells = 100'000'000) {
    return TorOracle<F>(v, max_i, budget_cells).run();
}

}  // namespace fimreg
