#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fimreg/errors.hpp"
#include "fimreg/matrix.hpp"
#include "fimreg/morphism.hpp"
#include "fimreg/window.hpp"

namespace fimreg {

/*
 * A module on a finite degree window, presented by the matrices of the
 * generating morphisms only: the standard inclusions incl_i(n): n -> n+e_i
 * and the adjacent transpositions s_{i,j}(n): n -> n.  Every other morphism
 * acts by replaying its canonical factorization, so consistency of the
 * whole action reduces to the finitely many relations checked by validate().
 */
template <class F>
class TruncatedModule {
public:
    using Elem = typename F::Elem;

    TruncatedModule(WindowPtr win, F field)
        : win_(std::move(win)),
          field_(std::move(field)),
          dims_(static_cast<size_t>(win_->size()), 0),
          incl_(static_cast<size_t>(win_->size())),
          trans_(static_cast<size_t>(win_->size())) {
        for (int id = 0; id < win_->size(); ++id) {
            incl_[static_cast<size_t>(id)].resize(static_cast<size_t>(win_->arity()));
            trans_[static_cast<size_t>(id)].resize(static_cast<size_t>(win_->arity()));
        }
    }

    const WindowPtr& window() const { return win_; }
    const F& field() const { return field_; }
    int arity() const { return win_->arity(); }

    int dim_at(int id) const { return dims_[static_cast<size_t>(id)]; }
    int dim_at(const MultiIndex& n) const { return dims_[static_cast<size_t>(win_->id(n))]; }
    void set_dim(const MultiIndex& n, int d) { dims_[static_cast<size_t>(win_->id(n))] = d; }
    const std::vector<int>& dims() const { return dims_; }

    /* incl_i at source n, i.e. the matrix of n -> n+e_i.  0-based i. */
    const Mat<F>& incl_mat(const MultiIndex& n, int i) const {
        const MultiIndex up = n.plus(i);
        if (!win_->contains(up)) {
            throw InputError("inclusion " + n.str() + " -> " + up.str() + " leaves the window");
        }
        return incl_[static_cast<size_t>(win_->id(n))][static_cast<size_t>(i)];
    }
    void set_incl(const MultiIndex& n, int i, Mat<F> m) {
        incl_[static_cast<size_t>(win_->id(n))][static_cast<size_t>(i)] = std::move(m);
    }

    /* s_{i,j} at degree n, 1 <= j <= n_i - 1.  0-based i, 1-based j. */
    const Mat<F>& trans_mat(const MultiIndex& n, int i, int j) const {
        const auto& list = trans_[static_cast<size_t>(win_->id(n))][static_cast<size_t>(i)];
        if (j < 1 || j > static_cast<int>(list.size())) {
            throw InputError("transposition s_{" + std::to_string(i + 1) + "," + std::to_string(j) +
                             "} undefined at degree " + n.str());
        }
        return list[static_cast<size_t>(j - 1)];
    }
    void set_trans(const MultiIndex& n, int i, int j, Mat<F> m) {
        auto& list = trans_[static_cast<size_t>(win_->id(n))][static_cast<size_t>(i)];
        if (static_cast<int>(list.size()) < j) list.resize(static_cast<size_t>(j));
        list[static_cast<size_t>(j - 1)] = std::move(m);
    }

    /* Matrix of an arbitrary window morphism via factorization replay. */
    Mat<F> act(const MorphismTuple& f) const {
        const MultiIndex a = f.source();
        const MultiIndex b = f.target();
        if (!win_->contains(a) || !win_->contains(b)) {
            throw InputError("morphism " + f.str() + " leaves the window");
        }
        const FactorizationWord w = canonical_factorization(f);
        Mat<F> m = Mat<F>::identity(field_, dim_at(a));
        MultiIndex cur = a;
        for (int i = 0; i < arity(); ++i) {
            const CoordinateWord& cw = w.coord[static_cast<size_t>(i)];
            for (int k = 0; k < cw.incl_steps; ++k) {
                m = mat_mul(field_, incl_mat(cur, i), m);
                cur = cur.plus(i);
            }
            for (auto it = cw.word.rbegin(); it != cw.word.rend(); ++it) {
                m = mat_mul(field_, trans_mat(cur, i, *it), m);
            }
        }
        return m;
    }

    /* act(f) applied to one vector; avoids materialising the matrix. */
    std::vector<Elem> act_apply(const MorphismTuple& f, std::vector<Elem> v) const {
        const FactorizationWord w = canonical_factorization(f);
        MultiIndex cur = f.source();
        for (int i = 0; i < arity(); ++i) {
            const CoordinateWord& cw = w.coord[static_cast<size_t>(i)];
            for (int k = 0; k < cw.incl_steps; ++k) {
                v = mat_vec(field_, incl_mat(cur, i), v);
                cur = cur.plus(i);
            }
            for (auto it = cw.word.rbegin(); it != cw.word.rend(); ++it) {
                v = mat_vec(field_, trans_mat(cur, i, *it), v);
            }
        }
        return v;
    }

    /*
     * Checks every relation the stored generators must satisfy for the
     * replayed action to be a functor on the window:
     *   1. s_{i,j}^2 = id
     *   2. braid: s_{i,j} s_{i,j+1} s_{i,j} = s_{i,j+1} s_{i,j} s_{i,j+1}
     *   3. s_{i,j} s_{i,k} = s_{i,k} s_{i,j} for |j-k| >= 2
     *   4. s_{i,j} s_{i',j'} = s_{i',j'} s_{i,j} for i != i'
     *   5. incl_i(n+e_j) incl_j(n) = incl_j(n+e_i) incl_i(n) for i != j
     *   6. s_{i,j}(n+e_{i'}) incl_{i'}(n) = incl_{i'}(n) s_{i,j}(n)
     *      whenever s_{i,j} exists already at n (j < n_i, or i != i')
     * Returns human-readable violations; empty means consistent.
     */
    std::vector<std::string> validate() const {
        std::vector<std::string> bad;
        const int m = arity();
        auto shape_note = [&](const Mat<F>& mat, int r, int c, const std::string& what) {
            if (mat.rows != r || mat.cols != c) {
                bad.push_back(what + " has shape " + std::to_string(mat.rows) + "x" +
                              std::to_string(mat.cols) + ", expected " + std::to_string(r) + "x" +
                              std::to_string(c));
                return false;
            }
            return true;
        };
        for (int id = 0; id < win_->size(); ++id) {
            const MultiIndex n = win_->at(id);
            const int dn = dim_at(id);
            // shapes
            for (int i = 0; i < m; ++i) {
                if (win_->contains(n.plus(i))) {
                    shape_note(incl_mat(n, i), dim_at(n.plus(i)), dn,
                               "incl_" + std::to_string(i + 1) + " at " + n.str());
                }
                for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                    shape_note(trans_mat(n, i, j), dn, dn,
                               "s_{" + std::to_string(i + 1) + "," + std::to_string(j) + "} at " + n.str());
                }
            }
            // families 1-4: relations among transpositions at n
            for (int i = 0; i < m; ++i) {
                const int ni = n.c[static_cast<size_t>(i)];
                for (int j = 1; j < ni; ++j) {
                    const Mat<F>& s = trans_mat(n, i, j);
                    if (!(mat_mul(field_, s, s) == Mat<F>::identity(field_, dn))) {
                        bad.push_back("s^2 != id for s_{" + std::to_string(i + 1) + "," +
                                      std::to_string(j) + "} at " + n.str());
                    }
                    if (j + 1 < ni) {
                        const Mat<F>& t = trans_mat(n, i, j + 1);
                        const Mat<F> lhs = mat_mul(field_, s, mat_mul(field_, t, s));
                        const Mat<F> rhs = mat_mul(field_, t, mat_mul(field_, s, t));
                        if (!(lhs == rhs)) {
                            bad.push_back("braid fails for s_{" + std::to_string(i + 1) + "," +
                                          std::to_string(j) + "} at " + n.str());
                        }
                    }
                    for (int k = j + 2; k < ni; ++k) {
                        const Mat<F>& t = trans_mat(n, i, k);
                        if (!(mat_mul(field_, s, t) == mat_mul(field_, t, s))) {
                            bad.push_back("distant transpositions do not commute: coord " +
                                          std::to_string(i + 1) + " j=" + std::to_string(j) +
                                          ",k=" + std::to_string(k) + " at " + n.str());
                        }
                    }
                    for (int i2 = i + 1; i2 < m; ++i2) {
                        for (int j2 = 1; j2 < n.c[static_cast<size_t>(i2)]; ++j2) {
                            const Mat<F>& t = trans_mat(n, i2, j2);
                            if (!(mat_mul(field_, s, t) == mat_mul(field_, t, s))) {
                                bad.push_back("cross-coordinate transpositions do not commute at " +
                                              n.str() + ": (" + std::to_string(i + 1) + "," +
                                              std::to_string(j) + ") vs (" + std::to_string(i2 + 1) +
                                              "," + std::to_string(j2) + ")");
                            }
                        }
                    }
                }
            }
            // families 5-6: inclusions out of n
            for (int i = 0; i < m; ++i) {
                if (!win_->contains(n.plus(i))) continue;
                const Mat<F>& inc_i = incl_mat(n, i);
                for (int j = i + 1; j < m; ++j) {
                    if (!win_->contains(n.plus(i).plus(j))) continue;
                    const Mat<F> lhs = mat_mul(field_, incl_mat(n.plus(i), j), inc_i);
                    const Mat<F> rhs = mat_mul(field_, incl_mat(n.plus(j), i), incl_mat(n, j));
                    if (!(lhs == rhs)) {
                        bad.push_back("inclusions in coords " + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + " do not commute at " + n.str());
                    }
                }
                for (int i2 = 0; i2 < m; ++i2) {
                    // s_{i2,j} exists at both n and n+e_i exactly for j < n_{i2}
                    // (the new slot's transposition has no counterpart below)
                    for (int j = 1; j < n.c[static_cast<size_t>(i2)]; ++j) {
                        const Mat<F> lhs = mat_mul(field_, trans_mat(n.plus(i), i2, j), inc_i);
                        const Mat<F> rhs = mat_mul(field_, inc_i, trans_mat(n, i2, j));
                        if (!(lhs == rhs)) {
                            bad.push_back("s_{" + std::to_string(i2 + 1) + "," + std::to_string(j) +
                                          "} does not commute with incl_" + std::to_string(i + 1) +
                                          " at " + n.str());
                        }
                    }
                }
            }
        }
        return bad;
    }

private:
    WindowPtr win_;
    F field_;
    std::vector<int> dims_;
    std::vector<std::vector<Mat<F>>> incl_;
    std::vector<std::vector<std::vector<Mat<F>>>> trans_;
};

/*
 * Free module on generators of the given degrees.  The basis of degree n is
 * the disjoint union over generators j of Hom(w_j, n) in lex order, blocks
 * in generator order; morphisms act by post-composition, which permutes
 * (injectively relabels) the basis.
 */
template <class F>
struct FreeModuleData {
    TruncatedModule<F> mod;
    std::vector<MultiIndex> gen_degrees;
    /* basis[id] = the labels (generator, map) in basis order. */
    std::vector<std::vector<std::pair<int, MorphismTuple>>> basis;
    /* block_offset[id][j] = first basis index of generator j's block. */
    std::vector<std::vector<int>> block_offset;

    /* Position of (gen j, f) in the basis at degree id; binary search in the
     * lex-sorted block of generator j. */
    int basis_index(int id, int j, const MorphismTuple& f) const {
        const auto& b = basis[static_cast<size_t>(id)];
        const auto lo = b.begin() + block_offset[static_cast<size_t>(id)][static_cast<size_t>(j)];
        const auto hi = b.begin() + block_offset[static_cast<size_t>(id)][static_cast<size_t>(j) + 1];
        const auto it = std::lower_bound(
            lo, hi, f,
            [](const std::pair<int, MorphismTuple>& pr, const MorphismTuple& g) { return pr.second < g; });
        if (it == hi || !(it->second == f)) {
            throw InternalError("free basis lookup failed");
        }
        return static_cast<int>(it - b.begin());
    }
};

template <class F>
FreeModuleData<F> free_module(WindowPtr win, F field, std::vector<MultiIndex> gen_degrees) {
    for (const auto& w : gen_degrees) {
        if (!win->contains(w)) {
            throw InputError("free generator degree " + w.str() + " outside window");
        }
    }
    FreeModuleData<F> out{TruncatedModule<F>(win, field), std::move(gen_degrees), {}, {}};
    const int nd = win->size();
    const int m = win->arity();
    const int g = static_cast<int>(out.gen_degrees.size());
    out.basis.resize(static_cast<size_t>(nd));
    out.block_offset.assign(static_cast<size_t>(nd), std::vector<int>(static_cast<size_t>(g) + 1, 0));
    // enumerate bases; enumerate_injections returns lex order already
    for (int id = 0; id < nd; ++id) {
        const MultiIndex n = win->at(id);
        int off = 0;
        for (int j = 0; j < g; ++j) {
            out.block_offset[static_cast<size_t>(id)][static_cast<size_t>(j)] = off;
            auto maps = enumerate_injections(out.gen_degrees[static_cast<size_t>(j)], n);
            for (auto& f : maps) out.basis[static_cast<size_t>(id)].emplace_back(j, std::move(f));
            off = static_cast<int>(out.basis[static_cast<size_t>(id)].size());
        }
        out.block_offset[static_cast<size_t>(id)][static_cast<size_t>(g)] = off;
        out.mod.set_dim(n, off);
    }
    const F& f = out.mod.field();
    auto scatter = [&](const MultiIndex& src, const MultiIndex& dst, const MorphismTuple& gmor) {
        const int sid = win->id(src);
        const int did = win->id(dst);
        Mat<F> mat(out.mod.dim_at(did), out.mod.dim_at(sid));
        for (int col = 0; col < out.mod.dim_at(sid); ++col) {
            const auto& [j, map] = out.basis[static_cast<size_t>(sid)][static_cast<size_t>(col)];
            const int row = out.basis_index(did, j, compose(gmor, map));
            mat.at(row, col) = f.one();
        }
        return mat;
    };
    for (int id = 0; id < nd; ++id) {
        const MultiIndex n = win->at(id);
        for (int i = 0; i < m; ++i) {
            const MultiIndex up = n.plus(i);
            if (win->contains(up)) {
                MorphismTuple inc = identity_morphism(n);
                inc.comp[static_cast<size_t>(i)] =
                    standard_inclusion(n.c[static_cast<size_t>(i)], up.c[static_cast<size_t>(i)]);
                out.mod.set_incl(n, i, scatter(n, up, inc));
            }
            for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                MorphismTuple tr = identity_morphism(n);
                tr.comp[static_cast<size_t>(i)] =
                    adjacent_transposition(n.c[static_cast<size_t>(i)], j);
                out.mod.set_trans(n, i, j, scatter(n, n, tr));
            }
        }
    }
    return out;
}

/* Block-diagonal direct sum; degrees of a come first in every basis. */
template <class F>
TruncatedModule<F> direct_sum(const TruncatedModule<F>& a, const TruncatedModule<F>& b) {
    if (!(a.window()->arity() == b.window()->arity() && a.window()->cap() == b.window()->cap())) {
        throw InputError("direct sum of modules on different windows");
    }
    const WindowPtr& win = a.window();
    const F& f = a.field();
    TruncatedModule<F> out(win, f);
    auto block = [&](const Mat<F>& x, const Mat<F>& y) {
        Mat<F> z(x.rows + y.rows, x.cols + y.cols);
        for (int r = 0; r < x.rows; ++r) {
            for (int c = 0; c < x.cols; ++c) z.at(r, c) = x.at(r, c);
        }
        for (int r = 0; r < y.rows; ++r) {
            for (int c = 0; c < y.cols; ++c) z.at(x.rows + r, x.cols + c) = y.at(r, c);
        }
        return z;
    };
    for (int id = 0; id < win->size(); ++id) {
        const MultiIndex n = win->at(id);
        out.set_dim(n, a.dim_at(id) + b.dim_at(id));
        for (int i = 0; i < win->arity(); ++i) {
            if (win->contains(n.plus(i))) {
                out.set_incl(n, i, block(a.incl_mat(n, i), b.incl_mat(n, i)));
            }
            for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                out.set_trans(n, i, j, block(a.trans_mat(n, i, j), b.trans_mat(n, i, j)));
            }
        }
    }
    return out;
}

/* The same module on a smaller window. */
template <class F>
TruncatedModule<F> truncate_module(const TruncatedModule<F>& v, int new_cap) {
    if (new_cap > v.window()->cap()) throw InputError("truncation cap exceeds current window");
    WindowPtr win = make_window(v.window()->arity(), new_cap);
    TruncatedModule<F> out(win, v.field());
    for (int id = 0; id < win->size(); ++id) {
        const MultiIndex n = win->at(id);
        out.set_dim(n, v.dim_at(n));
        for (int i = 0; i < win->arity(); ++i) {
            if (win->contains(n.plus(i))) out.set_incl(n, i, v.incl_mat(n, i));
            for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                out.set_trans(n, i, j, v.trans_mat(n, i, j));
            }
        }
    }
    return out;
}

/*
 * Submodule with the induced action, from per-degree bases that must be
 * closed under the stored generators; a failure to close is an invariant
 * violation and throws.  bases[id] lives in F^{dim V_n}.
 */
template <class F>
TruncatedModule<F> submodule(const TruncatedModule<F>& v, const std::vector<RrefBasis<F>>& bases) {
    const WindowPtr& win = v.window();
    const F& f = v.field();
    TruncatedModule<F> out(win, f);
    for (int id = 0; id < win->size(); ++id) out.set_dim(win->at(id), bases[static_cast<size_t>(id)].rank());
    auto induced = [&](const Mat<F>& parent, const RrefBasis<F>& src, const RrefBasis<F>& dst) {
        Mat<F> mat(dst.rank(), src.rank());
        for (int col = 0; col < src.rank(); ++col) {
            const auto w = mat_vec(f, parent, src.rows()[static_cast<size_t>(col)]);
            const auto c = dst.coords_in_span(w);  // throws if not closed
            mat.set_col(col, c);
        }
        return mat;
    };
    for (int id = 0; id < win->size(); ++id) {
        const MultiIndex n = win->at(id);
        const auto& src = bases[static_cast<size_t>(id)];
        for (int i = 0; i < win->arity(); ++i) {
            if (win->contains(n.plus(i))) {
                out.set_incl(n, i, induced(v.incl_mat(n, i), src,
                                           bases[static_cast<size_t>(win->id(n.plus(i)))]));
            }
            for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                out.set_trans(n, i, j, induced(v.trans_mat(n, i, j), src, src));
            }
        }
    }
    return out;
}

/*
 * Quotient by per-degree action-closed subspaces, with the projection and
 * section retained per degree.  Induced action: proj_dst . parent . sec_src;
 * well defined exactly because the subspaces are action-closed.
 */
template <class F>
struct QuotientModuleData {
    TruncatedModule<F> mod;
    std::vector<QuotientMaps<F>> maps;  // per degree id
};

template <class F>
QuotientModuleData<F> quotient_module(const TruncatedModule<F>& v,
                                      const std::vector<RrefBasis<F>>& bases) {
    const WindowPtr& win = v.window();
    const F& f = v.field();
    QuotientModuleData<F> out{TruncatedModule<F>(win, f), {}};
    out.maps.reserve(static_cast<size_t>(win->size()));
    for (int id = 0; id < win->size(); ++id) {
        out.maps.push_back(quotient_with_section(f, bases[static_cast<size_t>(id)]));
        out.mod.set_dim(win->at(id), out.maps.back().proj.rows);
    }
    for (int id = 0; id < win->size(); ++id) {
        const MultiIndex n = win->at(id);
        const auto& src = out.maps[static_cast<size_t>(id)];
        for (int i = 0; i < win->arity(); ++i) {
            if (win->contains(n.plus(i))) {
                const auto& dst = out.maps[static_cast<size_t>(win->id(n.plus(i)))];
                out.mod.set_incl(n, i,
                                 mat_mul(f, dst.proj, mat_mul(f, v.incl_mat(n, i), src.sec)));
            }
            for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) {
                out.mod.set_trans(n, i, j,
                                  mat_mul(f, src.proj, mat_mul(f, v.trans_mat(n, i, j), src.sec)));
            }
        }
    }
    return out;
}

/*
 * Span of all images of strictly lower degrees inside V_n, restricted to
 * morphisms that move only the listed coordinates: seeded by the one-step
 * inclusion images and closed under the same coordinates' transpositions.
 * One step suffices because lower-degree images factor through them.
 */
template <class F>
RrefBasis<F> lower_span(const TruncatedModule<F>& v, const MultiIndex& n,
                        const std::vector<int>& coords) {
    const F& f = v.field();
    std::vector<std::vector<typename F::Elem>> seeds;
    for (int i : coords) {
        if (n.c[static_cast<size_t>(i)] == 0) continue;
        const MultiIndex below = n.plus(i, -1);
        const Mat<F>& inc = v.incl_mat(below, i);
        for (int c = 0; c < inc.cols; ++c) seeds.push_back(inc.col(c));
    }
    std::vector<const Mat<F>*> ops;
    for (int i : coords) {
        for (int j = 1; j < n.c[static_cast<size_t>(i)]; ++j) ops.push_back(&v.trans_mat(n, i, j));
    }
    return span_closure(f, v.dim_at(n), seeds, ops);
}

template <class F>
RrefBasis<F> lower_span(const TruncatedModule<F>& v, const MultiIndex& n) {
    std::vector<int> coords(static_cast<size_t>(v.arity()));
    for (int i = 0; i < v.arity(); ++i) coords[static_cast<size_t>(i)] = i;
    return lower_span(v, n, coords);
}

/* dim H_0(V)_n = dim V_n - dim of the lower span, degree by degree. */
template <class F>
std::vector<int> h0_dims(const TruncatedModule<F>& v) {
    std::vector<int> out(static_cast<size_t>(v.window()->size()), 0);
    for (int id = 0; id < v.window()->size(); ++id) {
        out[static_cast<size_t>(id)] = v.dim_at(id) - lower_span(v, v.window()->at(id)).rank();
    }
    return out;
}

}  // namespace fimreg
