#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fimreg/errors.hpp"
#include "fimreg/homology.hpp"
#include "fimreg/matrix.hpp"
#include "fimreg/module.hpp"
#include "fimreg/morphism.hpp"
#include "fimreg/table.hpp"
#include "fimreg/window.hpp"

namespace fimreg {

/* The degree-raising map n -> n+e_i that inserts a new first element in
 * coordinate i (t |-> t+1) and is the identity elsewhere. */
inline MorphismTuple raise_first(const MultiIndex& n, int i) {
    MorphismTuple t = identity_morphism(n);
    t.comp[static_cast<size_t>(i)] = shift_injection(n.c[static_cast<size_t>(i)]);
    return t;
}

/* A degreewise collection of matrices out of V, indexed by the degrees of
 * `win` (the target degree is determined by the construction site). */
template <class F>
struct DegreewiseMap {
    WindowPtr win;
    std::vector<Mat<F>> mats;
};

/*
 * Shift along coordinate i: (SV)_n = V_{n+e_i}, with the new element of the
 * i-th coordinate inserted first.  Under that identification the standard
 * inclusion stays the standard inclusion, a transposition s_{i,j} of the
 * shifted module is s_{i,j+1} of V, and the other coordinates act unchanged;
 * all of these are stored generators of V, so no replay is needed.
 */
template <class F>
TruncatedModule<F> shift(const TruncatedModule<F>& v, int i) {
    const WindowPtr& win = v.window();
    if (win->cap() < 1) throw InputError("shift needs window cap >= 1");
    if (i < 0 || i >= v.arity()) throw InputError("shift: coordinate out of range");
    WindowPtr swin = make_window(v.arity(), win->cap() - 1);
    TruncatedModule<F> out(swin, v.field());
    for (int sid = 0; sid < swin->size(); ++sid) {
        out.set_dim(swin->at(sid), v.dim_at(swin->at(sid).plus(i)));
    }
    for (int sid = 0; sid < swin->size(); ++sid) {
        const MultiIndex n = swin->at(sid);
        const MultiIndex up = n.plus(i);
        for (int c = 0; c < v.arity(); ++c) {
            if (swin->contains(n.plus(c))) out.set_incl(n, c, v.incl_mat(up, c));
            for (int j = 1; j < n.c[static_cast<size_t>(c)]; ++j) {
                out.set_trans(n, c, j, c == i ? v.trans_mat(up, i, j + 1) : v.trans_mat(up, c, j));
            }
        }
    }
    return out;
}

/* The natural map V -> SV, degreewise the action of raise_first.  Indexed by
 * the shifted window (sources n with n+e_i still inside V's window). */
template <class F>
DegreewiseMap<F> epsilon(const TruncatedModule<F>& v, int i) {
    if (v.window()->cap() < 1) throw InputError("epsilon needs window cap >= 1");
    if (i < 0 || i >= v.arity()) throw InputError("epsilon: coordinate out of range");
    DegreewiseMap<F> out{make_window(v.arity(), v.window()->cap() - 1), {}};
    out.mats.reserve(static_cast<size_t>(out.win->size()));
    for (int sid = 0; sid < out.win->size(); ++sid) {
        out.mats.push_back(v.act(raise_first(out.win->at(sid), i)));
    }
    return out;
}

/* Numerical naturality of epsilon: commutation with every stored generator
 * of the shifted window.  Empty result means natural. */
template <class F>
std::vector<std::string> epsilon_naturality(const TruncatedModule<F>& v, int i) {
    const F& f = v.field();
    auto sv = shift(v, i);
    auto eps = epsilon(v, i);
    const WindowPtr& swin = eps.win;
    std::vector<std::string> bad;
    auto mismatch = [&](const Mat<F>& a, const Mat<F>& b, const std::string& what) {
        if (a.rows != b.rows || a.cols != b.cols) {
            bad.push_back(what + ": shape mismatch");
            return;
        }
        for (size_t t = 0; t < a.data.size(); ++t) {
            if (!f.eq(a.data[t], b.data[t])) {
                bad.push_back(what);
                return;
            }
        }
    };
    for (int sid = 0; sid < swin->size(); ++sid) {
        const MultiIndex n = swin->at(sid);
        const Mat<F>& en = eps.mats[static_cast<size_t>(sid)];
        for (int c = 0; c < v.arity(); ++c) {
            if (swin->contains(n.plus(c))) {
                const Mat<F>& eu = eps.mats[static_cast<size_t>(swin->id(n.plus(c)))];
                mismatch(mat_mul(f, eu, v.incl_mat(n, c)), mat_mul(f, sv.incl_mat(n, c), en),
                         "epsilon does not commute with inclusion " + std::to_string(c + 1) +
                             " at " + n.str());
            }
            for (int j = 1; j < n.c[static_cast<size_t>(c)]; ++j) {
                mismatch(mat_mul(f, en, v.trans_mat(n, c, j)), mat_mul(f, sv.trans_mat(n, c, j), en),
                         "epsilon does not commute with s_{" + std::to_string(c + 1) + "," +
                             std::to_string(j) + "} at " + n.str());
            }
        }
    }
    return bad;
}

/*
 * The four-term sequence 0 -> K_iV -> V -> SV -> D_iV -> 0 on window N-1:
 * K_iV is the degreewise kernel of epsilon with the induced action (closure
 * is naturality, asserted numerically by submodule), D_iV the degreewise
 * cokernel with projection and section retained.
 */
template <class F>
struct FourTermData {
    int coord;
    TruncatedModule<F> mid;                 // V restricted to window N-1
    TruncatedModule<F> sigma;               // SV
    DegreewiseMap<F> eps;                   // mid -> sigma
    std::vector<RrefBasis<F>> ker_bases;    // ker(eps) inside mid, per degree
    TruncatedModule<F> k;                   // kernel module
    QuotientModuleData<F> d;                // cokernel module with proj/sec
};

template <class F>
FourTermData<F> kd_functors(const TruncatedModule<F>& v, int i) {
    const F& f = v.field();
    auto mid = truncate_module(v, v.window()->cap() - 1);
    auto sigma = shift(v, i);
    auto eps = epsilon(v, i);
    const WindowPtr& swin = eps.win;
    std::vector<RrefBasis<F>> ker;
    std::vector<RrefBasis<F>> im;
    ker.reserve(static_cast<size_t>(swin->size()));
    im.reserve(static_cast<size_t>(swin->size()));
    for (int sid = 0; sid < swin->size(); ++sid) {
        const Mat<F>& e = eps.mats[static_cast<size_t>(sid)];
        auto rr = rref_rank_kernel(f, e, true);
        RrefBasis<F> kb(f, e.cols);
        for (int t = 0; t < rr.kernel.rows; ++t) {
            kb.insert(std::vector<typename F::Elem>(
                rr.kernel.data.begin() + static_cast<std::ptrdiff_t>(t) * e.cols,
                rr.kernel.data.begin() + static_cast<std::ptrdiff_t>(t + 1) * e.cols));
        }
        ker.push_back(std::move(kb));
        RrefBasis<F> ib(f, e.rows);
        for (int c = 0; c < e.cols; ++c) ib.insert(e.col(c));
        im.push_back(std::move(ib));
    }
    auto k = submodule(mid, ker);
    auto d = quotient_module(sigma, im);
    return FourTermData<F>{i,          std::move(mid), std::move(sigma), std::move(eps),
                           std::move(ker), std::move(k),  std::move(d)};
}

/* Degreewise rank-exactness of the four-term sequence.  Empty means exact. */
template <class F>
std::vector<std::string> four_term_check(const FourTermData<F>& ft) {
    const F& f = ft.mid.field();
    const WindowPtr& swin = ft.sigma.window();
    std::vector<std::string> bad;
    for (int sid = 0; sid < swin->size(); ++sid) {
        const MultiIndex n = swin->at(sid);
        const int dk = ft.k.dim_at(sid);
        const int dv = ft.mid.dim_at(sid);
        const int ds = ft.sigma.dim_at(sid);
        const int dd = ft.d.mod.dim_at(sid);
        if (dk + ds != dv + dd) {
            bad.push_back("alternating dimension sum violated at " + n.str());
        }
        const int r = mat_rank(f, ft.eps.mats[static_cast<size_t>(sid)]);
        if (dk != dv - r) bad.push_back("kernel dimension mismatch at " + n.str());
        if (dd != ds - r) bad.push_back("cokernel dimension mismatch at " + n.str());
    }
    return bad;
}

/* Direct sums over all coordinates: SV = +S_iV, KV = +K_iV, DV = +D_iV,
 * sitting in 0 -> KV -> V^m -> SV -> DV -> 0 on window N-1. */
template <class F>
struct BoldData {
    TruncatedModule<F> sigma;
    TruncatedModule<F> k;
    TruncatedModule<F> d;
};

template <class F>
BoldData<F> bold_functors(const TruncatedModule<F>& v) {
    auto first = kd_functors(v, 0);
    BoldData<F> out{std::move(first.sigma), std::move(first.k), std::move(first.d.mod)};
    for (int i = 1; i < v.arity(); ++i) {
        auto ft = kd_functors(v, i);
        out.sigma = direct_sum(out.sigma, ft.sigma);
        out.k = direct_sum(out.k, ft.k);
        out.d = direct_sum(out.d, ft.d.mod);
    }
    return out;
}

/*
 * Left derived functors of D_i from a certified free resolution on the
 * window: apply D_i to every cover (for a free module the image of epsilon
 * is spanned by unit vectors, one per shifted basis label), transport the
 * differentials through projection and section, and read off degreewise
 * homology of the resulting complex.  Returns dims of L_p for p <= p_max on
 * window N-1.
 */
template <class F>
HomologyTable derived_D(const TruncatedModule<F>& v, int i, int p_max, EngineOptions opt = {},
                        std::int64_t cell_budget = 400'000'000) {
    if (p_max < 1) throw InputError("derived_D: p_max must be >= 1");
    if (v.window()->cap() < 1) throw InputError("derived_D needs window cap >= 1");
    if (i < 0 || i >= v.arity()) throw InputError("derived_D: coordinate out of range");
    const F& f = v.field();
    const WindowPtr& win = v.window();
    const int levels = p_max + 2;
    opt.max_level = p_max + 1;
    ResolutionEngine<F> eng(v, opt);
    eng.run();
    auto res = eng.materialize(levels, cell_budget);
    WindowPtr swin = make_window(v.arity(), win->cap() - 1);
    // cokernel projections of epsilon on each free cover, per shifted degree
    std::vector<std::vector<QuotientMaps<F>>> qm(static_cast<size_t>(levels));
    for (int l = 0; l < levels; ++l) {
        const auto& cover = res.covers[static_cast<size_t>(l)];
        qm[static_cast<size_t>(l)].reserve(static_cast<size_t>(swin->size()));
        for (int sid = 0; sid < swin->size(); ++sid) {
            const MultiIndex n = swin->at(sid);
            const MultiIndex up = n.plus(i);
            const int upid = win->id(up);
            RrefBasis<F> im(f, cover.mod.dim_at(upid));
            const MorphismTuple w = raise_first(n, i);
            const auto& labels = cover.basis[static_cast<size_t>(win->id(n))];
            for (const auto& [g, mor] : labels) {
                std::vector<typename F::Elem> unit(static_cast<size_t>(cover.mod.dim_at(upid)),
                                                   f.zero());
                unit[static_cast<size_t>(cover.basis_index(upid, g, compose(w, mor)))] = f.one();
                im.insert(std::move(unit));
            }
            qm[static_cast<size_t>(l)].push_back(quotient_with_section(f, im));
        }
    }
    HomologyTable out;
    out.I = p_max;
    out.N = swin->cap();
    for (int sid = 0; sid < swin->size(); ++sid) {
        const MultiIndex n = swin->at(sid);
        const int upid = win->id(n.plus(i));
        std::vector<int> rank_d(static_cast<size_t>(levels), 0);
        for (int l = 1; l < levels; ++l) {
            const auto& pm = qm[static_cast<size_t>(l - 1)][static_cast<size_t>(sid)];
            const auto& sm = qm[static_cast<size_t>(l)][static_cast<size_t>(sid)];
            const Mat<F> dd =
                mat_mul(f, pm.proj, mat_mul(f, res.diff[static_cast<size_t>(l)][static_cast<size_t>(upid)], sm.sec));
            rank_d[static_cast<size_t>(l)] = mat_rank(f, dd);
        }
        for (int p = 0; p <= p_max; ++p) {
            const int dim_p = qm[static_cast<size_t>(p)][static_cast<size_t>(sid)].proj.rows;
            const int h = dim_p - (p >= 1 ? rank_d[static_cast<size_t>(p)] : 0) -
                          rank_d[static_cast<size_t>(p + 1)];
            out.set(p, n, h);
        }
    }
    out.finalize();
    return out;
}

/*
 * Freeze the listed coordinates (ascending) at the multidegree x; the result
 * is a module of arity m - |frozen| on window cap N - |x|, indexed by the
 * remaining coordinates in their original order.
 */
template <class F>
TruncatedModule<F> restrict_coords(const TruncatedModule<F>& v, const std::vector<int>& frozen,
                                   const MultiIndex& x) {
    const int m = v.arity();
    if (frozen.empty()) throw InputError("restriction must freeze at least one coordinate");
    if (static_cast<int>(frozen.size()) >= m) {
        throw InputError("restriction must leave at least one coordinate");
    }
    if (static_cast<int>(frozen.size()) != x.arity()) {
        throw InputError("restriction: one frozen value per frozen coordinate");
    }
    for (size_t t = 0; t < frozen.size(); ++t) {
        if (frozen[t] < 0 || frozen[t] >= m) throw InputError("restriction: coordinate out of range");
        if (t > 0 && frozen[t] <= frozen[t - 1]) {
            throw InputError("restriction: frozen coordinates must be strictly ascending");
        }
        if (x.c[t] < 0) throw InputError("restriction: frozen values must be >= 0");
    }
    if (x.total() > v.window()->cap()) throw InputError("restriction: frozen degree exceeds window");
    std::vector<int> kept;
    for (int c = 0; c < m; ++c) {
        if (std::find(frozen.begin(), frozen.end(), c) == frozen.end()) kept.push_back(c);
    }
    WindowPtr rwin = make_window(static_cast<int>(kept.size()), v.window()->cap() - x.total());
    auto embed = [&](const MultiIndex& y) {
        std::vector<int> full(static_cast<size_t>(m), 0);
        for (size_t t = 0; t < frozen.size(); ++t) full[static_cast<size_t>(frozen[t])] = x.c[t];
        for (size_t t = 0; t < kept.size(); ++t) full[static_cast<size_t>(kept[t])] = y.c[t];
        return MultiIndex(std::move(full));
    };
    TruncatedModule<F> out(rwin, v.field());
    for (int rid = 0; rid < rwin->size(); ++rid) {
        out.set_dim(rwin->at(rid), v.dim_at(embed(rwin->at(rid))));
    }
    for (int rid = 0; rid < rwin->size(); ++rid) {
        const MultiIndex y = rwin->at(rid);
        const MultiIndex full = embed(y);
        for (size_t t = 0; t < kept.size(); ++t) {
            const int c = static_cast<int>(t);
            const int oc = kept[t];
            if (rwin->contains(y.plus(c))) out.set_incl(y, c, v.incl_mat(full, oc));
            for (int j = 1; j < y.c[t]; ++j) out.set_trans(y, c, j, v.trans_mat(full, oc, j));
        }
    }
    return out;
}

template <class F>
TruncatedModule<F> restrict_coord(const TruncatedModule<F>& v, int i, int x) {
    return restrict_coords(v, std::vector<int>{i}, MultiIndex(std::vector<int>{x}));
}

/* Partition of the coordinates into a horizontal and a vertical block. */
struct SplitSpec {
    std::vector<int> hor;
    std::vector<int> ver;
};

inline SplitSpec coordinate_split(int m, std::vector<int> hor) {
    std::sort(hor.begin(), hor.end());
    if (hor.empty()) throw InputError("split: horizontal block must be nonempty");
    for (size_t t = 0; t < hor.size(); ++t) {
        if (hor[t] < 0 || hor[t] >= m) throw InputError("split: coordinate out of range");
        if (t > 0 && hor[t] == hor[t - 1]) throw InputError("split: repeated coordinate");
    }
    SplitSpec s{std::move(hor), {}};
    for (int c = 0; c < m; ++c) {
        if (std::find(s.hor.begin(), s.hor.end(), c) == s.hor.end()) s.ver.push_back(c);
    }
    if (s.ver.empty()) throw InputError("split: vertical block must be nonempty");
    return s;
}

enum class Side { Hor, Ver };

inline const std::vector<int>& side_coords(const SplitSpec& s, Side side) {
    return side == Side::Hor ? s.hor : s.ver;
}

/* The span of all images from degrees strictly lower in the side's
 * coordinates, per degree. */
template <class F>
std::vector<RrefBasis<F>> side_span_bases(const TruncatedModule<F>& v, const SplitSpec& s,
                                          Side side) {
    const WindowPtr& win = v.window();
    std::vector<RrefBasis<F>> out;
    out.reserve(static_cast<size_t>(win->size()));
    for (int id = 0; id < win->size(); ++id) {
        out.push_back(lower_span(v, win->at(id), side_coords(s, side)));
    }
    return out;
}

/* One-sided coinvariants: quotient by the side's span, with induced action
 * (a full module again; the other side's structure survives). */
template <class F>
QuotientModuleData<F> split_h0(const TruncatedModule<F>& v, const SplitSpec& s, Side side) {
    if (static_cast<int>(s.hor.size() + s.ver.size()) != v.arity()) {
        throw InputError("split does not cover the module's coordinates");
    }
    return quotient_module(v, side_span_bases(v, s, side));
}

/* Degreewise subspace identity: the span of all strictly-lower images is the
 * sum of the two one-sided spans.  Empty result means equality everywhere. */
template <class F>
std::vector<std::string> split_span_check(const TruncatedModule<F>& v, const SplitSpec& s) {
    const WindowPtr& win = v.window();
    std::vector<std::string> bad;
    for (int id = 0; id < win->size(); ++id) {
        const MultiIndex n = win->at(id);
        auto join = lower_span(v, n, s.hor);
        const auto ver = lower_span(v, n, s.ver);
        for (const auto& row : ver.rows()) join.insert(row);
        const auto full = lower_span(v, n);
        if (!(join.rank() == full.rank() && join.rows() == full.rows())) {
            bad.push_back("one-sided spans do not add up to the full lower span at " + n.str());
        }
    }
    return bad;
}

/* dim H0 taken against one side's span only, per degree. */
template <class F>
std::vector<int> side_h0_dims(const TruncatedModule<F>& v, const SplitSpec& s, Side side) {
    const WindowPtr& win = v.window();
    std::vector<int> out(static_cast<size_t>(win->size()), 0);
    for (int id = 0; id < win->size(); ++id) {
        out[static_cast<size_t>(id)] =
            v.dim_at(id) - lower_span(v, win->at(id), side_coords(s, side)).rank();
    }
    return out;
}

/* Composition identity for the one-sided coinvariants: both compositions
 * give the full coinvariants, degree by degree.  Empty means verified. */
template <class F>
std::vector<std::string> split_h0_compose_check(const TruncatedModule<F>& v, const SplitSpec& s) {
    const auto full = h0_dims(v);
    const auto hv = side_h0_dims(split_h0(v, s, Side::Hor).mod, s, Side::Ver);
    const auto vh = side_h0_dims(split_h0(v, s, Side::Ver).mod, s, Side::Hor);
    std::vector<std::string> bad;
    for (int id = 0; id < v.window()->size(); ++id) {
        const auto t = static_cast<size_t>(id);
        if (hv[t] != full[t] || vh[t] != full[t]) {
            bad.push_back("one-sided coinvariant compositions disagree with H0 at " +
                          v.window()->at(id).str());
        }
    }
    return bad;
}

/* Multigraded table of one-sided homology, assembled slice by slice. */
struct SliceHomologyTable {
    int q_max = 0;
    WindowPtr win;                       // the full window of the input module
    std::vector<std::vector<int>> dims;  // [q][degree id]
};

/*
 * One-sided homology via restriction: H_q of the vertical side at degree
 * (x, y) is H_q of the module with the horizontal coordinates frozen at x,
 * computed by the resolution engine slice by slice (and symmetrically).
 */
template <class F>
SliceHomologyTable hor_ver_homology(const TruncatedModule<F>& v, const SplitSpec& s, Side side,
                                    int q_max, EngineOptions opt = {}) {
    if (static_cast<int>(s.hor.size() + s.ver.size()) != v.arity()) {
        throw InputError("split does not cover the module's coordinates");
    }
    const WindowPtr& win = v.window();
    const std::vector<int>& frozen = side == Side::Ver ? s.hor : s.ver;
    const std::vector<int>& kept = side == Side::Ver ? s.ver : s.hor;
    SliceHomologyTable out{q_max, win,
                           std::vector<std::vector<int>>(
                               static_cast<size_t>(q_max) + 1,
                               std::vector<int>(static_cast<size_t>(win->size()), 0))};
    WindowPtr fwin = make_window(static_cast<int>(frozen.size()), win->cap());
    for (int fid = 0; fid < fwin->size(); ++fid) {
        const MultiIndex x = fwin->at(fid);
        auto rest = restrict_coords(v, frozen, x);
        auto tab = homology_table(rest, q_max, opt);
        const WindowPtr& rwin = rest.window();
        for (int rid = 0; rid < rwin->size(); ++rid) {
            const MultiIndex y = rwin->at(rid);
            std::vector<int> full(static_cast<size_t>(v.arity()), 0);
            for (size_t t = 0; t < frozen.size(); ++t) {
                full[static_cast<size_t>(frozen[t])] = x.c[t];
            }
            for (size_t t = 0; t < kept.size(); ++t) full[static_cast<size_t>(kept[t])] = y.c[t];
            const int id = win->id(MultiIndex(std::move(full)));
            for (int q = 0; q <= q_max; ++q) {
                out.dims[static_cast<size_t>(q)][static_cast<size_t>(id)] = tab.at(q, y);
            }
        }
    }
    return out;
}

/*
 * The shift-of-coinvariants identities along coordinate i, checked on the
 * window: (a) the lower span of V at n+e_i equals the lower span of SV at n
 * plus the image of epsilon, as subspaces of V_{n+e_i}; (b) the coinvariants
 * of D_iV at n match the coinvariants of V at n+e_i in dimension.  Empty
 * result means both hold at every degree.
 */
template <class F>
std::vector<std::string> church_lemma_check(const TruncatedModule<F>& v, const FourTermData<F>& ft) {
    const WindowPtr& swin = ft.sigma.window();
    const auto h0_v = h0_dims(v);
    const auto h0_d = h0_dims(ft.d.mod);
    std::vector<std::string> bad;
    for (int sid = 0; sid < swin->size(); ++sid) {
        const MultiIndex n = swin->at(sid);
        const MultiIndex up = n.plus(ft.coord);
        const auto lhs = lower_span(v, up);
        auto rhs = lower_span(ft.sigma, n);
        const Mat<F>& e = ft.eps.mats[static_cast<size_t>(sid)];
        for (int c = 0; c < e.cols; ++c) rhs.insert(e.col(c));
        if (!(lhs.rank() == rhs.rank() && lhs.rows() == rhs.rows())) {
            bad.push_back("shifted lower span differs from shift-plus-image at " + n.str());
        }
        if (h0_d[static_cast<size_t>(sid)] !=
            h0_v[static_cast<size_t>(v.window()->id(up))]) {
            bad.push_back("coinvariants of the cokernel do not shift at " + n.str());
        }
    }
    return bad;
}

template <class F>
std::vector<std::string> church_lemma_check(const TruncatedModule<F>& v, int i) {
    return church_lemma_check(v, kd_functors(v, i));
}

/*
 * Dimension inequalities forced by the long exact sequence that connects
 * H_*(V) at n+e_i, H_*(D_iV) at n, and H_*(K_iV) at n:
 *   dim H_p(D_iV)_n <= dim H_p(V)_{n+e_i} + dim H_{p-2}(K_iV)_n, and
 *   dim H_1(D_iV)_n <= dim H_1(V)_{n+e_i}.
 * Empty result means all inequalities hold up to index max_i.
 */
template <class F>
std::vector<std::string> les_check(const TruncatedModule<F>& v, const FourTermData<F>& ft,
                                   int max_i, EngineOptions opt = {}) {
    const auto tab_v = homology_table(v, max_i, opt);
    const auto tab_d = homology_table(ft.d.mod, max_i, opt);
    const auto tab_k = homology_table(ft.k, max_i, opt);
    const WindowPtr& swin = ft.sigma.window();
    std::vector<std::string> bad;
    for (int sid = 0; sid < swin->size(); ++sid) {
        const MultiIndex n = swin->at(sid);
        const MultiIndex up = n.plus(ft.coord);
        for (int p = 0; p <= max_i; ++p) {
            const int lhs = tab_d.at(p, n);
            const int bound = tab_v.at(p, up) + (p >= 2 ? tab_k.at(p - 2, n) : 0);
            if (lhs > bound) {
                bad.push_back("middle-segment bound fails for H_" + std::to_string(p) + " at " +
                              n.str());
            }
        }
        if (max_i >= 1 && tab_d.at(1, n) > tab_v.at(1, up)) {
            bad.push_back("tail surjectivity bound fails for H_1 at " + n.str());
        }
    }
    return bad;
}

}  // namespace fimreg
