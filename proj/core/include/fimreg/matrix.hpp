#pragma once

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "fimreg/errors.hpp"
#include "fimreg/field.hpp"

namespace fimreg {

/*
 * Dense row-major matrix over a field F.  F supplies the element type and
 * the arithmetic (see field.hpp); vectors are columns, so a linear map
 * V_a -> V_b is a (dim_b x dim_a) matrix acting by mat_vec.
 */
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    int rows = 0;
    int cols = 0;
    std::vector<Elem> data;  // Elem default-constructs to zero for both fields

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Elem& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    std::vector<Elem> col(int c) const {
        std::vector<Elem> v(static_cast<size_t>(rows));
        for (int r = 0; r < rows; ++r) v[static_cast<size_t>(r)] = at(r, c);
        return v;
    }
    void set_col(int c, const std::vector<Elem>& v) {
        for (int r = 0; r < rows; ++r) at(r, c) = v[static_cast<size_t>(r)];
    }
    std::vector<Elem> row_vec(int r) const {
        return std::vector<Elem>(data.begin() + static_cast<size_t>(r) * cols,
                                 data.begin() + static_cast<size_t>(r + 1) * cols);
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }

    static Mat identity(const F& f, int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
};

template <class F>
Mat<F> transpose(const Mat<F>& a) {
    Mat<F> t(a.cols, a.rows);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
    }
    return t;
}

/*
 * c = a * b.  Over a prime field the dot products accumulate unreduced
 * 64-bit products and reduce once per axpy_chunk() terms, which keeps the
 * modulo out of the inner loop entirely for small p.
 */
template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.rows) throw InternalError("mat_mul shape mismatch");
    Mat<F> c(a.rows, b.cols);
    if constexpr (std::is_same_v<F, PrimeField>) {
        const std::uint64_t chunk = f.axpy_chunk();
        for (int i = 0; i < a.rows; ++i) {
            for (int j = 0; j < b.cols; ++j) {
                std::uint64_t acc = 0;
                std::uint64_t pending = 0;
                for (int k = 0; k < a.cols; ++k) {
                    acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
                    if (++pending >= chunk - 1) {
                        acc = f.reduce64(acc);
                        pending = 0;
                    }
                }
                c.at(i, j) = f.reduce64(acc);
            }
        }
    } else {
        for (int i = 0; i < a.rows; ++i) {
            for (int j = 0; j < b.cols; ++j) {
                auto acc = f.zero();
                for (int k = 0; k < a.cols; ++k) {
                    acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
                }
                c.at(i, j) = std::move(acc);
            }
        }
    }
    return c;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const Mat<F>& a,
                                      const std::vector<typename F::Elem>& v) {
    if (a.cols != static_cast<int>(v.size())) throw InternalError("mat_vec shape mismatch");
    std::vector<typename F::Elem> w(static_cast<size_t>(a.rows), f.zero());
    if constexpr (std::is_same_v<F, PrimeField>) {
        const std::uint64_t chunk = f.axpy_chunk();
        for (int i = 0; i < a.rows; ++i) {
            std::uint64_t acc = 0;
            std::uint64_t pending = 0;
            for (int k = 0; k < a.cols; ++k) {
                acc += static_cast<std::uint64_t>(a.at(i, k)) * v[static_cast<size_t>(k)];
                if (++pending >= chunk - 1) {
                    acc = f.reduce64(acc);
                    pending = 0;
                }
            }
            w[static_cast<size_t>(i)] = f.reduce64(acc);
        }
    } else {
        for (int i = 0; i < a.rows; ++i) {
            auto acc = f.zero();
            for (int k = 0; k < a.cols; ++k) {
                acc = f.add(acc, f.mul(a.at(i, k), v[static_cast<size_t>(k)]));
            }
            w[static_cast<size_t>(i)] = std::move(acc);
        }
    }
    return w;
}

template <class F>
bool is_zero_vec(const F& f, const std::vector<typename F::Elem>& v) {
    for (const auto& x : v) {
        if (!f.is_zero(x)) return false;
    }
    return true;
}

/*
 * Incrementally maintained reduced row echelon basis of a subspace of F^dim.
 * Rows are kept fully reduced with pivot entries 1 and pivot columns
 * ascending, so two subspaces are equal iff their bases compare equal —
 * the canonical form every subspace-equality check in the engine relies on.
 */
template <class F>
class RrefBasis {
public:
    using Elem = typename F::Elem;

    RrefBasis(const F& f, int dim) : f_(&f), dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /* Residual of v after eliminating every pivot; zero iff v is in the span. */
    std::vector<Elem> reduce(std::vector<Elem> v) const {
        if (static_cast<int>(v.size()) != dim_) throw InternalError("RrefBasis::reduce dim mismatch");
        if constexpr (std::is_same_v<F, PrimeField>) {
            reduce_prime(v);
        } else {
            for (size_t s = 0; s < rows_.size(); ++s) {
                const int p = pivots_[s];
                if (f_->is_zero(v[static_cast<size_t>(p)])) continue;
                const Elem c = v[static_cast<size_t>(p)];
                axpy_generic(f_->neg(c), rows_[s], v);
            }
        }
        return v;
    }

    bool contains(const std::vector<Elem>& v) const { return is_zero_vec(*f_, reduce(v)); }

    /* True iff v enlarged the span. */
    bool insert(std::vector<Elem> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int t = 0; t < dim_; ++t) {
            if (!f_->is_zero(v[static_cast<size_t>(t)])) {
                p = t;
                break;
            }
        }
        if (p < 0) return false;
        const Elem scale = f_->inv(v[static_cast<size_t>(p)]);
        for (int t = p; t < dim_; ++t) v[static_cast<size_t>(t)] = f_->mul(scale, v[static_cast<size_t>(t)]);
        // eliminate the new pivot column from older rows to stay fully reduced
        for (size_t s = 0; s < rows_.size(); ++s) {
            const Elem c = rows_[s][static_cast<size_t>(p)];
            if (f_->is_zero(c)) continue;
            axpy_generic(f_->neg(c), v, rows_[s]);
        }
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    /* Coordinates c with sum_s c[s]*row[s] == v; throws if v is outside. */
    std::vector<Elem> coords_in_span(const std::vector<Elem>& v) const {
        std::vector<Elem> c(rows_.size(), f_->zero());
        std::vector<Elem> rem = v;
        for (size_t s = 0; s < rows_.size(); ++s) {
            c[s] = rem[static_cast<size_t>(pivots_[s])];
            if (!f_->is_zero(c[s])) axpy_generic(f_->neg(c[s]), rows_[s], rem);
        }
        if (!is_zero_vec(*f_, rem)) throw InternalError("coords_in_span: vector outside span");
        return c;
    }

    Mat<F> to_mat() const {
        Mat<F> m(rank(), dim_);
        for (int s = 0; s < rank(); ++s) {
            for (int t = 0; t < dim_; ++t) m.at(s, t) = rows_[static_cast<size_t>(s)][static_cast<size_t>(t)];
        }
        return m;
    }

private:
    void axpy_generic(const Elem& c, const std::vector<Elem>& x, std::vector<Elem>& y) const {
        for (int t = 0; t < dim_; ++t) {
            y[static_cast<size_t>(t)] = f_->add(y[static_cast<size_t>(t)], f_->mul(c, x[static_cast<size_t>(t)]));
        }
    }

    /* Eliminates against all rows with one 64-bit accumulator per entry,
     * reducing only when another axpy could overflow. */
    void reduce_prime(std::vector<Elem>& v) const {
        if constexpr (std::is_same_v<F, PrimeField>) {
            if (rows_.empty()) return;
            const std::uint64_t chunk = f_->axpy_chunk();
            std::vector<std::uint64_t> acc(v.begin(), v.end());
            std::uint64_t pending = 0;
            for (size_t s = 0; s < rows_.size(); ++s) {
                const int p = pivots_[s];
                const Elem c = f_->reduce64(acc[static_cast<size_t>(p)]);
                acc[static_cast<size_t>(p)] = c;
                if (c == 0) continue;
                const Elem negc = f_->neg(c);
                const auto& row = rows_[s];
                for (int t = p; t < dim_; ++t) {
                    acc[static_cast<size_t>(t)] += static_cast<std::uint64_t>(negc) * row[static_cast<size_t>(t)];
                }
                if (++pending + 1 >= chunk) {
                    for (auto& x : acc) x = f_->reduce64(x);
                    pending = 0;
                }
            }
            for (int t = 0; t < dim_; ++t) v[static_cast<size_t>(t)] = f_->reduce64(acc[static_cast<size_t>(t)]);
        }
    }

    const F* f_;
    int dim_;
    std::vector<std::vector<Elem>> rows_;  // pivot-ascending, fully reduced
    std::vector<int> pivots_;
};

template <class F>
struct RrefResult {
    int rank = 0;
    Mat<F> rref;
    std::vector<int> pivot_cols;
    /* Kernel basis as rows, one per free column in ascending order:
     * v[free] = 1, v[pivot_s] = -rref[s][free].  Canonical. */
    Mat<F> kernel;
};

template <class F>
RrefResult<F> rref_rank_kernel(const F& f, Mat<F> a, bool want_kernel) {
    RrefResult<F> out;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int piv = -1;
        for (int i = r; i < a.rows; ++i) {
            if (!f.is_zero(a.at(i, c))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        }
        const auto scale = f.inv(a.at(r, c));
        for (int j = c; j < a.cols; ++j) a.at(r, j) = f.mul(scale, a.at(r, j));
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || f.is_zero(a.at(i, c))) continue;
            const auto coef = f.neg(a.at(i, c));
            for (int j = c; j < a.cols; ++j) {
                a.at(i, j) = f.add(a.at(i, j), f.mul(coef, a.at(r, j)));
            }
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    if (want_kernel) {
        const int nullity = a.cols - r;
        out.kernel = Mat<F>(nullity, a.cols);
        int s = 0;  // index into pivot_cols
        int krow = 0;
        for (int c = 0; c < a.cols; ++c) {
            if (s < r && out.pivot_cols[static_cast<size_t>(s)] == c) {
                ++s;
                continue;
            }
            out.kernel.at(krow, c) = f.one();
            for (int t = 0; t < r; ++t) {
                out.kernel.at(krow, out.pivot_cols[static_cast<size_t>(t)]) = f.neg(a.at(t, c));
            }
            ++krow;
        }
    }
    out.rref = std::move(a);
    return out;
}

template <class F>
int mat_rank(const F& f, Mat<F> a) {
    return rref_rank_kernel(f, std::move(a), false).rank;
}

/*
 * Smallest subspace containing the seed vectors and closed under the given
 * operators.  Only vectors that enlarged the span are re-expanded: if v is
 * already in the span of processed vectors, so is T(v).
 */
template <class F>
RrefBasis<F> span_closure(const F& f, int dim,
                          const std::vector<std::vector<typename F::Elem>>& seeds,
                          const std::vector<const Mat<F>*>& ops) {
    RrefBasis<F> basis(f, dim);
    std::vector<std::vector<typename F::Elem>> queue;
    for (const auto& s : seeds) {
        if (basis.insert(s)) queue.push_back(s);
    }
    while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (const Mat<F>* op : ops) {
            auto w = mat_vec(f, *op, v);
            if (basis.insert(w)) queue.push_back(std::move(w));
        }
    }
    return basis;
}

/*
 * Projection/section pair for F^dim / span(B), with B a canonical RREF
 * basis.  Coordinates of the quotient are the free columns q_0 < q_1 < ...:
 *   proj[t][q_t] = 1,  proj[t][pivot_s] = -B[s][q_t],  sec[q_t][t] = 1,
 * giving proj . sec = id exactly and proj . b = 0 for rows b of B.
 */
template <class F>
struct QuotientMaps {
    Mat<F> proj;  // q x dim
    Mat<F> sec;   // dim x q
    std::vector<int> free_cols;
};

template <class F>
QuotientMaps<F> quotient_with_section(const F& f, const RrefBasis<F>& sub) {
    const int dim = sub.dim();
    const int r = sub.rank();
    const int q = dim - r;
    QuotientMaps<F> out;
    out.proj = Mat<F>(q, dim);
    out.sec = Mat<F>(dim, q);
    const auto& pivots = sub.pivots();
    int s = 0;
    for (int c = 0; c < dim; ++c) {
        if (s < r && pivots[static_cast<size_t>(s)] == c) {
            ++s;
            continue;
        }
        out.free_cols.push_back(c);
    }
    for (int t = 0; t < q; ++t) {
        const int qt = out.free_cols[static_cast<size_t>(t)];
        out.proj.at(t, qt) = f.one();
        for (int u = 0; u < r; ++u) {
            out.proj.at(t, pivots[static_cast<size_t>(u)]) =
                f.neg(sub.rows()[static_cast<size_t>(u)][static_cast<size_t>(qt)]);
        }
        out.sec.at(qt, t) = f.one();
    }
    return out;
}

}  // namespace fimreg
