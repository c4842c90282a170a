#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fimreg/field.hpp>
#include <fimreg/matrix.hpp>
#include <fimreg/rng.hpp>

using namespace fimreg;

namespace {

template <class F>
Mat<F> random_mat(const F& f, DetRng& rng, int rows, int cols, int spread) {
    Mat<F> a(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            a.at(r, c) = f.from_int(static_cast<std::int64_t>(rng.below(
                             static_cast<std::uint64_t>(2 * spread + 1))) -
                         spread);
        }
    }
    return a;
}

/* rank(A) + dim ker(A) = cols, A * ker^T = 0, rref has unit pivots with
 * cleared columns.  The whole exactness machinery reduces to these facts. */
template <class F>
void rank_nullity_roundtrip(const F& f, std::uint64_t seed) {
    DetRng rng(seed);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(6));
        const int cols = 1 + static_cast<int>(rng.below(6));
        Mat<F> a = random_mat(f, rng, rows, cols, 5);
        auto res = rref_rank_kernel(f, a, true);
        CHECK(res.rank <= std::min(rows, cols));
        CHECK(res.kernel.rows == cols - res.rank);
        // every kernel row is annihilated by a
        for (int kr = 0; kr < res.kernel.rows; ++kr) {
            auto prod = mat_vec(f, a, res.kernel.row_vec(kr));
            CHECK(is_zero_vec(f, prod));
        }
        // pivot structure: pivot entries are 1 and alone in their column
        for (size_t s = 0; s < res.pivot_cols.size(); ++s) {
            const int c = res.pivot_cols[s];
            for (int r = 0; r < res.rref.rows; ++r) {
                const auto& x = res.rref.at(r, c);
                if (r == static_cast<int>(s)) {
                    CHECK(f.eq(x, f.one()));
                } else {
                    CHECK(f.is_zero(x));
                }
            }
        }
        CHECK(mat_rank(f, a) == res.rank);
        CHECK(mat_rank(f, transpose(a)) == res.rank);
    }
}

template <class F>
void span_and_quotient(const F& f, std::uint64_t seed) {
    DetRng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + static_cast<int>(rng.below(5));
        const int nvec = 1 + static_cast<int>(rng.below(4));
        RrefBasis<F> basis(f, dim);
        std::vector<std::vector<typename F::Elem>> vecs;
        for (int k = 0; k < nvec; ++k) {
            vecs.push_back(random_mat(f, rng, 1, dim, 4).row_vec(0));
            basis.insert(vecs.back());
        }
        for (const auto& v : vecs) {
            CHECK(basis.contains(v));
            // reduce is idempotent and lands on zero exactly for members
            CHECK(is_zero_vec(f, basis.reduce(v)));
            // coordinates reconstruct the vector inside the span
            auto coords = basis.coords_in_span(v);
            std::vector<typename F::Elem> back(static_cast<size_t>(dim), f.zero());
            const auto& rows = basis.rows();
            for (size_t s = 0; s < rows.size(); ++s) {
                for (int c = 0; c < dim; ++c) {
                    back[static_cast<size_t>(c)] =
                        f.add(back[static_cast<size_t>(c)],
                              f.mul(coords[s], rows[s][static_cast<size_t>(c)]));
                }
            }
            CHECK(back == v);
        }
        // quotient with section: proj o sec = id on the quotient,
        // ker(proj) = span
        auto qm = quotient_with_section(f, basis);
        const int q = dim - basis.rank();
        CHECK(qm.proj.rows == q);
        CHECK(qm.sec.cols == q);
        auto ps = mat_mul(f, qm.proj, qm.sec);
        CHECK(ps == Mat<F>::identity(f, q));
        for (const auto& row : basis.rows()) {
            CHECK(is_zero_vec(f, mat_vec(f, qm.proj, row)));
        }
    }
}

}  // namespace

TEST_CASE("rank, kernel and rref over three fields") {
    rank_nullity_roundtrip(PrimeField(101), 11);
    rank_nullity_roundtrip(PrimeField(2), 12);
    rank_nullity_roundtrip(RationalField(), 13);
}

TEST_CASE("incremental span bases and quotients over three fields") {
    span_and_quotient(PrimeField(101), 21);
    span_and_quotient(PrimeField(2), 22);
    span_and_quotient(RationalField(), 23);
}

TEST_CASE("matrix multiplication agrees between the chunked and generic paths") {
    // PrimeField uses delayed-reduction accumulation; the rationals path is
    // the generic one.  Cross-check through an exact integer lift.
    PrimeField fp(101);
    RationalField fq;
    DetRng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        Mat<PrimeField> ap(n, n), bp(n, n);
        Mat<RationalField> aq(n, n), bq(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                const auto x = static_cast<std::int64_t>(rng.below(101));
                const auto y = static_cast<std::int64_t>(rng.below(101));
                ap.at(r, c) = fp.from_int(x);
                bp.at(r, c) = fp.from_int(y);
                aq.at(r, c) = fq.from_int(x);
                bq.at(r, c) = fq.from_int(y);
            }
        }
        auto cp = mat_mul(fp, ap, bp);
        auto cq = mat_mul(fq, aq, bq);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                CHECK(cp.at(r, c) == fp.from_rational(cq.at(r, c)));
            }
        }
    }
}

TEST_CASE("field axioms and inverses") {
    PrimeField f(101);
    for (std::uint32_t x = 1; x < 101; ++x) {
        CHECK(f.eq(f.mul(x, f.inv(x)), f.one()));
    }
    CHECK_THROWS_AS(f.inv(0), InputError);
    CHECK_THROWS_AS(PrimeField(4), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);

    RationalField q;
    auto half = q.from_rational(parse_rational("1/2"));
    CHECK(q.eq(q.add(half, half), q.one()));
    CHECK(q.eq(q.mul(half, q.from_int(2)), q.one()));
    CHECK(rational_str(q.inv(q.from_rational(parse_rational("-3/7")))) == "-7/3");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("field configuration parsing") {
    CHECK(FieldConfig::parse("p=7").p == 7);
    CHECK(FieldConfig::parse("rationals").kind == FieldConfig::Kind::Rationals);
    CHECK(FieldConfig::parse("p=101").str() == "p=101");
    CHECK_THROWS_AS(FieldConfig::parse("p=6"), InputError);
    CHECK_THROWS_AS(FieldConfig::parse("reals"), InputError);
}
