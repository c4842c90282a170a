#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fimreg/errors.hpp>
#include <fimreg/morphism.hpp>
#include <fimreg/multiindex.hpp>
#include <fimreg/window.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace fimreg;

TEST_CASE("degree enumeration is (total, lex) sorted and id/at round-trips") {
    auto degs = degrees_up_to(2, 4);
    CHECK(degs.size() == 15);  // C(4+2, 2)
    for (size_t k = 1; k < degs.size(); ++k) {
        const auto &a = degs[k - 1], &b = degs[k];
        const bool ordered =
            a.total() < b.total() || (a.total() == b.total() && a.c < b.c);
        CHECK(ordered);
    }
    auto win = make_window(2, 4);
    CHECK(win->size() == 15);
    for (int id = 0; id < win->size(); ++id) CHECK(win->id(win->at(id)) == id);
    CHECK_THROWS_AS(win->id(MultiIndex{5, 5}), InputError);
    CHECK_THROWS_AS(win->id(MultiIndex{1}), InputError);
}

TEST_CASE("multiindex order and arithmetic") {
    MultiIndex a{1, 2}, b{2, 2};
    CHECK(a.total() == 3);
    CHECK(leq(a, b));
    CHECK(!leq(b, a));
    CHECK(strictly_less(a, b));
    CHECK(!leq(MultiIndex{0, 3}, MultiIndex{2, 2}));  // incomparable
    CHECK(a.plus(0) == MultiIndex{2, 2});
    CHECK(a.plus(1, 2) == MultiIndex{1, 4});
    CHECK(a.str() == "(1,2)");
}

TEST_CASE("hom sizes count the enumerated morphisms") {
    // |Hom(a,b)| = prod_i b_i!/(b_i-a_i)!; enumeration must agree exactly.
    const std::vector<std::pair<MultiIndex, MultiIndex>> pairs = {
        {MultiIndex{0}, MultiIndex{3}},  {MultiIndex{1}, MultiIndex{3}},
        {MultiIndex{2}, MultiIndex{3}},  {MultiIndex{3}, MultiIndex{3}},
        {MultiIndex{1, 1}, MultiIndex{2, 2}},
        {MultiIndex{0, 2}, MultiIndex{1, 3}},
        {MultiIndex{1, 0, 1}, MultiIndex{2, 1, 2}},
    };
    for (const auto& [a, b] : pairs) {
        auto mors = enumerate_injections(a, b);
        CHECK(static_cast<std::int64_t>(mors.size()) == hom_size(a, b));
        // no duplicates, all with the right endpoints
        std::set<MorphismTuple> uniq(mors.begin(), mors.end());
        CHECK(uniq.size() == mors.size());
        for (const auto& f : mors) {
            CHECK(f.source() == a);
            CHECK(f.target() == b);
        }
        // basis order: strictly increasing in the lex order on images
        CHECK(std::is_sorted(mors.begin(), mors.end()));
    }
    CHECK(hom_size(MultiIndex{2}, MultiIndex{1}) == 0);
    CHECK(hom_size(MultiIndex{0, 3}, MultiIndex{2, 2}) == 0);
    CHECK(hom_size(MultiIndex{3}, MultiIndex{3}) == 6);
    CHECK_THROWS_AS(hom_size(MultiIndex{1}, MultiIndex{1, 1}), InputError);
}

TEST_CASE("composition is associative with identities") {
    const MultiIndex a{1, 0}, b{1, 1}, c{2, 2};
    auto fs = enumerate_injections(a, b);
    auto gs = enumerate_injections(b, c);
    auto hs = enumerate_injections(c, MultiIndex{2, 3});
    for (const auto& f : fs) {
        CHECK(compose(f, identity_morphism(a)) == f);
        CHECK(compose(identity_morphism(b), f) == f);
        for (const auto& g : gs) {
            auto gf = compose(g, f);
            CHECK(gf.source() == a);
            CHECK(gf.target() == c);
            for (const auto& h : hs) {
                CHECK(compose(h, gf) == compose(compose(h, g), f));
            }
        }
    }
}

TEST_CASE("canonical factorization replays to the original morphism") {
    // Every f factors as (permutation word) o (standard inclusions); the
    // replay applied to the source must reproduce f on the nose.
    const std::vector<std::pair<MultiIndex, MultiIndex>> pairs = {
        {MultiIndex{1}, MultiIndex{4}},
        {MultiIndex{2}, MultiIndex{4}},
        {MultiIndex{1, 1}, MultiIndex{2, 2}},
        {MultiIndex{0, 1}, MultiIndex{2, 3}},
    };
    for (const auto& [a, b] : pairs) {
        for (const auto& f : enumerate_injections(a, b)) {
            auto w = canonical_factorization(f);
            CHECK(replay_factorization(a, w) == f);
        }
    }
}

TEST_CASE("permutation words multiply back to the permutation") {
    // sigma = [2,3,1] is s_1 s_2 applied rightmost-first.
    CHECK(permutation_word({2, 3, 1}) == std::vector<int>{1, 2});
    CHECK(permutation_word({1, 2, 3}).empty());
    // composing the word (rightmost applied first) reproduces the permutation
    const std::vector<int> sigma{3, 1, 4, 2};
    auto w = permutation_word(sigma);
    Injection acc(4, 4, {1, 2, 3, 4});
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        CHECK(*it >= 1);
        CHECK(*it <= 3);
        acc = compose(adjacent_transposition(4, *it), acc);
    }
    CHECK(acc.img == sigma);
}

TEST_CASE("injection helpers") {
    auto inc = standard_inclusion(2, 4);
    CHECK(inc.img == std::vector<int>{1, 2});
    auto sh = shift_injection(2);
    CHECK(sh.img == std::vector<int>{2, 3});
    CHECK(sh.a == 2);
    CHECK(sh.b == 3);
    CHECK(standard_inclusion(3, 3).is_identity());
    CHECK_THROWS_AS(Injection(2, 1, {1, 2}), InputError);
    CHECK_THROWS_AS(Injection(2, 3, {1, 1}), InputError);
    CHECK_THROWS_AS(adjacent_transposition(3, 3), InputError);
}
