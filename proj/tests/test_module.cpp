#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fimreg/json_io.hpp>
#include <fimreg/module.hpp>
#include <fimreg/presentation.hpp>

using namespace fimreg;

namespace {

template <class F>
void free_module_functoriality(const F& f) {
    auto win = make_window(2, 4);
    auto fm = free_module(win, f, {MultiIndex{1, 1}});
    CHECK(fm.mod.validate().empty());
    const MultiIndex n{2, 2};
    CHECK(fm.mod.dim_at(n) == hom_size(MultiIndex{1, 1}, n));

    // H_0 is one copy of the ground field at the generator degree
    auto h0 = h0_dims(fm.mod);
    int total = 0;
    for (int x : h0) total += x;
    CHECK(total == 1);
    CHECK(h0[static_cast<size_t>(win->id(MultiIndex{1, 1}))] == 1);

    // act is a functor: act(g o f) = act(g) act(f)
    auto fs = enumerate_injections(MultiIndex{1, 0}, MultiIndex{1, 1});
    auto gs = enumerate_injections(MultiIndex{1, 1}, MultiIndex{2, 2});
    for (const auto& f1 : fs) {
        for (const auto& g1 : gs) {
            auto lhs = fm.mod.act(compose(g1, f1));
            auto rhs = mat_mul(f, fm.mod.act(g1), fm.mod.act(f1));
            CHECK(lhs == rhs);
        }
    }
}

}  // namespace

TEST_CASE("free modules act functorially over both backends") {
    free_module_functoriality(PrimeField(101));
    free_module_functoriality(RationalField());
}

TEST_CASE("direct sums add dimensions degreewise") {
    PrimeField f(101);
    auto win = make_window(1, 4);
    auto a = free_module(win, f, {MultiIndex{1}});
    auto b = free_module(win, f, {MultiIndex{2}});
    auto s = direct_sum(a.mod, b.mod);
    CHECK(s.validate().empty());
    for (int id = 0; id < win->size(); ++id) {
        CHECK(s.dim_at(id) == a.mod.dim_at(id) + b.mod.dim_at(id));
    }
}

TEST_CASE("random presentations are reproducible and well formed") {
    FieldConfig cfg = FieldConfig::parse("p=101");
    auto pres = random_presentation(2, 1, 2, 2, 2, 42, 4, cfg);
    CHECK(pres.gen_degree() == 1);
    CHECK(pres.rel_degree() == 2);
    pres.check();

    auto j = presentation_to_json(pres);
    const std::string s1 = j.dump(2);
    // round-trip through the file format is the identity
    auto pres2 = presentation_from_json(j);
    CHECK(presentation_to_json(pres2).dump(2) == s1);
    // same seed, same bytes
    auto presb = random_presentation(2, 1, 2, 2, 2, 42, 4, cfg);
    CHECK(presentation_to_json(presb).dump(2) == s1);

    PrimeField f(101);
    auto built = build_module(pres, f);
    CHECK(built.quotient.mod.validate().empty());
    CHECK(built.cover.mod.validate().empty());
    // quotient never exceeds the cover degreewise
    for (int id = 0; id < built.cover.mod.window()->size(); ++id) {
        CHECK(built.quotient.mod.dim_at(id) <= built.cover.mod.dim_at(id));
    }
}

TEST_CASE("presented modules validate over the rationals") {
    RationalField q;
    auto pres = random_presentation(1, 1, 2, 2, 1, 7, 5, FieldConfig::parse("rationals"));
    auto built = build_module(pres, q);
    CHECK(built.quotient.mod.validate().empty());
}

TEST_CASE("presentation parsing is strict") {
    auto pres = random_presentation(1, 1, 1, 1, 1, 3, 3, FieldConfig{});
    auto j = presentation_to_json(pres);
    SUBCASE("unknown key is named in the error") {
        j["extra"] = 1;
        CHECK_THROWS_WITH_AS(presentation_from_json(j),
                             doctest::Contains("extra"), InputError);
    }
    SUBCASE("missing key is an error") {
        j.erase("generators");
        CHECK_THROWS_AS(presentation_from_json(j), InputError);
    }
    SUBCASE("relation anchored below its term degrees is rejected") {
        auto bad = presentation_to_json(pres);
        bad["relations"][0]["degree"] = ordered_json::array({0});
        CHECK_THROWS_AS(presentation_from_json(bad).check(), InputError);
    }
}

TEST_CASE("degenerate random instances: d == r with one generator") {
    // The anchor constraint forces the single relation to sit on the single
    // generator's own degree, so the quotient is either free or zero.
    PrimeField f(101);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto pres = random_presentation(1, 2, 2, 1, 1, seed, 4, FieldConfig{});
        auto built = build_module(pres, f);
        auto h0 = h0_dims(built.quotient.mod);
        int total = 0;
        for (int x : h0) total += x;
        CHECK(total <= 1);
    }
}

TEST_CASE("random presentation argument validation") {
    CHECK_THROWS_AS(random_presentation(0, 1, 1, 1, 1, 1, 3, FieldConfig{}), InputError);
    CHECK_THROWS_AS(random_presentation(1, 5, 1, 1, 1, 1, 3, FieldConfig{}), InputError);
    // relation total r below every generator cannot be anchored
    CHECK_THROWS_AS(random_presentation(1, 2, 1, 1, 1, 1, 4, FieldConfig{}), InputError);
}
