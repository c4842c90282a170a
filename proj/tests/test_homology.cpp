#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fimreg/homology.hpp>
#include <fimreg/json_io.hpp>
#include <fimreg/module.hpp>
#include <fimreg/oracle.hpp>
#include <fimreg/presentation.hpp>

using namespace fimreg;

namespace {

/* One generator in degree 0 killed in degree 1: the module that is the
 * ground field in degree 0 and zero above. */
Presentation point_presentation(int N) {
    Presentation p;
    p.m = 1;
    p.N = N;
    p.field = FieldConfig{};
    p.generators = {MultiIndex{0}};
    Relation rel;
    rel.degree = MultiIndex{1};
    rel.terms.push_back({0, MorphismTuple{{Injection(0, 1, {})}}, Rational(1)});
    p.relations.push_back(rel);
    return p;
}

}  // namespace

TEST_CASE("point module has one-dimensional homology on the diagonal") {
    PrimeField f101(101);
    auto pm = build_module(point_presentation(5), f101);
    const auto& v = pm.quotient.mod;
    CHECK(v.dim_at(MultiIndex{0}) == 1);
    CHECK(v.dim_at(MultiIndex{1}) == 0);
    auto tab = homology_table(v, 3);
    for (int i = 0; i <= 3; ++i) {
        for (int n = 0; n <= 5; ++n) {
            CHECK(tab.at(i, MultiIndex{n}) == ((n == i) ? 1 : 0));
        }
    }
    CHECK(tab.t == std::vector<int>{0, 1, 2, 3});

    auto pm3 = build_module(point_presentation(3), f101);
    auto tab3 = homology_table(pm3.quotient.mod, 2);
    CHECK(tab3 == tor_oracle(pm3.quotient.mod, 2));
}

TEST_CASE("free modules are acyclic with H_0 the regular representation") {
    PrimeField f101(101);
    auto free2 = free_module(make_window(1, 5), f101, {MultiIndex{2}});
    auto tab = homology_table(free2.mod, 3);
    for (int i = 0; i <= 3; ++i) {
        for (int n = 0; n <= 5; ++n) {
            CHECK(tab.at(i, MultiIndex{n}) == ((i == 0 && n == 2) ? 2 : 0));
        }
    }

    auto freem2 =
        free_module(make_window(2, 4), f101, {MultiIndex{1, 1}, MultiIndex{0, 2}});
    auto tab2 = homology_table(freem2.mod, 2);
    int nonzero = 0;
    for (const auto& [key, dim] : tab2.entries) {
        (void)dim;
        ++nonzero;
        CHECK(key.first == 0);  // nothing above homological degree 0
    }
    CHECK(tab2.at(0, MultiIndex{1, 1}) == 1);
    CHECK(tab2.at(0, MultiIndex{0, 2}) == 2);
    CHECK(nonzero == 2);
}

TEST_CASE("ladder engine matches the direct resolution on random instances") {
    PrimeField f101(101);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        CAPTURE(seed);
        auto pres = random_presentation(1, 1, 2, 1, 1, seed, 3, FieldConfig{});
        auto pm = build_module(pres, f101);
        const auto& v = pm.quotient.mod;
        CHECK(v.validate().empty());
        auto tab = homology_table(v, 2);
        EngineOptions opt;
        opt.strategy = LiftStrategy::SeededRandom;
        opt.seed = seed * 77 + 5;
        auto tab_rand = homology_table(v, 2, opt);
        auto oracle = tor_oracle(v, 2);
        CHECK(tab == oracle);
        CHECK(tab_rand == oracle);
    }
}

TEST_CASE("engine agrees with the oracle over F_2 and the rationals at m=2") {
    PrimeField f2(2);
    RationalField fq;
    for (std::uint64_t seed = 11; seed <= 13; ++seed) {
        CAPTURE(seed);
        auto pres = random_presentation(2, 1, 2, 1, 1, seed, 3, FieldConfig{});
        {
            auto pm = build_module(pres, f2);
            CHECK(homology_table(pm.quotient.mod, 2) == tor_oracle(pm.quotient.mod, 2));
        }
        {
            auto pm = build_module(pres, fq);
            CHECK(homology_table(pm.quotient.mod, 2) == tor_oracle(pm.quotient.mod, 2));
        }
    }
}

TEST_CASE("homology is stable under window truncation") {
    PrimeField f101(101);
    auto pres = random_presentation(1, 1, 2, 2, 1, 42, 6, FieldConfig{});
    auto pm = build_module(pres, f101);
    auto big = homology_table(pm.quotient.mod, 2);
    auto small_mod = truncate_module(pm.quotient.mod, 4);
    auto small = homology_table(small_mod, 2);
    for (int i = 0; i <= 2; ++i) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(big.at(i, MultiIndex{n}) == small.at(i, MultiIndex{n}));
        }
    }
    // the H_0 row is the direct coinvariant computation
    auto h0 = h0_dims(pm.quotient.mod);
    for (int id = 0; id < pm.quotient.mod.window()->size(); ++id) {
        CHECK(big.at(0, pm.quotient.mod.window()->at(id)) == h0[static_cast<size_t>(id)]);
    }
}

TEST_CASE("materialized resolutions are exact complexes in the window") {
    PrimeField f101(101);
    size_t nontrivial = 0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        CAPTURE(seed);
        auto pres = random_presentation(2, 1, 2, 1, 1, seed, 3, FieldConfig{});
        auto pm = build_module(pres, f101);
        const auto& v = pm.quotient.mod;
        EngineOptions opt;
        opt.max_level = 2;
        ResolutionEngine<PrimeField> eng(v, opt);
        eng.run();
        auto res = eng.materialize(3, 50'000'000);
        const auto& win = v.window();
        if (!res.gen_degrees[1].empty()) ++nontrivial;
        for (int id = 0; id < win->size(); ++id) {
            // d_0 surjective; im d_{l+1} = ker d_l exactly
            const auto& d0 = res.diff[0][static_cast<size_t>(id)];
            CHECK(mat_rank(f101, d0) == v.dim_at(id));
            for (int l = 0; l + 1 < 3; ++l) {
                const auto& dl = res.diff[static_cast<size_t>(l)][static_cast<size_t>(id)];
                const auto& dn = res.diff[static_cast<size_t>(l + 1)][static_cast<size_t>(id)];
                auto prod = mat_mul(f101, dl, dn);
                CHECK(is_zero_vec(f101, prod.data));
                CHECK(mat_rank(f101, dn) == dn.rows - mat_rank(f101, dl));
            }
        }
    }
    CHECK(nontrivial >= 2);
}

TEST_CASE("budget refusals are loud and leave no partial answer") {
    PrimeField f101(101);
    auto pres = random_presentation(2, 1, 2, 2, 2, 9, 4, FieldConfig{});
    auto pm = build_module(pres, f101);
    EngineOptions opt;
    opt.budget_cells = 10;
    CHECK_THROWS_AS(homology_table(pm.quotient.mod, 2, opt), BudgetError);
    CHECK_THROWS_AS(tor_oracle(pm.quotient.mod, 2, 10), BudgetError);
}

TEST_CASE("homology tables serialize and restore exactly") {
    PrimeField f101(101);
    auto pres = random_presentation(2, 1, 2, 2, 1, 17, 4, FieldConfig{});
    auto pm = build_module(pres, f101);
    auto tab = homology_table(pm.quotient.mod, 2);
    auto j = table_to_json(tab);
    auto back = table_from_json(j);
    CHECK(back == tab);
    CHECK(table_to_json(back).dump() == j.dump());
}
