#include <doctest.h>

#include <random>

#include "cebetti/ce.hpp"
#include "instances.hpp"

using namespace cebetti;
using namespace cebetti::testing;

namespace {

Monomial mono(std::vector<std::pair<int, int>> exps) { return Monomial{std::move(exps)}; }

std::map<int, int> dims_of(const std::map<int, std::vector<Monomial>>& basis) {
    std::map<int, int> out;
    for (const auto& [degree, monomials] : basis) out[degree] = static_cast<int>(monomials.size());
    return out;
}

}  // namespace

TEST_CASE("euclidean n=2 weight-3 basis is {x^3, x*xt}") {
    LieModel lm = build_lie_model(preset("euclidean", {{"n", 2}}), Variant::Standard);
    auto basis = enumerate_slice_basis(lm, 3);
    int x = lm.weight1_ids()[0], xt = lm.weight2_ids()[0];
    REQUIRE(dims_of(basis) == std::map<int, int>{{0, 1}, {1, 1}});
    CHECK(basis[0][0] == mono({{x, 3}}));
    CHECK(basis[1][0] == mono({{x, 1}, {xt, 1}}));
}

TEST_CASE("weight-0 and weight-1 slices") {
    for (const auto& model : sweep_instances()) {
        for (Variant v : variants_for(model)) {
            LieModel lm = build_lie_model(model, v);
            auto b0 = enumerate_slice_basis(lm, 0);
            REQUIRE(b0.size() == 1);
            CHECK(b0[0].size() == 1);
            CHECK(b0[0][0].exponents.empty());

            auto b1 = enumerate_slice_basis(lm, 1);
            size_t count = 0;
            for (const auto& [degree, monomials] : b1) count += monomials.size();
            CHECK(count == lm.weight1_ids().size());

            WeightSlice s1 = build_slice(lm, 1);
            for (const auto& [degree, d] : s1.differentials) CHECK(d.is_zero());
        }
    }
}

TEST_CASE("odd-degree generators are exterior") {
    LieModel lm = build_lie_model(preset("punctured-torus"), Variant::Standard);
    // a, b have ce degree 1; no monomial may contain a^2.
    for (int k = 0; k <= 5; ++k) {
        for (const auto& [degree, monomials] : enumerate_slice_basis(lm, k))
            for (const auto& m : monomials)
                for (const auto& [id, e] : m.exponents)
                    if (lm.generator(id).ce_degree % 2 != 0) CHECK(e == 1);
    }
}

TEST_CASE("punctured torus: d(xy) = +/- zt") {
    LieModel lm = build_lie_model(preset("punctured-torus"), Variant::Standard);
    const auto* a = &lm.generator(lm.weight1_ids()[0]);
    // Identify the generators by label.
    int id_a = -1, id_b = -1, id_zt = -1;
    for (const auto& g : lm.generators) {
        if (g.weight == 1 && g.source.label == "a") id_a = g.id;
        if (g.weight == 1 && g.source.label == "b") id_b = g.id;
        if (g.weight == 2 && g.source.label == "t") id_zt = g.id;
    }
    REQUIRE((id_a >= 0 && id_b >= 0 && id_zt >= 0));
    (void)a;

    WeightSlice slice = build_slice(lm, 2);
    Monomial xy = mono({{id_a, 1}, {id_b, 1}});
    Monomial zt = mono({{id_zt, 1}});
    int col = slice.index_of(2, xy);
    int row = slice.index_of(1, zt);
    REQUIRE(col >= 0);
    REQUIRE(row >= 0);
    Rational entry = slice.differential(2).at(row, col);
    CHECK((entry == Rational(1) || entry == Rational(-1)));
}

TEST_CASE("klein bottle twisted weight 2: d(ab) hits bt and d(a^2) hits at") {
    LieModel lm = build_lie_model(preset("klein-bottle"), Variant::TwistedEven);
    int id_a = -1, id_b = -1, id_at = -1, id_bt = -1;
    for (const auto& g : lm.generators) {
        if (g.weight == 1 && g.source.label == "u") id_a = g.id;
        if (g.weight == 1 && g.source.label == "v") id_b = g.id;
        if (g.weight == 2 && g.source.label == "u") id_at = g.id;
        if (g.weight == 2 && g.source.label == "v") id_bt = g.id;
    }
    WeightSlice slice = build_slice(lm, 2);
    int col_ab = slice.index_of(3, mono({{id_a, 1}, {id_b, 1}}));
    int row_bt = slice.index_of(2, mono({{id_bt, 1}}));
    REQUIRE(col_ab >= 0);
    REQUIRE(row_bt >= 0);
    CHECK_FALSE(slice.differential(3).at(row_bt, col_ab).is_zero());

    int col_aa = slice.index_of(4, mono({{id_a, 2}}));
    int row_at = slice.index_of(3, mono({{id_at, 1}}));
    REQUIRE(col_aa >= 0);
    REQUIRE(row_at >= 0);
    CHECK_FALSE(slice.differential(4).at(row_at, col_aa).is_zero());
}

TEST_CASE("abelian models have zero differentials") {
    LieModel lm = build_lie_model(preset("sphere", {{"n", 3}}), Variant::Standard);
    for (int k = 0; k <= 6; ++k) {
        WeightSlice slice = build_slice(lm, k);
        for (const auto& [degree, d] : slice.differentials) CHECK(d.is_zero());
    }
}

TEST_CASE("betti spot checks from the worked examples") {
    LieModel e2 = build_lie_model(preset("euclidean", {{"n", 2}}), Variant::Standard);
    for (int k = 2; k <= 6; ++k)
        CHECK(betti(e2, k) == std::map<int, int>{{0, 1}, {1, 1}});

    LieModel pt = build_lie_model(preset("punctured-torus"), Variant::Standard);
    CHECK(betti(pt, 2) == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}});

    LieModel kb = build_lie_model(preset("klein-bottle"), Variant::TwistedEven);
    CHECK(betti(kb, 3) == std::map<int, int>{{3, 1}, {4, 1}});
    CHECK(betti(kb, 2).empty());
}

TEST_CASE("differential lowers degree by one and preserves weight") {
    LieModel lm = build_lie_model(preset("orientable-surface", {{"g", 2}}), Variant::Standard);
    WeightSlice slice = build_slice(lm, 4);
    for (const auto& [degree, d] : slice.differentials) {
        for (const auto& [rc, v] : d.entries()) {
            const Monomial& src = slice.bases.at(degree)[rc.second];
            const Monomial& dst = slice.bases.at(degree - 1)[rc.first];
            CHECK(monomial_ce_degree(lm, src) == degree);
            CHECK(monomial_ce_degree(lm, dst) == degree - 1);
            CHECK(monomial_weight(lm, src) == 4);
            CHECK(monomial_weight(lm, dst) == 4);
        }
    }
}

TEST_CASE("homology bases are consistent with betti numbers") {
    LieModel lm = build_lie_model(preset("punctured-torus"), Variant::Standard);
    WeightSlice slice = build_slice(lm, 2);
    auto dims = betti(lm, slice);
    for (int d = 0; d <= slice.max_degree(); ++d) {
        auto [cycles, boundaries] = homology_basis(slice, d);
        auto it = dims.find(d);
        int expected = it == dims.end() ? 0 : it->second;
        CHECK(cycles.count() - boundaries.count() == expected);
    }

    // Abelian case: cycles are everything, boundaries nothing.
    LieModel ab = build_lie_model(preset("sphere", {{"n", 3}}), Variant::Standard);
    WeightSlice s3 = build_slice(ab, 3);
    for (int d = 0; d <= s3.max_degree(); ++d) {
        auto [cycles, boundaries] = homology_basis(s3, d);
        CHECK(cycles.count() == s3.dim(d));
        CHECK(boundaries.count() == 0);
    }
}

TEST_CASE("betti agrees with the rank-nullity route through homology_dims") {
    for (const char* name : {"punctured-torus", "klein-bottle", "torus"}) {
        CohomologyModel model = preset(name);
        for (Variant v : variants_for(model)) {
            LieModel lm = build_lie_model(model, v);
            WeightSlice slice = build_slice(lm, 3);
            auto dims = betti(lm, slice);
            for (int d = 0; d <= slice.max_degree(); ++d) {
                int via_slot = homology_dims(slice.differential(d + 1), slice.differential(d));
                int reported = lm.reported_degree(d, 3);
                auto it = dims.find(reported);
                CAPTURE(name);
                CHECK(via_slot == (it == dims.end() ? 0 : it->second));
            }
        }
    }
}

TEST_CASE("euler characteristic equality") {
    LieModel e2 = build_lie_model(preset("euclidean", {{"n", 2}}), Variant::Standard);
    EulerCheck k5 = euler_characteristic(e2, 5);
    CHECK(k5.from_chains == 0);
    CHECK(k5.from_homology == 0);
    EulerCheck k0 = euler_characteristic(e2, 0);
    CHECK(k0.from_chains == 1);

    LieModel n2 = build_lie_model(preset("nonorientable-surface", {{"h", 2}}), Variant::Standard);
    EulerCheck nk = euler_characteristic(n2, 4);
    CHECK(nk.from_chains == nk.from_homology);
}

TEST_CASE("generator permutation leaves betti tables unchanged") {
    std::mt19937 rng(2024);
    for (const auto& model : sweep_instances()) {
        LieModel lm = build_lie_model(model, Variant::Standard);
        std::vector<int> perm(lm.generators.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        LieModel shuffled = permute_generators(lm, perm);
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(instance_tag(model));
            CHECK(betti(lm, k) == betti(shuffled, k));
        }
    }
}

TEST_CASE("generator rescaling leaves betti tables unchanged") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(1, 5);
    for (const auto& model : {preset("klein-bottle"), preset("torus"), preset("punctured-torus")}) {
        LieModel lm = build_lie_model(model, Variant::Standard);
        LieModel scaled = lm;
        for (const auto& g : lm.generators) {
            Rational factor(num(rng), num(rng));
            scaled = rescale_generator(scaled, g.id, factor);
        }
        for (int k = 0; k <= 5; ++k) {
            CAPTURE(model.name);
            CHECK(betti(lm, k) == betti(scaled, k));
        }
    }
}

TEST_CASE("slice dimension cap aborts cleanly") {
    LieModel lm = build_lie_model(preset("punctured-euclidean", {{"n", 2}, {"m", 40}}),
                                  Variant::Standard);
    CHECK_THROWS_AS(enumerate_slice_basis(lm, 12), CeError);
}

TEST_CASE("enumeration is deterministic and lexicographic") {
    LieModel lm = build_lie_model(preset("orientable-surface", {{"g", 2}}), Variant::Standard);
    auto a = enumerate_slice_basis(lm, 3);
    auto b = enumerate_slice_basis(lm, 3);
    CHECK(a == b);
    for (const auto& [degree, monomials] : a)
        for (size_t i = 1; i < monomials.size(); ++i)
            CHECK(monomial_lex_less(monomials[i - 1], monomials[i]));
}

TEST_CASE("the differential squares to zero through weight 10") {
    // Assembly verifies D^2 = 0 and throws otherwise; build the deep slices
    // for the presets with nontrivial brackets.
    for (const char* name : {"klein-bottle", "punctured-torus", "torus"}) {
        CohomologyModel model = preset(name);
        for (Variant v : variants_for(model)) {
            LieModel lm = build_lie_model(model, v);
            CHECK_NOTHROW(build_slice(lm, 10));
        }
    }
}

TEST_CASE("slice store returns shared immutable slices") {
    LieModel lm = build_lie_model(preset("torus"), Variant::Standard);
    SliceStore store(lm);
    auto s1 = store.slice(3);
    auto s2 = store.slice(3);
    CHECK(s1.get() == s2.get());
    BettiTable table = betti_table(store, 0, 3);
    CHECK(table.entries.at({1, 0}) == 1);
    CHECK(table.entries.at({1, 1}) == 2);
}
