#include <doctest.h>

#include "cebetti/stability.hpp"
#include "instances.hpp"

using namespace cebetti;
using namespace cebetti::testing;

TEST_CASE("cap map is formal differentiation by p") {
    LieModel lm = build_lie_model(preset("euclidean", {{"n", 2}}), Variant::Standard);
    SliceStore store(lm);
    int p = *lm.p_generator;
    int xt = lm.weight2_ids()[0];

    CapMap cap = cap_map(store, 2);  // weight 3 -> weight 2
    auto from = store.slice(3);
    auto to = store.slice(2);

    // p^3 -> 3 p^2
    int col = from->index_of(0, Monomial{{{p, 3}}});
    int row = to->index_of(0, Monomial{{{p, 2}}});
    CHECK(cap.by_degree.at(0).at(row, col) == Rational(3));

    // p * y -> y for the p-free monomial y = xt
    col = from->index_of(1, Monomial{{{p, 1}, {xt, 1}}});
    row = to->index_of(1, Monomial{{{xt, 1}}});
    CHECK(cap.by_degree.at(1).at(row, col) == Rational(1));

    // A p-free monomial maps to zero: weight-2 slice has xt alone in degree 1.
    CapMap cap1 = cap_map(store, 1);
    int c = store.slice(2)->index_of(1, Monomial{{{xt, 1}}});
    CHECK(cap1.by_degree.at(1).column(c).is_zero());
}

TEST_CASE("cap map needs the dual class of a point") {
    LieModel no_p = build_lie_model(preset("moebius-closed"), Variant::Relative);
    SliceStore store(no_p);
    CHECK_FALSE(no_p.p_generator.has_value());
    CHECK_THROWS_AS(cap_map(store, 1), StabilityError);

    LieModel twisted = build_lie_model(preset("klein-bottle"), Variant::TwistedEven);
    SliceStore tw_store(twisted);
    CHECK_THROWS_AS(cap_map(tw_store, 1), StabilityError);
}

TEST_CASE("cap map commutes with the differential and is surjective") {
    for (const auto& model : sweep_instances()) {
        if (!model.connected) continue;
        LieModel lm = build_lie_model(model, Variant::Standard);
        SliceStore store(lm);
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(instance_tag(model));
            CHECK_NOTHROW(cap_map(store, k));  // chain-map identity verified inside
            CHECK(check_surjectivity(store, k));
        }
    }
}

TEST_CASE("surjectivity at weight zero") {
    LieModel lm = build_lie_model(preset("torus"), Variant::Standard);
    SliceStore store(lm);
    CHECK(check_surjectivity(store, 0));
}

TEST_CASE("divisibility: high-weight monomials carry the point class") {
    for (const auto& model : sweep_instances()) {
        if (!model.connected) continue;
        LieModel lm = build_lie_model(model, Variant::Standard);
        int p = *lm.p_generator;
        int slack = model.orientable_surface ? 1 : 0;
        for (int k = 0; k <= 5; ++k) {
            for (const auto& [degree, monomials] : enumerate_slice_basis(lm, k)) {
                if (k <= degree + slack) continue;
                for (const auto& m : monomials) {
                    CAPTURE(instance_tag(model));
                    CHECK(m.exponent_of(p) > 0);
                }
            }
        }
    }
}

TEST_CASE("betti numbers stabilize for d <= k outside orientable surfaces") {
    for (const auto& model : sweep_instances()) {
        if (!model.connected || model.orientable_surface) continue;
        LieModel lm = build_lie_model(model, Variant::Standard);
        SliceStore store(lm);
        std::map<int, std::map<int, int>> tables;
        for (int k = 0; k <= 6; ++k) tables[k] = betti(lm, *store.slice(k));
        for (int k = 0; k <= 5; ++k) {
            for (int d = 0; d <= k; ++d) {
                auto get = [&](int kk) {
                    auto it = tables[kk].find(d);
                    return it == tables[kk].end() ? 0 : it->second;
                };
                CAPTURE(instance_tag(model));
                CHECK(get(k) == get(k + 1));
            }
        }
    }
}

TEST_CASE("klein bottle stability is sharp exactly at degree k+1") {
    LieModel lm = build_lie_model(preset("klein-bottle"), Variant::Standard);
    SliceStore store(lm);
    StabilityReport report = verify_stability(store, 4);
    CHECK(report.pass);
    CHECK_FALSE(report.orientable_surface);
    for (const auto& cell : report.cells) {
        if (cell.degree <= cell.k) CHECK(cell.induced_map_iso);
        if (cell.degree == cell.k + 1 && cell.k >= 1) {
            // One extra class upstairs at the boundary degree: surjective but
            // never an isomorphism, so the range is sharp.
            CHECK(cell.induced_map_surjective);
            CHECK(cell.dim_from == cell.dim_to + 1);
            CHECK(cell.dim_from == (cell.k >= 2 ? 2 : 1));
            CHECK_FALSE(cell.induced_map_iso);
        }
    }
}

TEST_CASE("orientable surfaces use the smaller range") {
    LieModel lm = build_lie_model(preset("torus"), Variant::Standard);
    SliceStore store(lm);
    StabilityReport report = verify_stability(store, 3);
    CHECK(report.pass);
    CHECK(report.orientable_surface);
    CHECK(report.iso_through(3) == 2);
    CHECK(report.surjection_at(3) == 3);
}

TEST_CASE("euclidean spaces stabilize immediately") {
    LieModel lm = build_lie_model(preset("euclidean", {{"n", 3}}), Variant::Standard);
    SliceStore store(lm);
    StabilityReport report = verify_stability(store, 5);
    CHECK(report.pass);
    CHECK_FALSE(report.improved_range.empty());
    for (const auto& cell : report.cells) CHECK(cell.induced_map_iso);
}

TEST_CASE("stability preconditions") {
    LieModel line = build_lie_model(preset("euclidean", {{"n", 1}}), Variant::Standard);
    SliceStore line_store(line);
    CHECK_THROWS_AS(verify_stability(line_store, 2), StabilityError);

    LieModel twisted = build_lie_model(preset("klein-bottle"), Variant::TwistedEven);
    SliceStore tw(twisted);
    CHECK_THROWS_AS(verify_stability(tw, 2), StabilityError);

    LieModel band = build_lie_model(preset("moebius-closed"), Variant::Standard);
    SliceStore band_store(band);
    CHECK_THROWS_AS(verify_stability(band_store, 2), StabilityError);
}
