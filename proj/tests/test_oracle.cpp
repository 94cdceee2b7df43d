#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cebetti/oracle.hpp"
#include "instances.hpp"

using namespace cebetti;
using namespace cebetti::testing;

namespace {

std::string read_fixture(const std::string& name) {
    const char* dir = std::getenv("CEBETTI_FIXTURES_DIR");
    REQUIRE_MESSAGE(dir != nullptr, "CEBETTI_FIXTURES_DIR not set");
    std::ifstream in(std::string(dir) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "fixture missing: " << name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("sym power oracle on the worked examples") {
    std::map<int, int> s3 = {{0, 1}, {3, 1}};
    CHECK(sym_power_oracle(s3, 4) == std::map<int, int>{{0, 1}, {3, 1}});
    CHECK(sym_power_oracle(s3, 0) == std::map<int, int>{{0, 1}});
    CHECK(sym_power_oracle({{0, 1}}, 5) == std::map<int, int>{{0, 1}});

    // Two odd generators in degree 1: exterior square shows up once.
    std::map<int, int> wedge = {{0, 1}, {1, 2}};
    CHECK(sym_power_oracle(wedge, 2) == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("punctured euclidean closed forms") {
    CHECK(punctured_euclidean_formula(3, 2, 2) ==
          std::map<int, int>{{0, 1}, {2, 2}, {4, 3}});
    CHECK(punctured_euclidean_formula(2, 1, 3) ==
          std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
    CHECK(punctured_euclidean_formula(5, 3, 0) == std::map<int, int>{{0, 1}});
}

TEST_CASE("nonorientable surface closed form reproduces the sharpness table at h=2") {
    for (int k = 2; k <= 8; ++k) {
        auto dims = nonorientable_surface_formula(2, k);
        CHECK(dims[0] == 1);
        CHECK(dims[1] == 1);
        CHECK(dims[2] == 1);
        for (int d = 3; d <= k; ++d) CHECK(dims[d] == 2);
        CHECK(dims[k + 1] == 1);
        CHECK(dims.find(k + 2) == dims.end());
    }
}

TEST_CASE("oracle suite agrees on presets with closed forms") {
    auto run = [](const CohomologyModel& model, Variant variant, int k_max) {
        auto outcomes = run_oracle_suite(model, variant, k_max);
        for (const auto& o : outcomes) {
            CAPTURE(o.name);
            CAPTURE(o.inputs);
            CAPTURE(o.pipeline_value);
            CAPTURE(o.oracle_value);
            CHECK(o.agree);
        }
        return outcomes;
    };

    run(preset("nonorientable-surface", {{"h", 3}}), Variant::Standard, 5);
    run(preset("moebius-open"), Variant::Standard, 4);
    run(preset("sphere", {{"n", 3}}), Variant::Standard, 6);
    run(preset("punctured-euclidean", {{"n", 3}, {"m", 2}}), Variant::Standard, 5);

    auto pt = run(preset("punctured-torus"), Variant::Standard, 3);
    bool saw_closed_form = false;
    for (const auto& o : pt) saw_closed_form = saw_closed_form || o.name == "closed-form";
    CHECK(saw_closed_form);
}

TEST_CASE("oracle suite covers torus with the generic checks only") {
    auto outcomes = run_oracle_suite(preset("torus"), Variant::Standard, 4);
    int d2 = 0, euler = 0, closed = 0;
    for (const auto& o : outcomes) {
        CHECK(o.agree);
        if (o.name == "d-squared-zero") ++d2;
        if (o.name == "euler-characteristic") ++euler;
        if (o.name == "closed-form") ++closed;
    }
    CHECK(d2 == 5);
    CHECK(euler == 5);
    CHECK(closed == 0);
}

TEST_CASE("golden fixtures: the two entry sets agree and match the pipeline") {
    auto a = load_golden_tables(read_fixture("golden_tables_a.jsonc"));
    auto b = load_golden_tables(read_fixture("golden_tables_b.jsonc"));
    REQUIRE_FALSE(a.empty());
    CHECK(a == b);

    for (const auto& [key, dims] : a) {
        auto bar = key.find('|');
        auto bar2 = key.find('|', bar + 1);
        std::string preset_and_params = key.substr(0, bar);
        std::string variant_text = key.substr(bar + 1, bar2 - bar - 1);
        int k = std::stoi(key.substr(bar2 + 1));

        std::map<std::string, long> params;
        std::string preset_name = preset_and_params;
        auto comma = preset_and_params.find(',');
        if (comma != std::string::npos) {
            preset_name = preset_and_params.substr(0, comma);
            std::stringstream ss(preset_and_params.substr(comma + 1));
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto eq = item.find('=');
                params[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
            }
        }
        CohomologyModel model = preset(preset_name, params);
        Variant variant = variant_text == "standard"     ? Variant::Standard
                          : variant_text == "relative"   ? Variant::Relative
                          : variant_text == "twisted-even" ? Variant::TwistedEven
                                                           : Variant::TwistedOdd;
        LieModel lm = build_lie_model(model, variant);
        CAPTURE(key);
        CHECK(betti(lm, k) == dims);
    }
}

TEST_CASE("the full oracle suite agrees on every preset and variant") {
    for (const auto& model : sweep_instances()) {
        for (Variant v : variants_for(model)) {
            for (const auto& o : run_oracle_suite(model, v, 6)) {
                CAPTURE(instance_tag(model));
                CAPTURE(o.name);
                CAPTURE(o.inputs);
                CAPTURE(o.pipeline_value);
                CAPTURE(o.oracle_value);
                CHECK(o.agree);
            }
        }
    }
}

TEST_CASE("weight-1 betti equals the manifold's own homology") {
    for (const auto& model : sweep_instances()) {
        LieModel lm = build_lie_model(model, Variant::Standard);
        std::map<int, int> expected;
        for (const auto& ref : model.classes(Sheaf::Twisted)) ++expected[model.n - ref.degree];
        CAPTURE(instance_tag(model));
        CHECK(betti(lm, 1) == expected);
    }
}
