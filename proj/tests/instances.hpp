#pragma once

// Preset instances swept by the property and acceptance suites.

#include "cebetti/lie.hpp"
#include "cebetti/presets.hpp"

namespace cebetti::testing {

inline std::vector<CohomologyModel> sweep_instances() {
    return {
        preset("euclidean", {{"n", 2}}),
        preset("euclidean", {{"n", 3}}),
        preset("euclidean", {{"n", 4}}),
        preset("euclidean", {{"n", 5}}),
        preset("punctured-euclidean", {{"n", 2}, {"m", 1}}),
        preset("punctured-euclidean", {{"n", 2}, {"m", 2}}),
        preset("punctured-euclidean", {{"n", 2}, {"m", 3}}),
        preset("punctured-euclidean", {{"n", 3}, {"m", 1}}),
        preset("punctured-euclidean", {{"n", 3}, {"m", 2}}),
        preset("punctured-euclidean", {{"n", 3}, {"m", 3}}),
        preset("torus"),
        preset("punctured-torus"),
        preset("orientable-surface", {{"g", 2}}),
        preset("nonorientable-surface", {{"h", 2}}),
        preset("nonorientable-surface", {{"h", 3}}),
        preset("nonorientable-surface", {{"h", 4}}),
        preset("rp-even", {{"n", 2}}),
        preset("rp-even", {{"n", 4}}),
        preset("klein-bottle"),
        preset("moebius-closed"),
        preset("moebius-open"),
        preset("sphere", {{"n", 2}}),
        preset("sphere", {{"n", 3}}),
        preset("sphere", {{"n", 5}}),
    };
}

inline std::vector<Variant> variants_for(const CohomologyModel& model) {
    std::vector<Variant> out = {Variant::Standard, Variant::Relative};
    out.push_back(model.n % 2 == 0 ? Variant::TwistedEven : Variant::TwistedOdd);
    return out;
}

inline std::string instance_tag(const CohomologyModel& model) {
    std::string tag = model.name;
    for (const auto& [key, value] : model.params)
        tag += "," + key + "=" + std::to_string(value);
    return tag;
}

}  // namespace cebetti::testing
