#include "cebetti/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace cebetti {

namespace {

ProductEntry prod(std::string left, std::string right, std::string result) {
    return {std::move(left), std::move(right), {{std::move(result), Rational(1)}}};
}

long need(const std::map<std::string, long>& params, const std::string& key,
          const std::string& preset_name) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("preset '" + preset_name + "' needs parameter " + key);
    return it->second;
}

void allow_only(const std::map<std::string, long>& params, std::vector<std::string> keys,
                const std::string& preset_name) {
    for (const auto& [key, value] : params)
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw std::invalid_argument("preset '" + preset_name + "' does not take parameter " +
                                        key);
}

CohomologyModel euclidean(const std::map<std::string, long>& params) {
    allow_only(params, {"n"}, "euclidean");
    long n = need(params, "n", "euclidean");
    if (n < 1) throw std::invalid_argument("euclidean: n must be >= 1");
    CohomologyModel m;
    m.name = "euclidean";
    m.n = static_cast<int>(n);
    m.connected = true;
    m.orientable_surface = (n == 2);
    m.params = {{"n", n}};
    m.untwisted[m.n] = {"t"};
    m.twisted[m.n] = {"t"};
    return m;
}

CohomologyModel punctured_euclidean(const std::map<std::string, long>& params) {
    allow_only(params, {"n", "m"}, "punctured-euclidean");
    long n = need(params, "n", "punctured-euclidean");
    long punctures = need(params, "m", "punctured-euclidean");
    if (n < 2) throw std::invalid_argument("punctured-euclidean: n must be >= 2");
    if (punctures < 1) throw std::invalid_argument("punctured-euclidean: m must be >= 1");
    CohomologyModel m;
    m.name = "punctured-euclidean";
    m.n = static_cast<int>(n);
    m.connected = true;
    m.orientable_surface = (n == 2);
    m.params = {{"m", punctures}, {"n", n}};
    std::vector<std::string> circles;
    for (long i = 1; i <= punctures; ++i) circles.push_back("c" + std::to_string(i));
    m.untwisted[1] = circles;
    m.untwisted[m.n] = {"t"};
    m.twisted = m.untwisted;
    return m;
}

CohomologyModel orientable_surface(long genus) {
    if (genus < 0) throw std::invalid_argument("orientable-surface: g must be >= 0");
    std::map<int, std::vector<std::string>> classes;
    classes[0] = {"u"};
    std::vector<std::string> deg1;
    for (long i = 1; i <= genus; ++i) {
        deg1.push_back("a" + std::to_string(i));
        deg1.push_back("b" + std::to_string(i));
    }
    if (!deg1.empty()) classes[1] = deg1;
    classes[2] = {"t"};
    std::vector<ProductEntry> ring;
    ring.push_back(prod("u", "u", "u"));
    for (const auto& x : deg1) ring.push_back(prod("u", x, x));
    ring.push_back(prod("u", "t", "t"));
    for (long i = 1; i <= genus; ++i)
        ring.push_back(prod("a" + std::to_string(i), "b" + std::to_string(i), "t"));
    CohomologyModel m = closed_orientable_from_ring("orientable-surface", 2, classes, ring);
    m.params = {{"g", genus}};
    return m;
}

CohomologyModel torus() {
    std::map<int, std::vector<std::string>> classes = {{0, {"u"}}, {1, {"a", "b"}}, {2, {"t"}}};
    std::vector<ProductEntry> ring = {prod("u", "u", "u"), prod("u", "a", "a"),
                                      prod("u", "b", "b"), prod("u", "t", "t"),
                                      prod("a", "b", "t")};
    return closed_orientable_from_ring("torus", 2, classes, ring);
}

CohomologyModel punctured_torus() {
    CohomologyModel m;
    m.name = "punctured-torus";
    m.n = 2;
    m.connected = true;
    m.orientable_surface = true;
    m.untwisted = {{1, {"a", "b"}}, {2, {"t"}}};
    m.twisted = m.untwisted;
    m.uu_products = {prod("a", "b", "t")};
    m.ww_products = m.uu_products;
    return m;
}

CohomologyModel nonorientable_surface(long crosscaps, const std::string& name) {
    if (crosscaps < 1) throw std::invalid_argument("nonorientable-surface: h must be >= 1");
    CohomologyModel m;
    m.name = name;
    m.n = 2;
    m.connected = true;
    m.orientable_surface = false;
    m.untwisted[0] = {"u"};
    std::vector<std::string> uw, tw;
    for (long i = 1; i < crosscaps; ++i) {
        uw.push_back("w" + std::to_string(i));
        tw.push_back("v" + std::to_string(i));
    }
    if (!uw.empty()) {
        m.untwisted[1] = uw;
        m.twisted[1] = tw;
    }
    m.twisted[2] = {"p"};
    m.uu_products.push_back(prod("u", "u", "u"));
    for (const auto& w : uw) m.uu_products.push_back(prod("u", w, w));
    return m;
}

CohomologyModel rp_even(const std::map<std::string, long>& params) {
    allow_only(params, {"n"}, "rp-even");
    long n = need(params, "n", "rp-even");
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("rp-even: n must be even and >= 2");
    CohomologyModel m;
    m.name = "rp-even";
    m.n = static_cast<int>(n);
    m.connected = true;
    m.orientable_surface = false;
    m.params = {{"n", n}};
    m.untwisted[0] = {"u"};
    m.twisted[m.n] = {"p"};
    m.uu_products = {prod("u", "u", "u")};
    return m;
}

CohomologyModel moebius_closed() {
    // Compact band with boundary: H_c^-*(M;Q) is the Klein-bottle ring,
    // H_c^-*(M;Q^w) vanishes, and with it the dual class of a point.
    CohomologyModel m;
    m.name = "moebius-closed";
    m.n = 2;
    m.connected = false;
    m.orientable_surface = false;
    m.untwisted = {{0, {"u"}}, {1, {"v"}}};
    m.uu_products = {prod("u", "u", "u"), prod("u", "v", "v")};
    return m;
}

CohomologyModel moebius_open() {
    CohomologyModel m;
    m.name = "moebius-open";
    m.n = 2;
    m.connected = true;
    m.orientable_surface = false;
    m.twisted = {{1, {"y"}}, {2, {"p"}}};
    return m;
}

CohomologyModel sphere(const std::map<std::string, long>& params) {
    allow_only(params, {"n"}, "sphere");
    long n = need(params, "n", "sphere");
    if (n < 1) throw std::invalid_argument("sphere: n must be >= 1");
    std::map<int, std::vector<std::string>> classes = {{0, {"u"}}, {static_cast<int>(n), {"t"}}};
    std::vector<ProductEntry> ring = {prod("u", "u", "u"), prod("u", "t", "t")};
    CohomologyModel m = closed_orientable_from_ring("sphere", static_cast<int>(n), classes, ring);
    m.params = {{"n", n}};
    return m;
}

}  // namespace

const std::vector<PresetInfo>& preset_catalogue() {
    static const std::vector<PresetInfo> catalogue = {
        {"euclidean", "n>=1", "Euclidean space R^n"},
        {"punctured-euclidean", "n>=2, m>=1", "R^n with m points removed"},
        {"torus", "", "closed orientable surface of genus 1"},
        {"punctured-torus", "", "torus with one point removed"},
        {"orientable-surface", "g>=0", "closed orientable surface of genus g"},
        {"nonorientable-surface", "h>=1", "closed non-orientable surface, connected sum of h "
                                          "projective planes"},
        {"rp-even", "n even, >=2", "real projective space of even dimension"},
        {"klein-bottle", "", "the Klein bottle"},
        {"moebius-closed", "", "compact Moebius band with its boundary circle"},
        {"moebius-open", "", "open Moebius band"},
        {"sphere", "n>=1", "the n-sphere"},
        {"closed-orientable", "ring data", "any closed orientable manifold, built from its "
                                           "cohomology ring via closed_orientable_from_ring"},
    };
    return catalogue;
}

CohomologyModel preset(const std::string& name, const std::map<std::string, long>& params) {
    if (name == "euclidean") return euclidean(params);
    if (name == "punctured-euclidean") return punctured_euclidean(params);
    if (name == "torus") {
        allow_only(params, {}, name);
        return torus();
    }
    if (name == "punctured-torus") {
        allow_only(params, {}, name);
        return punctured_torus();
    }
    if (name == "orientable-surface") {
        allow_only(params, {"g"}, name);
        CohomologyModel m = orientable_surface(need(params, "g", name));
        return m;
    }
    if (name == "nonorientable-surface") {
        allow_only(params, {"h"}, name);
        CohomologyModel m = nonorientable_surface(need(params, "h", name), "nonorientable-surface");
        m.params = {{"h", need(params, "h", name)}};
        return m;
    }
    if (name == "rp-even") return rp_even(params);
    if (name == "klein-bottle") {
        allow_only(params, {}, name);
        CohomologyModel m;
        m.name = "klein-bottle";
        m.n = 2;
        m.connected = true;
        m.orientable_surface = false;
        m.untwisted = {{0, {"u"}}, {1, {"v"}}};
        m.twisted = {{1, {"w"}}, {2, {"p"}}};
        m.uu_products = {prod("u", "u", "u"), prod("u", "v", "v")};
        return m;
    }
    if (name == "moebius-closed") {
        allow_only(params, {}, name);
        return moebius_closed();
    }
    if (name == "moebius-open") {
        allow_only(params, {}, name);
        return moebius_open();
    }
    if (name == "sphere") return sphere(params);
    if (name == "closed-orientable")
        throw std::invalid_argument(
            "preset 'closed-orientable' needs a cohomology ring; supply a model file or call "
            "closed_orientable_from_ring");
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace cebetti
