#include <algorithm>
#include <set>

#include <json.hpp>

#include "cebetti/model.hpp"

namespace cebetti {

namespace {

using nlohmann::ordered_json;

std::string at_position(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void require_keys(const ordered_json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ModelParseError("unknown field '" + key + "' in " + where);
}

std::map<int, std::vector<std::string>> parse_classes(const ordered_json& arr,
                                                      const std::string& where) {
    if (!arr.is_array()) throw ModelParseError(where + " must be a list");
    std::map<int, std::vector<std::string>> out;
    for (const auto& item : arr) {
        if (!item.is_object()) throw ModelParseError(where + " entries must be objects");
        require_keys(item, {"degree", "label"}, where);
        if (!item.contains("degree") || !item["degree"].is_number_integer())
            throw ModelParseError(where + " entry needs an integer 'degree'");
        if (!item.contains("label") || !item["label"].is_string())
            throw ModelParseError(where + " entry needs a string 'label'");
        out[item["degree"].get<int>()].push_back(item["label"].get<std::string>());
    }
    return out;
}

std::vector<ProductEntry> parse_products(const ordered_json& arr, const std::string& where) {
    if (!arr.is_array()) throw ModelParseError(where + " must be a list");
    std::vector<ProductEntry> out;
    for (const auto& item : arr) {
        if (!item.is_object()) throw ModelParseError(where + " entries must be objects");
        require_keys(item, {"left_label", "right_label", "result"}, where);
        for (const char* key : {"left_label", "right_label"})
            if (!item.contains(key) || !item[key].is_string())
                throw ModelParseError(where + " entry needs a string '" + std::string(key) + "'");
        ProductEntry entry;
        entry.left = item["left_label"].get<std::string>();
        entry.right = item["right_label"].get<std::string>();
        if (item.contains("result")) {
            if (!item["result"].is_array())
                throw ModelParseError(where + " 'result' must be a list");
            for (const auto& term : item["result"]) {
                if (!term.is_object())
                    throw ModelParseError(where + " result terms must be objects");
                require_keys(term, {"label", "coeff_num", "coeff_den"}, where + " result");
                if (!term.contains("label") || !term["label"].is_string())
                    throw ModelParseError(where + " result term needs a string 'label'");
                long long num = 0, den = 1;
                if (term.contains("coeff_num")) {
                    if (!term["coeff_num"].is_number_integer())
                        throw ModelParseError(where + " coeff_num must be an integer");
                    num = term["coeff_num"].get<long long>();
                }
                if (term.contains("coeff_den")) {
                    if (!term["coeff_den"].is_number_integer())
                        throw ModelParseError(where + " coeff_den must be an integer");
                    den = term["coeff_den"].get<long long>();
                }
                if (den == 0) throw ModelParseError(where + " coeff_den must be nonzero");
                entry.terms.push_back(
                    {term["label"].get<std::string>(), Rational(BigInt(num), BigInt(den))});
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

CohomologyModel parse_model_file(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelParseError("syntax error at " + at_position(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw ModelParseError("model file must be a JSON object");
    require_keys(doc,
                 {"name", "n", "connected", "orientable_surface", "params", "untwisted", "twisted",
                  "ww_products", "uu_products"},
                 "model");

    CohomologyModel model;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ModelParseError("'name' must be a string");
        model.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ModelParseError("model needs an integer 'n'");
    model.n = doc["n"].get<int>();
    if (!doc.contains("connected") || !doc["connected"].is_boolean())
        throw ModelParseError("model needs a boolean 'connected'");
    model.connected = doc["connected"].get<bool>();
    if (doc.contains("orientable_surface")) {
        if (!doc["orientable_surface"].is_boolean())
            throw ModelParseError("'orientable_surface' must be a boolean");
        model.orientable_surface = doc["orientable_surface"].get<bool>();
    }
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) throw ModelParseError("'params' must be an object");
        for (const auto& [key, value] : doc["params"].items()) {
            if (!value.is_number_integer())
                throw ModelParseError("'params' values must be integers");
            model.params[key] = value.get<long>();
        }
    }
    if (doc.contains("untwisted")) model.untwisted = parse_classes(doc["untwisted"], "untwisted");
    if (doc.contains("twisted")) model.twisted = parse_classes(doc["twisted"], "twisted");
    if (doc.contains("ww_products"))
        model.ww_products = parse_products(doc["ww_products"], "ww_products");
    if (doc.contains("uu_products"))
        model.uu_products = parse_products(doc["uu_products"], "uu_products");

    // Duplicate labels are a parse-level error as well as a validation rule.
    for (Sheaf sheaf : {Sheaf::Untwisted, Sheaf::Twisted}) {
        const auto& table = sheaf == Sheaf::Untwisted ? model.untwisted : model.twisted;
        std::set<std::string> seen;
        for (const auto& [degree, labels] : table)
            for (const auto& label : labels)
                if (!seen.insert(label).second)
                    throw ModelParseError("duplicate label '" + label + "'");
    }
    return model;
}

namespace {

ordered_json classes_json(const std::map<int, std::vector<std::string>>& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [degree, labels] : table)
        for (const auto& label : labels) arr.push_back({{"degree", degree}, {"label", label}});
    return arr;
}

ordered_json products_json(const std::vector<ProductEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& entry : entries) {
        ordered_json terms = ordered_json::array();
        for (const auto& term : entry.terms)
            terms.push_back({{"label", term.label},
                             {"coeff_num", term.coeff.num().convert_to<long long>()},
                             {"coeff_den", term.coeff.den().convert_to<long long>()}});
        arr.push_back(
            {{"left_label", entry.left}, {"right_label", entry.right}, {"result", terms}});
    }
    return arr;
}

}  // namespace

std::string serialize_model(const CohomologyModel& model) {
    ordered_json doc;
    doc["name"] = model.name;
    doc["n"] = model.n;
    doc["connected"] = model.connected;
    doc["orientable_surface"] = model.orientable_surface;
    if (!model.params.empty()) {
        ordered_json params;
        for (const auto& [key, value] : model.params) params[key] = value;
        doc["params"] = params;
    }
    doc["untwisted"] = classes_json(model.untwisted);
    doc["twisted"] = classes_json(model.twisted);
    doc["ww_products"] = products_json(model.ww_products);
    doc["uu_products"] = products_json(model.uu_products);
    return doc.dump(2) + "\n";
}

}  // namespace cebetti
