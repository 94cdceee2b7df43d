// Command-line surface: Betti tables of configuration spaces, homological
// stability verification, preset listing, and oracle cross-checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cebetti/ce.hpp"
#include "cebetti/oracle.hpp"
#include "cebetti/presets.hpp"
#include "cebetti/stability.hpp"

namespace {

using namespace cebetti;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCapExceeded = 3;

struct CliError {
    int code;
    std::string message;
};

std::map<std::string, long> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, long> out;
    for (const auto& chunk : raw) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw CliError{kExitValidation, "bad --param entry '" + item + "' (use key=value)"};
            try {
                out[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw CliError{kExitValidation, "bad --param value in '" + item + "'"};
            }
        }
    }
    return out;
}

bool is_preset_name(const std::string& name) {
    for (const auto& info : preset_catalogue())
        if (info.name == name) return true;
    return false;
}

CohomologyModel load_manifold(const std::string& manifold, const std::vector<std::string>& raw_params) {
    auto params = parse_params(raw_params);
    if (is_preset_name(manifold)) {
        try {
            return preset(manifold, params);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitValidation, e.what()};
        }
    }
    if (!std::filesystem::exists(manifold))
        throw CliError{kExitValidation,
                       "'" + manifold + "' is neither a preset name nor a model file"};
    std::ifstream in(manifold);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CohomologyModel model;
    try {
        model = parse_model_file(buffer.str());
    } catch (const ModelParseError& e) {
        throw CliError{kExitValidation, std::string("model file: ") + e.what()};
    }
    auto violations = validate(model);
    if (!violations.empty()) {
        std::string msg = "model fails validation:";
        for (const auto& v : violations) msg += "\n  [" + v.field + "/" + v.rule + "] " + v.message;
        throw CliError{kExitValidation, msg};
    }
    return model;
}

std::pair<int, int> parse_k_spec(const std::string& spec) {
    auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(spec);
            return {k, k};
        }
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CliError{kExitValidation, "bad --k '" + spec + "' (use N or A..B)"};
    }
}

// ---- disk cache for betti rows ------------------------------------------

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("CEBETTI_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::filesystem::path p(dir);
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) return std::nullopt;
    return p;
}

std::optional<std::map<int, int>> cache_load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        auto doc = nlohmann::json::parse(in);
        std::map<int, int> out;
        for (const auto& [degree, dim] : doc.at("dims").items())
            out[std::stoi(degree)] = dim.get<int>();
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_store(const std::filesystem::path& file, const std::map<int, int>& dims) {
    nlohmann::json doc;
    doc["dims"] = nlohmann::json::object();
    for (const auto& [degree, dim] : dims) doc["dims"][std::to_string(degree)] = dim;
    std::ofstream out(file);
    out << doc.dump() << "\n";
}

std::map<int, int> betti_cached(const CohomologyModel& model, const LieModel& lm, SliceStore& store,
                                int k) {
    auto dir = cache_dir();
    std::filesystem::path file;
    if (dir) {
        std::ostringstream key;
        key << std::hex << model_hash(model) << "-" << variant_name(lm.variant) << "-" << std::dec
            << k << ".json";
        file = *dir / key.str();
        if (auto hit = cache_load(file)) return *hit;
    }
    auto dims = betti(lm, *store.slice(k));
    if (dir) cache_store(file, dims);
    return dims;
}

// ---- output --------------------------------------------------------------

struct BettiRow {
    int k;
    int degree;
    int dimension;
};

void render_betti(const std::vector<BettiRow>& rows, const std::string& format,
                  const CohomologyModel& model, const std::string& variant, bool raw_degrees) {
    if (format == "csv") {
        std::cout << "k,degree,dimension\n";
        for (const auto& row : rows)
            std::cout << row.k << "," << row.degree << "," << row.dimension << "\n";
        return;
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["manifold"] = model.name;
        doc["n"] = model.n;
        doc["variant"] = variant;
        doc["degree_convention"] = raw_degrees ? "ce" : "space";
        doc["entries"] = nlohmann::ordered_json::array();
        for (const auto& row : rows)
            doc["entries"].push_back(
                {{"k", row.k}, {"degree", row.degree}, {"dimension", row.dimension}});
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << std::left << std::setw(6) << "k" << std::setw(8) << "degree"
              << "dimension\n";
    for (const auto& row : rows)
        std::cout << std::left << std::setw(6) << row.k << std::setw(8) << row.degree
                  << row.dimension << "\n";
}

int cmd_betti(const std::string& manifold, const std::vector<std::string>& raw_params,
              const std::string& k_spec, const std::string& variant_text,
              const std::string& format, bool dense, bool raw_degrees, int k_cap) {
    CohomologyModel model = load_manifold(manifold, raw_params);
    auto [k_lo, k_hi] = parse_k_spec(k_spec);
    if (k_lo < 0 || k_hi < k_lo) throw CliError{kExitValidation, "bad --k range"};
    if (k_hi > k_cap)
        throw CliError{kExitCapExceeded, "k=" + std::to_string(k_hi) + " exceeds the cap " +
                                             std::to_string(k_cap) + " (raise with --kcap)"};
    Variant variant;
    try {
        variant = variant_from_cli(variant_text, model.n);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitValidation, e.what()};
    }
    LieModel lm = build_lie_model(model, variant);
    SliceStore store(lm);

    std::map<int, std::map<int, int>> sweep;
    try {
        for (int k = k_lo; k <= k_hi; ++k) {
            auto dims = betti_cached(model, lm, store, k);
            if (raw_degrees) {
                std::map<int, int> ce;
                for (const auto& [degree, dim] : dims)
                    ce[degree + k * lm.degree_offset_per_weight] = dim;
                dims = std::move(ce);
            }
            sweep[k] = std::move(dims);
        }
    } catch (const CeError& e) {
        throw CliError{kExitCapExceeded, e.what()};
    }

    int max_degree = 0;
    for (const auto& [k, dims] : sweep)
        for (const auto& [degree, dim] : dims) max_degree = std::max(max_degree, degree);

    std::vector<BettiRow> rows;
    for (const auto& [k, dims] : sweep) {
        if (dense) {
            for (int d = 0; d <= max_degree; ++d) {
                auto it = dims.find(d);
                rows.push_back({k, d, it == dims.end() ? 0 : it->second});
            }
        } else {
            for (const auto& [degree, dim] : dims) rows.push_back({k, degree, dim});
        }
    }
    render_betti(rows, format, model, variant_text, raw_degrees);
    return kExitOk;
}

int cmd_stability(const std::string& manifold, const std::vector<std::string>& raw_params,
                  int k_max, const std::string& format) {
    CohomologyModel model = load_manifold(manifold, raw_params);
    if (model.n <= 1) throw CliError{kExitValidation, "stability needs manifold dimension n > 1"};
    if (!model.connected)
        throw CliError{kExitValidation, "stability needs a connected model without boundary"};
    LieModel lm = build_lie_model(model, Variant::Standard);
    SliceStore store(lm);
    StabilityReport report;
    try {
        report = verify_stability(store, k_max);
    } catch (const StabilityError& e) {
        throw CliError{kExitValidation, e.what()};
    }

    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["manifold"] = model.name;
        doc["kmax"] = k_max;
        doc["orientable_surface"] = report.orientable_surface;
        doc["predicted_range"] = report.predicted_range;
        if (!report.improved_range.empty()) doc["improved_range"] = report.improved_range;
        doc["verdict"] = report.pass ? "pass" : "fail";
        if (!report.pass) doc["first_counterexample"] = report.first_counterexample;
        doc["cells"] = nlohmann::ordered_json::array();
        for (const auto& cell : report.cells)
            doc["cells"].push_back({{"k", cell.k},
                                    {"degree", cell.degree},
                                    {"dim_from", cell.dim_from},
                                    {"dim_to", cell.dim_to},
                                    {"dims_equal", cell.dims_equal},
                                    {"iso", cell.induced_map_iso},
                                    {"surjective", cell.induced_map_surjective}});
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "k,degree,dim_from,dim_to,dims_equal,iso,surjective\n";
        for (const auto& cell : report.cells)
            std::cout << cell.k << "," << cell.degree << "," << cell.dim_from << "," << cell.dim_to
                      << "," << cell.dims_equal << "," << cell.induced_map_iso << ","
                      << cell.induced_map_surjective << "\n";
    } else {
        std::cout << "stability check for " << model.name << ", maps H_*(B_{k+1}) -> H_*(B_k), k <= "
                  << k_max << "\n";
        std::cout << "predicted range: " << report.predicted_range << "\n";
        if (!report.improved_range.empty())
            std::cout << "improved range: " << report.improved_range << "\n";
        for (const auto& cell : report.cells) {
            if (cell.dim_from == 0 && cell.dim_to == 0) continue;
            std::cout << "  k=" << cell.k << " degree=" << cell.degree << "  " << cell.dim_from
                      << " -> " << cell.dim_to << (cell.induced_map_iso ? "  iso" : "")
                      << (!cell.induced_map_iso && cell.induced_map_surjective ? "  surj" : "");
            bool outside = cell.degree > report.surjection_at(cell.k);
            if (!cell.induced_map_iso && cell.degree <= report.iso_through(cell.k))
                std::cout << "  ** range violation **";
            else if (!cell.induced_map_iso && !outside && cell.degree > report.iso_through(cell.k))
                std::cout << "  (boundary degree)";
            std::cout << "\n";
        }
        std::vector<int> sharp_ks;
        for (const auto& cell : report.cells)
            if (cell.degree == report.surjection_at(cell.k) && cell.induced_map_surjective &&
                !cell.induced_map_iso && cell.dim_from != cell.dim_to)
                sharp_ks.push_back(cell.k);
        if (!sharp_ks.empty()) {
            std::cout << "note: surjective but not an isomorphism at the boundary degree for k in {";
            for (size_t i = 0; i < sharp_ks.size(); ++i)
                std::cout << (i ? "," : "") << sharp_ks[i];
            std::cout << "}; the predicted range is sharp here\n";
        }
        std::cout << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
        if (!report.pass) std::cout << "first counterexample: " << report.first_counterexample << "\n";
    }
    return report.pass ? kExitOk : kExitVerdictFail;
}

int cmd_check(const std::string& manifold, const std::vector<std::string>& raw_params,
              const std::string& variant_text, int k_max, const std::string& format) {
    CohomologyModel model = load_manifold(manifold, raw_params);
    Variant variant;
    try {
        variant = variant_from_cli(variant_text, model.n);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitValidation, e.what()};
    }
    auto outcomes = run_oracle_suite(model, variant, k_max);
    bool all_agree = true;
    for (const auto& o : outcomes) all_agree = all_agree && o.agree;

    if (format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& o : outcomes)
            doc.push_back({{"name", o.name},
                           {"inputs", o.inputs},
                           {"pipeline", o.pipeline_value},
                           {"oracle", o.oracle_value},
                           {"agree", o.agree}});
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& o : outcomes) {
            std::cout << (o.agree ? "[ok]      " : "[MISMATCH]") << " " << o.name << "  "
                      << o.inputs;
            if (!o.agree) std::cout << "\n    pipeline: " << o.pipeline_value
                                    << "\n    oracle:   " << o.oracle_value;
            std::cout << "\n";
        }
        std::cout << (all_agree ? "all oracles agree" : "oracle disagreement found") << "\n";
    }
    return all_agree ? kExitOk : kExitVerdictFail;
}

int cmd_presets(const std::string& format, const std::string& filter) {
    std::vector<PresetInfo> infos;
    for (const auto& info : preset_catalogue()) {
        if (!filter.empty() && info.name.find(filter) == std::string::npos) continue;
        infos.push_back(info);
    }
    if (format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& info : infos)
            doc.push_back({{"name", info.name},
                           {"params", info.params},
                           {"description", info.description}});
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& info : infos) {
            std::cout << std::left << std::setw(24) << info.name << std::setw(16) << info.params
                      << info.description << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of unordered configuration spaces from a finite presentation of "
                 "compactly supported cohomology"};
    app.require_subcommand(1);

    std::string manifold, k_spec = "0..6", variant = "standard", format = "table", filter;
    std::vector<std::string> params;
    bool dense = false, raw_degrees = false;
    int k_max = 6, k_cap = kDefaultWeightCap;

    auto* betti_cmd = app.add_subcommand("betti", "Betti table of B_k(M) over a weight range");
    betti_cmd->add_option("--manifold", manifold, "preset name or model file path")->required();
    betti_cmd->add_option("--param", params, "preset parameters, e.g. n=3,m=2");
    betti_cmd->add_option("--k", k_spec, "weight: N or A..B (inclusive)");
    betti_cmd->add_option("--variant", variant, "standard|twisted|relative");
    betti_cmd->add_option("--format", format, "table|csv|json");
    betti_cmd->add_flag("--dense", dense, "include zero rows");
    betti_cmd->add_flag("--raw-degrees", raw_degrees, "report CE degrees instead of space degrees");
    betti_cmd->add_option("--kcap", k_cap, "largest accepted weight");

    auto* stab_cmd = app.add_subcommand("stability", "verify the stable ranges of the cap map");
    stab_cmd->add_option("--manifold", manifold, "preset name or model file path")->required();
    stab_cmd->add_option("--param", params, "preset parameters");
    stab_cmd->add_option("--kmax", k_max, "largest weight tested");
    stab_cmd->add_option("--format", format, "table|csv|json");

    auto* check_cmd = app.add_subcommand("check", "run the oracle cross-check suite");
    check_cmd->add_option("--manifold", manifold, "preset name or model file path")->required();
    check_cmd->add_option("--param", params, "preset parameters");
    check_cmd->add_option("--variant", variant, "standard|twisted|relative");
    check_cmd->add_option("--kmax", k_max, "largest weight tested");
    check_cmd->add_option("--format", format, "table|csv|json");

    auto* presets_cmd = app.add_subcommand("presets", "list the shipped manifold presets");
    presets_cmd->add_option("--format", format, "table|json");
    presets_cmd->add_option("--filter", filter, "substring filter");

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti_cmd->parsed())
            return cmd_betti(manifold, params, k_spec, variant, format, dense, raw_degrees, k_cap);
        if (stab_cmd->parsed()) return cmd_stability(manifold, params, k_max, format);
        if (check_cmd->parsed()) return cmd_check(manifold, params, variant, k_max, format);
        if (presets_cmd->parsed()) return cmd_presets(format, filter);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
