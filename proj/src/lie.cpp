#include "cebetti/lie.hpp"

#include <algorithm>
#include <sstream>

namespace cebetti {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::TwistedEven: return "twisted-even";
        case Variant::TwistedOdd: return "twisted-odd";
        case Variant::Relative: return "relative";
    }
    return "?";
}

Variant variant_from_cli(const std::string& text, int n) {
    if (text == "standard") return Variant::Standard;
    if (text == "relative") return Variant::Relative;
    if (text == "twisted") return n % 2 == 0 ? Variant::TwistedEven : Variant::TwistedOdd;
    throw std::invalid_argument("unknown variant '" + text + "' (use standard|twisted|relative)");
}

const CEGenerator& LieModel::generator(int id) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), id,
                               [](const CEGenerator& g, int v) { return g.id < v; });
    if (it == generators.end() || it->id != id)
        throw std::out_of_range("LieModel: unknown generator id " + std::to_string(id));
    return *it;
}

std::vector<int> LieModel::weight1_ids() const {
    std::vector<int> out;
    for (const auto& g : generators)
        if (g.weight == 1) out.push_back(g.id);
    return out;
}

std::vector<int> LieModel::weight2_ids() const {
    std::vector<int> out;
    for (const auto& g : generators)
        if (g.weight == 2) out.push_back(g.id);
    return out;
}

std::uint64_t LieModel::content_hash() const {
    std::ostringstream os;
    os << variant_name(variant) << "|" << n << "|" << degree_offset_per_weight << "|";
    for (const auto& g : generators)
        os << g.id << ":" << g.weight << ":" << g.ce_degree << ";";
    os << "|";
    for (const auto& [key, terms] : bracket) {
        os << key.first << "," << key.second << "->";
        for (const auto& [id, coeff] : terms) os << id << "*" << coeff.str() << "+";
        os << ";";
    }
    if (p_generator) os << "|p=" << *p_generator;
    return fnv1a(os.str());
}

namespace {

// g-degree (pre-suspension) of a generator; parity drives the Koszul signs
// in the bracket mirror.
int g_degree(const CEGenerator& g) { return g.ce_degree - 1; }

}  // namespace

LieModel build_lie_model(const CohomologyModel& model, Variant variant) {
    auto violations = validate(model);
    if (!violations.empty())
        throw LieBuildError("build_lie_model: model fails validation: " + violations[0].message);

    const int n = model.n;
    if (variant == Variant::TwistedEven && n % 2 != 0)
        throw LieBuildError("twisted-even variant needs even n");
    if (variant == Variant::TwistedOdd && n % 2 == 0)
        throw LieBuildError("twisted-odd variant needs odd n");

    LieModel lm;
    lm.variant = variant;
    lm.n = n;

    const bool standard_like = variant == Variant::Standard || variant == Variant::Relative;
    const Sheaf weight1_sheaf = standard_like ? Sheaf::Twisted : Sheaf::Untwisted;
    // Suspension shift of the weight-1 Lie generator; weight-2 sits at twice
    // the shift, and the CE suspension adds one more to every degree.
    const int shift = variant == Variant::TwistedOdd ? n : n - 1;
    const bool has_weight2 = shift % 2 != 0;  // the free Lie algebra is abelian otherwise

    int next_id = 0;
    for (const auto& ref : model.classes(weight1_sheaf))
        lm.generators.push_back({next_id++, ref, 1, shift + 1 - ref.degree});
    std::map<ClassKey, int> weight2_id_of;
    if (has_weight2) {
        for (const auto& ref : model.classes(Sheaf::Untwisted)) {
            weight2_id_of[{ref.degree, ref.index}] = next_id;
            lm.generators.push_back({next_id++, ref, 2, 2 * shift + 1 - ref.degree});
        }
    }

    if (has_weight2) {
        ResolvedProducts products(model, standard_like ? ProductKind::TwistedTwisted
                                                       : ProductKind::UntwistedUntwisted);
        auto w1 = lm.weight1_ids();
        for (size_t a = 0; a < w1.size(); ++a) {
            for (size_t b = a; b < w1.size(); ++b) {
                const auto& left = lm.generator(w1[a]);
                const auto& right = lm.generator(w1[b]);
                auto cup = products.lookup(left.source, right.source);
                if (cup.empty()) continue;
                // Tensor-bracket Koszul sign: the right factor's class moves
                // past the degree-`shift` Lie generator.
                Rational sign((shift % 2 != 0 && right.source.degree % 2 != 0) ? -1 : 1);
                BracketTerms terms;
                for (const auto& [ref, coeff] : cup) {
                    auto it = weight2_id_of.find({ref.degree, ref.index});
                    if (it == weight2_id_of.end())
                        throw LieBuildError("build_lie_model: unresolved product target '" +
                                            ref.label + "'");
                    terms.push_back({it->second, coeff * sign});
                }
                std::sort(terms.begin(), terms.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                lm.bracket[{w1[a], w1[b]}] = std::move(terms);
            }
        }
    }

    if (model.connected && standard_like) {
        for (const auto& g : lm.generators)
            if (g.weight == 1 && g.source.degree == n && g.ce_degree == 0) lm.p_generator = g.id;
    }

    if (variant == Variant::TwistedOdd) lm.degree_offset_per_weight = 1;

    lm.orientable_surface_hint = model.orientable_surface;
    lm.orientable_hint =
        model.twisted == model.untwisted && model.ww_products == model.uu_products;
    lm.low_degree_vanishing_order = n + 1;
    for (int i = 1; i <= n; ++i) {
        if (model.dim(Sheaf::Twisted, n - i) > 0) {  // dim H_i(M;Q) by twisted duality
            lm.low_degree_vanishing_order = i;
            break;
        }
    }
    return lm;
}

BracketTerms bracket_eval(const LieModel& lm, int i, int j) {
    if (lm.generator(i).weight != 1 || lm.generator(j).weight != 1)
        throw std::invalid_argument("bracket_eval: both arguments must be weight-1 generators");
    bool swapped = i > j;
    auto it = lm.bracket.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == lm.bracket.end()) return {};
    BracketTerms out = it->second;
    if (swapped) {
        // [y,x] = -(-1)^{|x||y|} [x,y] in g-degrees.
        bool koszul = (g_degree(lm.generator(i)) % 2 != 0) && (g_degree(lm.generator(j)) % 2 != 0);
        Rational sign(koszul ? 1 : -1);
        for (auto& [id, coeff] : out) coeff = coeff * sign;
    }
    return out;
}

LieModel permute_generators(const LieModel& lm, const std::vector<int>& perm) {
    if (perm.size() != lm.generators.size())
        throw std::invalid_argument("permute_generators: permutation size mismatch");
    LieModel out;
    out.variant = lm.variant;
    out.n = lm.n;
    out.degree_offset_per_weight = lm.degree_offset_per_weight;
    for (const auto& g : lm.generators) {
        CEGenerator h = g;
        h.id = perm[g.id];
        out.generators.push_back(h);
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const CEGenerator& a, const CEGenerator& b) { return a.id < b.id; });
    for (const auto& [key, terms] : lm.bracket) {
        int i = perm[key.first], j = perm[key.second];
        BracketTerms relabeled;
        for (const auto& [id, coeff] : terms) relabeled.push_back({perm[id], coeff});
        std::sort(relabeled.begin(), relabeled.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (i <= j) {
            out.bracket[{i, j}] = std::move(relabeled);
        } else {
            bool koszul = (g_degree(lm.generator(key.first)) % 2 != 0) &&
                          (g_degree(lm.generator(key.second)) % 2 != 0);
            Rational sign(koszul ? 1 : -1);
            for (auto& [id, coeff] : relabeled) coeff = coeff * sign;
            out.bracket[{j, i}] = std::move(relabeled);
        }
    }
    if (lm.p_generator) out.p_generator = perm[*lm.p_generator];
    return out;
}

LieModel rescale_generator(const LieModel& lm, int id, const Rational& factor) {
    if (factor.is_zero()) throw std::invalid_argument("rescale_generator: factor must be nonzero");
    LieModel out = lm;
    const bool is_weight2 = lm.generator(id).weight == 2;
    for (auto& [key, terms] : out.bracket) {
        for (auto& [target, coeff] : terms) {
            if (is_weight2) {
                // c' = factor * c, so coefficients on c divide by the factor.
                if (target == id) coeff = coeff / factor;
            } else {
                // x' = factor * x scales every bracket with x in it; twice if
                // both slots are x.
                if (key.first == id) coeff = coeff * factor;
                if (key.second == id) coeff = coeff * factor;
            }
        }
    }
    return out;
}

}  // namespace cebetti
