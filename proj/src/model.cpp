#include "cebetti/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cebetti {

int CohomologyModel::dim(Sheaf sheaf, int degree) const {
    const auto& table = sheaf == Sheaf::Untwisted ? untwisted : twisted;
    auto it = table.find(degree);
    return it == table.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<CohomologyClassRef> CohomologyModel::classes(Sheaf sheaf) const {
    const auto& table = sheaf == Sheaf::Untwisted ? untwisted : twisted;
    std::vector<CohomologyClassRef> out;
    for (const auto& [degree, labels] : table)
        for (int i = 0; i < static_cast<int>(labels.size()); ++i)
            out.push_back({sheaf, degree, i, labels[i]});
    return out;
}

std::optional<CohomologyClassRef> CohomologyModel::find_label(Sheaf sheaf,
                                                              const std::string& label) const {
    for (const auto& ref : classes(sheaf))
        if (ref.label == label) return ref;
    return std::nullopt;
}

namespace {

Sheaf left_sheaf(ProductKind kind) {
    return kind == ProductKind::TwistedTwisted ? Sheaf::Twisted : Sheaf::Untwisted;
}

const char* table_name(ProductKind kind) {
    return kind == ProductKind::TwistedTwisted ? "ww_products" : "uu_products";
}

// Accumulates resolved product entries in canonical (left <= right) order,
// reporting problems through the sink. Shared by validate() and
// ResolvedProducts so the two cannot drift apart.
struct TableBuilder {
    const CohomologyModel& model;
    ProductKind kind;
    std::vector<Violation>* sink = nullptr;  // null: throw instead
    std::map<std::pair<ClassKey, ClassKey>, std::vector<std::pair<CohomologyClassRef, Rational>>>
        table{};
    std::set<std::pair<ClassKey, ClassKey>> seen_oriented{};  // as written, for duplicates

    void fail(const std::string& rule, const std::string& message) {
        if (sink)
            sink->push_back({table_name(kind), rule, message});
        else
            throw std::invalid_argument(std::string(table_name(kind)) + ": " + message);
    }

    static std::vector<std::pair<CohomologyClassRef, Rational>> combine(
        const std::vector<std::pair<CohomologyClassRef, Rational>>& terms, const Rational& scale) {
        std::map<ClassKey, std::pair<CohomologyClassRef, Rational>> acc;
        for (const auto& [ref, coeff] : terms) {
            auto key = ClassKey{ref.degree, ref.index};
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, std::make_pair(ref, coeff * scale));
            else
                it->second.second += coeff * scale;
        }
        std::vector<std::pair<CohomologyClassRef, Rational>> out;
        for (auto& [key, term] : acc)
            if (!term.second.is_zero()) out.push_back(std::move(term));
        return out;
    }

    void add(const ProductEntry& entry) {
        auto left = model.find_label(left_sheaf(kind), entry.left);
        auto right = model.find_label(left_sheaf(kind), entry.right);
        if (!left || !right) {
            fail("resolvable-references", "product references undeclared class '" +
                                              (left ? entry.right : entry.left) + "'");
            return;
        }
        std::vector<std::pair<CohomologyClassRef, Rational>> terms;
        bool ok = true;
        for (const auto& term : entry.terms) {
            auto ref = model.find_label(Sheaf::Untwisted, term.label);
            if (!ref) {
                fail("resolvable-references",
                     "product result references undeclared untwisted class '" + term.label + "'");
                ok = false;
                continue;
            }
            if (ref->degree != left->degree + right->degree) {
                fail("degree-additivity", "product " + entry.left + " * " + entry.right +
                                              " lands in degree " + std::to_string(ref->degree) +
                                              ", expected " +
                                              std::to_string(left->degree + right->degree));
                ok = false;
                continue;
            }
            if (!term.coeff.is_zero()) terms.push_back({*ref, term.coeff});
        }
        if (!ok) return;
        terms = combine(terms, Rational(1));

        auto lk = ClassKey{left->degree, left->index};
        auto rk = ClassKey{right->degree, right->index};
        if (!seen_oriented.insert({lk, rk}).second) {
            fail("no-duplicate-pairs",
                 "duplicate product entry for (" + entry.left + ", " + entry.right + ")");
            return;
        }
        // Koszul sign of swapping the two inputs.
        bool sign_flip = (left->degree % 2 != 0) && (right->degree % 2 != 0);
        if (lk == rk && sign_flip && !terms.empty()) {
            fail("graded-commutativity", "odd-degree class " + entry.left +
                                             " has a nonzero square, forbidden by graded "
                                             "commutativity");
            return;
        }
        auto canonical_key = lk <= rk ? std::make_pair(lk, rk) : std::make_pair(rk, lk);
        auto canonical_terms =
            lk <= rk ? terms : combine(terms, sign_flip ? Rational(-1) : Rational(1));
        auto it = table.find(canonical_key);
        if (it != table.end()) {
            if (it->second != canonical_terms)
                fail("graded-commutativity", "entries for (" + entry.left + ", " + entry.right +
                                                 ") and its mirror disagree after the Koszul sign");
            return;
        }
        table.emplace(canonical_key, std::move(canonical_terms));
    }

    void build() {
        const auto& entries =
            kind == ProductKind::TwistedTwisted ? model.ww_products : model.uu_products;
        for (const auto& entry : entries) add(entry);
    }
};

}  // namespace

ResolvedProducts::ResolvedProducts(const CohomologyModel& model, ProductKind kind) {
    TableBuilder builder{.model = model, .kind = kind};
    builder.build();
    table_ = std::move(builder.table);
}

std::vector<std::pair<CohomologyClassRef, Rational>> ResolvedProducts::lookup(
    const CohomologyClassRef& a, const CohomologyClassRef& b) const {
    auto ak = ClassKey{a.degree, a.index};
    auto bk = ClassKey{b.degree, b.index};
    bool swapped = !(ak <= bk);
    auto key = swapped ? std::make_pair(bk, ak) : std::make_pair(ak, bk);
    auto it = table_.find(key);
    if (it == table_.end()) return {};
    auto out = it->second;
    if (swapped && a.degree % 2 != 0 && b.degree % 2 != 0)
        for (auto& [ref, coeff] : out) coeff = -coeff;
    return out;
}

std::vector<Violation> validate(const CohomologyModel& model) {
    std::vector<Violation> out;

    if (model.n < 1) out.push_back({"n", "positive-dimension", "manifold dimension must be >= 1"});

    for (Sheaf sheaf : {Sheaf::Untwisted, Sheaf::Twisted}) {
        const auto& table = sheaf == Sheaf::Untwisted ? model.untwisted : model.twisted;
        const char* field = sheaf == Sheaf::Untwisted ? "untwisted" : "twisted";
        std::set<std::string> labels;
        for (const auto& [degree, names] : table) {
            if (degree < 0 || degree > model.n)
                out.push_back({field, "degree-range",
                               "class degree " + std::to_string(degree) + " outside [0, " +
                                   std::to_string(model.n) + "]"});
            for (const auto& name : names)
                if (!labels.insert(name).second)
                    out.push_back({field, "unique-labels", "duplicate label '" + name + "'"});
        }
    }

    for (ProductKind kind : {ProductKind::TwistedTwisted, ProductKind::UntwistedUntwisted}) {
        TableBuilder builder{.model = model, .kind = kind, .sink = &out};
        builder.build();
    }

    if (model.connected && model.dim(Sheaf::Twisted, model.n) != 1)
        out.push_back({"connected", "point-class",
                       "connected model must have a one-dimensional H_c^n(M;Q^w); found dimension " +
                           std::to_string(model.dim(Sheaf::Twisted, model.n))});

    return out;
}

CohomologyModel closed_orientable_from_ring(const std::string& name, int n,
                                            const std::map<int, std::vector<std::string>>& classes,
                                            const std::vector<ProductEntry>& ring) {
    auto top = classes.find(n);
    int top_dim = top == classes.end() ? 0 : static_cast<int>(top->second.size());
    if (top_dim != 1)
        throw std::invalid_argument("closed_orientable_from_ring: top degree " + std::to_string(n) +
                                    " must be one-dimensional, found " + std::to_string(top_dim));
    CohomologyModel model;
    model.name = name;
    model.n = n;
    model.connected = true;
    model.orientable_surface = (n == 2);
    model.untwisted = classes;
    model.twisted = classes;
    model.uu_products = ring;
    model.ww_products = ring;
    return model;
}

std::uint64_t model_hash(const CohomologyModel& model) { return fnv1a(serialize_model(model)); }

}  // namespace cebetti
