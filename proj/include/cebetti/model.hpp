#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cebetti/rational.hpp"

namespace cebetti {

/// Which coefficient system a cohomology class lives in. Twisted means the
/// orientation local system.
enum class Sheaf { Untwisted, Twisted };

/// Identifies one basis class of the compactly supported cohomology input:
/// sheaf, cohomological degree, and position within that degree's basis.
struct CohomologyClassRef {
    Sheaf sheaf = Sheaf::Untwisted;
    int degree = 0;
    int index = 0;
    std::string label;

    friend bool operator==(const CohomologyClassRef&, const CohomologyClassRef&) = default;
};

/// (degree, index) key; the canonical order on classes within one sheaf.
using ClassKey = std::pair<int, int>;

struct ProductTerm {
    std::string label;  // an untwisted class
    Rational coeff;

    friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

/// One stored cup product value on a pair of basis classes. Values are
/// formal rational combinations of untwisted classes.
struct ProductEntry {
    std::string left, right;
    std::vector<ProductTerm> terms;

    friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

enum class ProductKind { TwistedTwisted, UntwistedUntwisted };

/// Finite presentation of H_c^-*(M;Q) and H_c^-*(M;Q^w) with cup-product
/// structure constants. This is the sole mathematical input of the library.
///
/// `connected` asserts that the top twisted group H_c^n(M;Q^w) is spanned by
/// the dual class of a point (true for a connected manifold without
/// boundary); it gates the stabilization machinery.
/// `orientable_surface` declares the stable-range class used by the
/// stability verifier; presets set it, custom files must declare it.
struct CohomologyModel {
    std::string name;
    int n = 1;
    bool connected = false;
    bool orientable_surface = false;
    std::map<std::string, long> params;  // preset parameters, empty for custom models

    // degree -> ordered labels of basis classes in that degree
    std::map<int, std::vector<std::string>> untwisted;
    std::map<int, std::vector<std::string>> twisted;

    std::vector<ProductEntry> ww_products;  // twisted x twisted -> untwisted
    std::vector<ProductEntry> uu_products;  // untwisted x untwisted -> untwisted

    int dim(Sheaf sheaf, int degree) const;
    std::vector<CohomologyClassRef> classes(Sheaf sheaf) const;  // ordered by (degree, index)
    std::optional<CohomologyClassRef> find_label(Sheaf sheaf, const std::string& label) const;

    friend bool operator==(const CohomologyModel&, const CohomologyModel&) = default;
};

/// A broken invariant, reported as data rather than thrown.
struct Violation {
    std::string field;
    std::string rule;
    std::string message;
};

/// Empty iff the model satisfies every structural invariant: resolvable
/// product references, degree additivity, graded commutativity of the
/// symmetric completion, degrees within [0, n], unique labels, and the
/// connectedness condition on H_c^n(M;Q^w).
std::vector<Violation> validate(const CohomologyModel& model);

/// Product table in resolved, canonically ordered form. Entries are keyed by
/// class keys with left <= right; the graded-commutative mirror is generated
/// on lookup, never stored.
class ResolvedProducts {
public:
    ResolvedProducts() = default;

    /// Builds from raw entries; throws std::invalid_argument on unresolved
    /// labels or on entries that contradict graded commutativity (validate()
    /// reports the same issues as data).
    ResolvedProducts(const CohomologyModel& model, ProductKind kind);

    /// Cup product of the two input classes as a combination of untwisted
    /// classes; arguments in either order.
    std::vector<std::pair<CohomologyClassRef, Rational>> lookup(const CohomologyClassRef& a,
                                                                const CohomologyClassRef& b) const;

private:
    std::map<std::pair<ClassKey, ClassKey>, std::vector<std::pair<CohomologyClassRef, Rational>>>
        table_;
};

/// Model for a closed orientable n-manifold from its cohomology ring: the
/// orientation system is trivial, so twisted data equals untwisted data and
/// H_c = H^*. The ring's top degree must be one-dimensional.
CohomologyModel closed_orientable_from_ring(const std::string& name, int n,
                                            const std::map<int, std::vector<std::string>>& classes,
                                            const std::vector<ProductEntry>& ring);

/// Canonical serialization; parse(serialize(m)) == m.
std::string serialize_model(const CohomologyModel& model);

/// Thrown by parse_model_file with a human-readable location.
class ModelParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the documented JSON model format. Unknown fields are an error.
CohomologyModel parse_model_file(const std::string& text);

/// Content hash of the canonical serialization; cache key material.
std::uint64_t model_hash(const CohomologyModel& model);

}  // namespace cebetti
