#pragma once

#include <optional>

#include "cebetti/model.hpp"

namespace cebetti {

/// Which homology the pipeline reports.
///   Standard     -> H_*(B_k(M);Q)
///   TwistedEven  -> H_*(B_k(M);Q^w), n even
///   TwistedOdd   -> H_*(B_k(M);Q^w), n odd (output reindexed by weight)
///   Relative     -> reduced H_*(B_k(M,dM);Q) for a manifold with boundary
enum class Variant { Standard, TwistedEven, TwistedOdd, Relative };

std::string variant_name(Variant v);

/// Parses "standard" / "twisted" / "relative"; "twisted" resolves by the
/// parity of n.
Variant variant_from_cli(const std::string& text, int n);

/// One suspended generator of the weight-graded Lie model. ce_degree is the
/// homological degree inside Sym(g[1]); odd-degree generators are exterior
/// (exponent at most 1), even-degree generators polynomial.
struct CEGenerator {
    int id = 0;
    CohomologyClassRef source;
    int weight = 1;  // 1 or 2
    int ce_degree = 0;
};

using BracketTerms = std::vector<std::pair<int, Rational>>;  // weight-2 ids with coefficients

/// Weight-graded two-step nilpotent Lie algebra presented by suspended
/// generators and structure constants. Brackets exist only from weight-1
/// pairs into weight-2; they are stored on ordered pairs (i <= j) and the
/// graded mirror is generated with the Koszul sign.
struct LieModel {
    Variant variant = Variant::Standard;
    int n = 1;
    std::vector<CEGenerator> generators;              // all weights, sorted by id
    std::map<std::pair<int, int>, BracketTerms> bracket;  // key (i, j) with i <= j
    std::optional<int> p_generator;                   // dual class of a point, when it exists
    int degree_offset_per_weight = 0;                 // 1 only for TwistedOdd

    // Build metadata consumed by the stability verifier.
    bool orientable_surface_hint = false;  // stable-range class declared on the model
    bool orientable_hint = false;          // twisted data coincides with untwisted data
    int low_degree_vanishing_order = 1;    // smallest i >= 1 with H_i(M;Q) != 0, n+1 if none

    const CEGenerator& generator(int id) const;
    std::vector<int> weight1_ids() const;
    std::vector<int> weight2_ids() const;

    /// Configuration-space degree reported for a CE degree at weight k.
    int reported_degree(int ce_degree, int k) const {
        return ce_degree - k * degree_offset_per_weight;
    }

    /// Stable content hash (generators, degrees, weights, brackets, variant).
    std::uint64_t content_hash() const;
};

class LieBuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds the Lie model a theorem variant attaches to a cohomology model.
/// Requires validate(model) to be empty and the variant's parity constraint
/// to hold.
LieModel build_lie_model(const CohomologyModel& model, Variant variant);

/// Bracket of two weight-1 generators as a combination of weight-2 ids;
/// the stored orientation for i <= j, the Koszul mirror otherwise. Throws if
/// either id is not weight 1.
BracketTerms bracket_eval(const LieModel& lm, int i, int j);

/// Rebuilds the model with generator ids relabeled by perm (old id ->
/// new id). Betti tables are invariant under this; used by property tests.
LieModel permute_generators(const LieModel& lm, const std::vector<int>& perm);

/// Rescales one generator by a nonzero rational, adjusting structure
/// constants to match. Betti tables are invariant under this.
LieModel rescale_generator(const LieModel& lm, int id, const Rational& factor);

}  // namespace cebetti
