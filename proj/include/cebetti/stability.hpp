#pragma once

#include "cebetti/ce.hpp"

namespace cebetti {

/// Chain-level stabilization map from the weight-(k+1) slice to the weight-k
/// slice: formal differentiation with respect to the dual class of a point.
/// Degree 0, weight -1, and a chain map.
struct CapMap {
    int k = 0;                               // target weight
    std::map<int, SparseMatrix> by_degree;   // ce degree -> matrix C_d(k+1) -> C_d(k)
};

class StabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds the cap map between consecutive slices. Requires lm.p_generator;
/// verifies cap . D = D . cap exactly and throws on failure.
CapMap cap_map(const LieModel& lm, const WeightSlice& from, const WeightSlice& to);
CapMap cap_map(SliceStore& store, int k);

/// True iff the chain-level cap map onto the weight-k slice is surjective in
/// every degree.
bool check_surjectivity(SliceStore& store, int k);

/// Verdict for one (weight, degree) cell of the stability sweep.
struct StabilityCell {
    int k = 0;
    int degree = 0;
    int dim_from = 0;  // dim H_degree(B_{k+1})
    int dim_to = 0;    // dim H_degree(B_k)
    bool dims_equal = false;
    bool induced_map_iso = false;
    bool induced_map_surjective = false;
};

/// Outcome of the homological-stability verification: per-cell data plus a
/// verdict against the predicted stable range.
struct StabilityReport {
    std::vector<int> k_range;
    bool orientable_surface = false;
    std::string predicted_range;   // human-readable description of the claim checked
    std::string improved_range;    // non-empty when vanishing low Betti numbers sharpen it
    std::vector<StabilityCell> cells;
    bool pass = false;
    std::string first_counterexample;  // empty when pass

    /// Degrees where the map is an isomorphism for this k under the claim.
    int iso_through(int k) const { return orientable_surface ? k - 1 : k; }
    /// Boundary degree where only a surjection is claimed.
    int surjection_at(int k) const { return orientable_surface ? k : k + 1; }
};

/// Verifies the stable ranges on homology for every k <= k_max. Requires a
/// connected model, n > 1, and the Standard variant.
StabilityReport verify_stability(SliceStore& store, int k_max);

}  // namespace cebetti
