#pragma once

#include "cebetti/ce.hpp"

namespace cebetti {

/// Result of one independent cross-check of the pipeline.
struct OracleOutcome {
    std::string name;
    std::string inputs;
    std::string pipeline_value;
    std::string oracle_value;
    bool agree = false;
};

/// Graded dimension table rendered canonically, e.g. "{0:1, 3:2}".
std::string dims_str(const std::map<int, int>& dims);

/// Graded dimension of the k-th symmetric power of a graded vector space
/// (odd degrees exterior, even degrees polynomial), by direct exponent-vector
/// enumeration. Deliberately shares no code with the slice enumerator.
std::map<int, int> sym_power_oracle(const std::map<int, int>& graded_dims, int k);

/// Closed forms for the homology of B_k of punctured Euclidean space.
std::map<int, int> punctured_euclidean_formula(int n, int m, int k);

/// Euclidean space without punctures.
std::map<int, int> euclidean_formula(int n, int k);

/// Once-punctured torus.
std::map<int, int> punctured_torus_formula(int k);

/// Untwisted homology of B_k of the connected sum of h projective planes,
/// assembled from the projective-plane tables.
std::map<int, int> nonorientable_surface_formula(int h, int k);

/// Twisted homology of B_k of the Klein bottle (also the twisted relative
/// table of the closed Moebius band, which has the same input ring).
std::map<int, int> klein_twisted_formula(int k);

/// Even-dimensional projective space, untwisted and twisted.
std::map<int, int> rp_even_formula(int n, int k);
std::map<int, int> rp_even_twisted_formula(int n, int k);

/// Closed Moebius band relative to its boundary (untwisted), and the open
/// band (untwisted / twisted).
std::map<int, int> moebius_closed_relative_formula(int k);
std::map<int, int> moebius_open_formula(int k);
std::map<int, int> moebius_open_twisted_formula(int k);

/// Runs every oracle applicable to (model, variant) for weights up to k_max:
/// the differential squares to zero, Euler characteristics agree, symmetric
/// powers in the odd-dimensional case, and the closed-form tables for preset
/// families that have them. Disagreements are outcomes, not errors.
std::vector<OracleOutcome> run_oracle_suite(const CohomologyModel& model, Variant variant,
                                            int k_max);

/// Parses a golden-table fixture document: a list of
/// {preset, params, variant, k, dims:{degree: dim}} records. Returns keys
/// "<preset-or-name>|<variant>|<k>" mapped to dimension tables.
std::map<std::string, std::map<int, int>> load_golden_tables(const std::string& text);

}  // namespace cebetti
