#pragma once

#include <optional>

#include "cebetti/sparse.hpp"

namespace cebetti {

/// Raised when a caller breaks an exact-linear-algebra contract
/// (non-composable complexes, a map that is not a chain map, ...).
class LinalgContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank of m over Q, computed exactly by fraction-free elimination.
int rank(const SparseMatrix& m);

/// Basis of { v : m v = 0 }. Dimension is always cols(m) - rank(m); basis
/// vectors are normalized so each free coordinate carries a 1, ordered by
/// ascending free column.
SubspaceBasis kernel_basis(const SparseMatrix& m);

/// Basis of the column span of m: the independent columns, in ascending
/// column order.
SubspaceBasis image_basis(const SparseMatrix& m);

/// dim ker(d_out) - rank(d_in) for one slot of a chain complex. Requires
/// rows(d_in) == cols(d_out) and d_out * d_in == 0.
int homology_dims(const SparseMatrix& d_in, const SparseMatrix& d_out);

/// True iff v lies in the rational span of basis.vectors.
bool in_span(const SubspaceBasis& basis, const SparseVector& v);

/// Solve sum_i x_i * basis[i] = v when v lies in the span; nullopt otherwise.
/// The basis vectors must be independent for the coordinates to be unique.
std::optional<std::vector<Rational>> coordinates_in_span(const SubspaceBasis& basis,
                                                         const SparseVector& v);

/// Greedily extends `base` (assumed independent) by those vectors from
/// `candidates` that raise the rank, in order. Returns the indices of the
/// chosen candidates.
std::vector<int> extend_basis(const SubspaceBasis& base, const std::vector<SparseVector>& candidates);

/// Matrix of the map induced on homology quotients by the chain-level map f.
/// src_cycles/dst_cycles span the cycle spaces, src_boundaries/dst_boundaries
/// the boundary subspaces. The quotient basis on each side consists of the
/// cycle vectors that extend the boundary basis, chosen greedily in the given
/// order. Reports a contract violation if f fails to carry cycles to cycles
/// or boundaries to boundaries.
SparseMatrix induced_map_on_quotients(const SparseMatrix& f, const SubspaceBasis& src_cycles,
                                      const SubspaceBasis& src_boundaries,
                                      const SubspaceBasis& dst_cycles,
                                      const SubspaceBasis& dst_boundaries);

}  // namespace cebetti
