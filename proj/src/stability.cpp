#include "cebetti/stability.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cebetti {

CapMap cap_map(const LieModel& lm, const WeightSlice& from, const WeightSlice& to) {
    if (!lm.p_generator)
        throw StabilityError(
            "cap_map: model has no dual class of a point (disconnected model or a variant "
            "without the twisted top class)");
    if (from.k != to.k + 1) throw StabilityError("cap_map: slices are not consecutive weights");
    const int p = *lm.p_generator;

    CapMap cap;
    cap.k = to.k;
    std::set<int> degrees;
    for (const auto& [d, _] : from.bases) degrees.insert(d);
    for (const auto& [d, _] : to.bases) degrees.insert(d);
    for (int d : degrees) {
        SparseMatrix m(to.dim(d), from.dim(d));
        auto it = from.bases.find(d);
        if (it != from.bases.end()) {
            for (int col = 0; col < static_cast<int>(it->second.size()); ++col) {
                const Monomial& mono = it->second[col];
                int r = mono.exponent_of(p);
                if (r == 0) continue;
                Monomial target;
                for (const auto& [id, e] : mono.exponents) {
                    int left = id == p ? e - 1 : e;
                    if (left > 0) target.exponents.push_back({id, left});
                }
                int row = to.index_of(d, target);
                if (row < 0)
                    throw StabilityError("cap_map: d/dp image missing from the target basis");
                m.set(row, col, Rational(r));
            }
        }
        cap.by_degree.emplace(d, std::move(m));
    }

    // Chain-map identity: cap . D = D . cap, degree by degree, exactly.
    for (const auto& [d, cap_d] : cap.by_degree) {
        auto below = cap.by_degree.find(d - 1);
        const SparseMatrix& cap_below =
            below == cap.by_degree.end() ? SparseMatrix(to.dim(d - 1), from.dim(d - 1))
                                         : below->second;
        SparseMatrix lhs = to.differential(d) * cap_d;
        SparseMatrix rhs = cap_below * from.differential(d);
        if (!(lhs == rhs))
            throw StabilityError("cap_map: cap fails the chain-map identity at degree " +
                                 std::to_string(d));
    }
    return cap;
}

CapMap cap_map(SliceStore& store, int k) {
    auto from = store.slice(k + 1);
    auto to = store.slice(k);
    return cap_map(store.lie_model(), *from, *to);
}

bool check_surjectivity(SliceStore& store, int k) {
    CapMap cap = cap_map(store, k);
    for (const auto& [d, m] : cap.by_degree)
        if (rank(m) != m.rows()) return false;
    return true;
}

StabilityReport verify_stability(SliceStore& store, int k_max) {
    const LieModel& lm = store.lie_model();
    if (lm.variant != Variant::Standard)
        throw StabilityError("verify_stability: stability applies to the standard variant");
    if (lm.n <= 1) throw StabilityError("verify_stability: needs manifold dimension n > 1");
    if (!lm.p_generator)
        throw StabilityError("verify_stability: needs a connected model (dual class of a point)");

    StabilityReport report;
    report.orientable_surface = lm.orientable_surface_hint;

    {
        std::ostringstream os;
        if (report.orientable_surface)
            os << "orientable surface: isomorphism for degree < k, surjection at degree = k";
        else
            os << "general case: isomorphism for degree <= k, surjection at degree = k+1";
        report.predicted_range = os.str();
    }

    // Vanishing low Betti numbers of M sharpen the range for orientable
    // models: with H_i(M)=0 for 1 <= i <= r-1, the map is an isomorphism
    // through degree r*k - 1.
    if (lm.orientable_hint && !report.orientable_surface && lm.low_degree_vanishing_order > 1) {
        std::ostringstream os;
        os << "H_i(M;Q) vanishes for 1 <= i <= " << (lm.low_degree_vanishing_order - 1)
           << ": isomorphism through degree " << lm.low_degree_vanishing_order << "*k - 1";
        report.improved_range = os.str();
    }

    report.pass = true;
    for (int k = 0; k <= k_max; ++k) {
        report.k_range.push_back(k);
        auto from = store.slice(k + 1);
        auto to = store.slice(k);
        CapMap cap = cap_map(lm, *from, *to);

        int max_degree = std::max(from->max_degree(), to->max_degree());
        for (int d = 0; d <= max_degree; ++d) {
            auto [src_cycles, src_boundaries] = homology_basis(*from, d);
            auto [dst_cycles, dst_boundaries] = homology_basis(*to, d);
            StabilityCell cell;
            cell.k = k;
            cell.degree = d;
            cell.dim_from = src_cycles.count() - src_boundaries.count();
            cell.dim_to = dst_cycles.count() - dst_boundaries.count();
            cell.dims_equal = cell.dim_from == cell.dim_to;

            auto cap_it = cap.by_degree.find(d);
            SparseMatrix cap_d = cap_it == cap.by_degree.end()
                                     ? SparseMatrix(to->dim(d), from->dim(d))
                                     : cap_it->second;
            SparseMatrix induced =
                induced_map_on_quotients(cap_d, src_cycles, src_boundaries, dst_cycles,
                                         dst_boundaries);
            int r = rank(induced);
            cell.induced_map_surjective = r == cell.dim_to;
            cell.induced_map_iso = cell.dims_equal && r == cell.dim_to && r == cell.dim_from;
            report.cells.push_back(cell);

            bool in_iso_range = d <= report.iso_through(k);
            bool at_boundary = d == report.surjection_at(k);
            if (in_iso_range && !cell.induced_map_iso) {
                report.pass = false;
                if (report.first_counterexample.empty()) {
                    std::ostringstream os;
                    os << "expected isomorphism at k=" << k << ", degree=" << d << " (dims "
                       << cell.dim_from << " -> " << cell.dim_to << ")";
                    report.first_counterexample = os.str();
                }
            }
            if (at_boundary && !cell.induced_map_surjective) {
                report.pass = false;
                if (report.first_counterexample.empty()) {
                    std::ostringstream os;
                    os << "expected surjection at k=" << k << ", degree=" << d;
                    report.first_counterexample = os.str();
                }
            }
        }
    }
    return report;
}

}  // namespace cebetti
