#include "cebetti/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cebetti {

namespace {

// Fraction-free (Bareiss-style) elimination over arbitrary-precision
// integers. Rows are scaled to clear denominators up front; row scaling
// changes neither rank nor kernel.
//
// Rows without an entry in the pivot column are skipped entirely. A skipped
// row differs from the fully updated Bareiss row only by the scalar
// P_t / P_{g}, where g is the step of its last combine and P_s the true
// pivot sequence; tracking g per row and the P_s history restores the exact
// Bareiss update at the next combine:
//     new_i = (P_t * row_i * P_{g_r} - row_i[c] * row_r * P_{t-1})
//             / (P_{g_i} * P_{g_r}),
// with every division exact.
class Elimination {
public:
    explicit Elimination(const SparseMatrix& m) : n_rows_(m.rows()), n_cols_(m.cols()) {
        rows_.resize(n_rows_);
        generation_.assign(n_rows_, 0);
        frozen_.assign(n_rows_, false);
        pivot_history_.push_back(1);
        // Clear denominators row by row.
        std::vector<BigInt> row_lcm(n_rows_, BigInt(1));
        for (const auto& [rc, v] : m.entries())
            row_lcm[rc.first] = boost::multiprecision::lcm(row_lcm[rc.first], v.den());
        for (const auto& [rc, v] : m.entries()) {
            BigInt scaled = v.num() * (row_lcm[rc.first] / v.den());
            if (scaled != 0) rows_[rc.first][rc.second] = std::move(scaled);
        }
        run();
    }

    int rank() const { return static_cast<int>(pivot_rows_.size()); }
    const std::vector<int>& pivot_rows() const { return pivot_rows_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

    /// Columns that never served as pivots, ascending.
    std::vector<int> free_cols() const {
        std::vector<bool> is_pivot(n_cols_, false);
        for (int c : pivot_cols_) is_pivot[c] = true;
        std::vector<int> out;
        for (int c = 0; c < n_cols_; ++c)
            if (!is_pivot[c]) out.push_back(c);
        return out;
    }

    /// Kernel vector with a 1 at the given free column, solved by back
    /// substitution through the frozen pivot rows in reverse order.
    SparseVector kernel_vector(int free_col) const {
        SparseVector v(n_cols_);
        v.set(free_col, Rational(1));
        for (int t = static_cast<int>(pivot_rows_.size()) - 1; t >= 0; --t) {
            const auto& row = rows_[pivot_rows_[t]];
            int pc = pivot_cols_[t];
            Rational acc(0);
            for (const auto& [c, a] : row) {
                if (c == pc) continue;
                Rational xc = v.at(c);
                if (!xc.is_zero()) acc += Rational(a) * xc;
            }
            auto pv = row.find(pc);
            v.set(pc, -(acc / Rational(pv->second)));
        }
        return v;
    }

private:
    void run() {
        while (true) {
            long best_score = std::numeric_limits<long>::max();
            int pr = -1, pc = -1;
            std::vector<int> col_count(n_cols_, 0);
            for (int r = 0; r < n_rows_; ++r) {
                if (frozen_[r]) continue;
                for (const auto& [c, a] : rows_[r]) ++col_count[c];
            }
            for (int r = 0; r < n_rows_; ++r) {
                if (frozen_[r]) continue;
                long row_nnz = static_cast<long>(rows_[r].size());
                for (const auto& [c, a] : rows_[r]) {
                    long score = row_nnz + col_count[c];
                    if (score < best_score) {
                        best_score = score;
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr < 0) break;

            const int step = static_cast<int>(pivot_history_.size());  // this is step t
            const BigInt& prev_pivot = pivot_history_[step - 1];
            const BigInt& pivot_gen_value = pivot_history_[generation_[pr]];
            BigInt true_pivot = exact_div(rows_[pr].at(pc) * prev_pivot, pivot_gen_value);

            for (int r = 0; r < n_rows_; ++r) {
                if (frozen_[r] || r == pr) continue;
                auto hit = rows_[r].find(pc);
                if (hit == rows_[r].end()) continue;  // untouched; generation lags
                combine(rows_[r], rows_[pr], hit->second, true_pivot, pivot_gen_value, prev_pivot,
                        pivot_history_[generation_[r]] * pivot_gen_value);
                generation_[r] = step;
            }
            frozen_[pr] = true;
            pivot_rows_.push_back(pr);
            pivot_cols_.push_back(pc);
            pivot_history_.push_back(std::move(true_pivot));
        }
    }

    static BigInt exact_div(const BigInt& value, const BigInt& divisor) {
        BigInt q, r;
        boost::multiprecision::divide_qr(value, divisor, q, r);
        if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
        return q;
    }

    // row <- (P_t * row * P_{g_r} - row[c] * pivot_row * P_{t-1}) / divisor.
    static void combine(std::map<int, BigInt>& row, const std::map<int, BigInt>& pivot_row,
                        const BigInt& factor, const BigInt& true_pivot, const BigInt& pivot_gen,
                        const BigInt& prev_pivot, const BigInt& divisor) {
        const BigInt row_scale = true_pivot * pivot_gen;
        const BigInt pivot_scale = factor * prev_pivot;
        std::map<int, BigInt> out;
        auto it_a = row.begin();
        auto it_b = pivot_row.begin();
        auto emit = [&](int col, BigInt value) {
            BigInt q = exact_div(value, divisor);
            if (q != 0) out.emplace(col, std::move(q));
        };
        while (it_a != row.end() || it_b != pivot_row.end()) {
            if (it_b == pivot_row.end() || (it_a != row.end() && it_a->first < it_b->first)) {
                emit(it_a->first, row_scale * it_a->second);
                ++it_a;
            } else if (it_a == row.end() || it_b->first < it_a->first) {
                emit(it_b->first, -pivot_scale * it_b->second);
                ++it_b;
            } else {
                emit(it_a->first, row_scale * it_a->second - pivot_scale * it_b->second);
                ++it_a;
                ++it_b;
            }
        }
        row = std::move(out);
    }

    int n_rows_, n_cols_;
    std::vector<std::map<int, BigInt>> rows_;
    std::vector<int> generation_;
    std::vector<bool> frozen_;
    std::vector<BigInt> pivot_history_;  // P_0 = 1, then the true pivot at each step
    std::vector<int> pivot_rows_, pivot_cols_;
};

}  // namespace

int rank(const SparseMatrix& m) { return Elimination(m).rank(); }

SubspaceBasis kernel_basis(const SparseMatrix& m) {
    Elimination e(m);
    SubspaceBasis basis;
    basis.ambient_dim = m.cols();
    for (int f : e.free_cols()) basis.vectors.push_back(e.kernel_vector(f));
    return basis;
}

SubspaceBasis image_basis(const SparseMatrix& m) {
    Elimination e(m);
    std::vector<int> cols = e.pivot_cols();
    std::sort(cols.begin(), cols.end());
    SubspaceBasis basis;
    basis.ambient_dim = m.rows();
    for (int c : cols) basis.vectors.push_back(m.column(c));
    return basis;
}

int homology_dims(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw LinalgContractError("homology_dims: differentials do not compose");
    if (!(d_out * d_in).is_zero())
        throw LinalgContractError("homology_dims: d_out * d_in is nonzero");
    int ker = d_out.cols() - rank(d_out);
    return ker - rank(d_in);
}

namespace {

// Incremental rational row reducer used for span tests and basis extension.
class SpanReducer {
public:
    // Reduce v against accepted rows; if a nonzero residue remains, keep it
    // and report true.
    bool absorb(const SparseVector& v) {
        SparseVector r = reduce(v);
        if (r.is_zero()) return false;
        int lead = r.coords().begin()->first;
        rows_.push_back({lead, std::move(r)});
        return true;
    }

    bool contains(const SparseVector& v) { return reduce(v).is_zero(); }

private:
    SparseVector reduce(const SparseVector& v) const {
        SparseVector r = v;
        for (const auto& [lead, row] : rows_) {
            Rational c = r.at(lead);
            if (c.is_zero()) continue;
            r.axpy(-(c / row.at(lead)), row);
        }
        return r;
    }

    std::vector<std::pair<int, SparseVector>> rows_;
};

}  // namespace

bool in_span(const SubspaceBasis& basis, const SparseVector& v) {
    if (v.dim() != basis.ambient_dim) throw LinalgContractError("in_span: ambient mismatch");
    SpanReducer red;
    for (const auto& b : basis.vectors) red.absorb(b);
    return red.contains(v);
}

std::optional<std::vector<Rational>> coordinates_in_span(const SubspaceBasis& basis,
                                                         const SparseVector& v) {
    if (v.dim() != basis.ambient_dim)
        throw LinalgContractError("coordinates_in_span: ambient mismatch");
    const int n = basis.count();
    // Row-reduce the system [basis | v] over the coordinates that occur.
    // Each working row is (coefficient vector over basis indices, rhs).
    std::map<int, std::pair<SparseVector, Rational>> eqs;  // ambient coord -> equation
    auto touch = [&](int i) -> std::pair<SparseVector, Rational>& {
        auto it = eqs.find(i);
        if (it == eqs.end()) it = eqs.emplace(i, std::make_pair(SparseVector(n), Rational(0))).first;
        return it->second;
    };
    for (int j = 0; j < n; ++j)
        for (const auto& [i, val] : basis.vectors[j].coords()) touch(i).first.set(j, val);
    for (const auto& [i, val] : v.coords()) touch(i).second = val;

    std::vector<std::pair<SparseVector, Rational>> rows;
    rows.reserve(eqs.size());
    for (auto& [i, eq] : eqs) rows.push_back(std::move(eq));

    std::vector<int> pivot_row_of(n, -1);
    std::vector<bool> used(rows.size(), false);
    for (int j = 0; j < n; ++j) {
        int pr = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            if (!rows[r].first.at(j).is_zero()) {
                pr = static_cast<int>(r);
                break;
            }
        }
        if (pr < 0) continue;
        used[pr] = true;
        pivot_row_of[j] = pr;
        Rational p = rows[pr].first.at(j);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pr) continue;
            Rational c = rows[r].first.at(j);
            if (c.is_zero()) continue;
            Rational f = -(c / p);
            rows[r].first.axpy(f, rows[pr].first);
            rows[r].second += f * rows[pr].second;
        }
    }
    // Inconsistent leftover row means v is outside the span.
    for (size_t r = 0; r < rows.size(); ++r)
        if (!used[r] && rows[r].first.is_zero() && !rows[r].second.is_zero()) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (int j = 0; j < n; ++j) {
        if (pivot_row_of[j] < 0) continue;  // dependent basis column; coordinate stays 0
        const auto& [coeffs, rhs] = rows[pivot_row_of[j]];
        x[j] = rhs / coeffs.at(j);
    }
    // Verify: required when the "basis" is dependent or v is outside the span.
    SparseVector check(basis.ambient_dim);
    for (int j = 0; j < n; ++j) check.axpy(x[j], basis.vectors[j]);
    for (const auto& [i, val] : v.coords())
        if (check.at(i) != val) return std::nullopt;
    for (const auto& [i, val] : check.coords())
        if (v.at(i) != val) return std::nullopt;
    return x;
}

std::vector<int> extend_basis(const SubspaceBasis& base, const std::vector<SparseVector>& candidates) {
    SpanReducer red;
    for (const auto& b : base.vectors) red.absorb(b);
    std::vector<int> chosen;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (red.absorb(candidates[i])) chosen.push_back(static_cast<int>(i));
    return chosen;
}

SparseMatrix induced_map_on_quotients(const SparseMatrix& f, const SubspaceBasis& src_cycles,
                                      const SubspaceBasis& src_boundaries,
                                      const SubspaceBasis& dst_cycles,
                                      const SubspaceBasis& dst_boundaries) {
    if (f.cols() != src_cycles.ambient_dim || f.rows() != dst_cycles.ambient_dim)
        throw LinalgContractError("induced_map_on_quotients: shape mismatch");

    for (const auto& z : src_cycles.vectors)
        if (!in_span(dst_cycles, f.apply(z)))
            throw LinalgContractError("induced_map_on_quotients: map does not preserve cycles");
    for (const auto& b : src_boundaries.vectors)
        if (!in_span(dst_boundaries, f.apply(b)))
            throw LinalgContractError("induced_map_on_quotients: map does not preserve boundaries");

    std::vector<int> src_reps = extend_basis(src_boundaries, src_cycles.vectors);
    std::vector<int> dst_reps = extend_basis(dst_boundaries, dst_cycles.vectors);

    // Mixed basis: boundaries first, then homology representatives.
    SubspaceBasis mixed;
    mixed.ambient_dim = dst_cycles.ambient_dim;
    mixed.vectors = dst_boundaries.vectors;
    for (int i : dst_reps) mixed.vectors.push_back(dst_cycles.vectors[i]);

    const int nb = dst_boundaries.count();
    SparseMatrix out(static_cast<int>(dst_reps.size()), static_cast<int>(src_reps.size()));
    for (size_t j = 0; j < src_reps.size(); ++j) {
        SparseVector w = f.apply(src_cycles.vectors[src_reps[j]]);
        auto coords = coordinates_in_span(mixed, w);
        if (!coords)
            throw LinalgContractError("induced_map_on_quotients: image escapes the target cycles");
        for (size_t i = 0; i < dst_reps.size(); ++i)
            out.set(static_cast<int>(i), static_cast<int>(j), (*coords)[nb + i]);
    }
    return out;
}

}  // namespace cebetti
