#include "cebetti/sparse.hpp"

namespace cebetti {

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
    // Bucket rhs by column so each output column is a sparse combination.
    std::vector<std::vector<std::pair<int, const Rational*>>> rhs_cols(rhs.cols_);
    for (const auto& [rc, v] : rhs.entries_) rhs_cols[rc.second].push_back({rc.first, &v});
    std::vector<std::vector<std::pair<int, const Rational*>>> lhs_cols(cols_);
    for (const auto& [rc, v] : entries_) lhs_cols[rc.second].push_back({rc.first, &v});

    SparseMatrix out(rows_, rhs.cols_);
    for (int c = 0; c < rhs.cols_; ++c) {
        std::map<int, Rational> acc;
        for (const auto& [mid, w] : rhs_cols[c])
            for (const auto& [r, v] : lhs_cols[mid]) acc[r] += (*v) * (*w);
        for (auto& [r, v] : acc)
            if (!v.is_zero()) out.entries_[{r, c}] = std::move(v);
    }
    return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("SparseMatrix: vector dim mismatch");
    SparseVector out(rows_);
    std::map<int, Rational> acc;
    for (const auto& [rc, val] : entries_) {
        auto it = v.coords().find(rc.second);
        if (it != v.coords().end()) acc[rc.first] += val * it->second;
    }
    for (auto& [r, val] : acc)
        if (!val.is_zero()) out.set(r, std::move(val));
    return out;
}

SparseVector SparseMatrix::column(int c) const {
    if (c < 0 || c >= cols_) throw std::out_of_range("SparseMatrix::column: out of range");
    SparseVector out(rows_);
    for (const auto& [rc, val] : entries_)
        if (rc.second == c) out.set(rc.first, val);
    return out;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

}  // namespace cebetti
