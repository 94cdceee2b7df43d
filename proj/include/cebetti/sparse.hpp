#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cebetti/rational.hpp"

namespace cebetti {

/// Sparse column vector over Q; only nonzero coordinates are stored.
class SparseVector {
public:
    SparseVector() = default;
    explicit SparseVector(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return coords_.empty(); }
    const std::map<int, Rational>& coords() const { return coords_; }

    Rational at(int i) const {
        auto it = coords_.find(i);
        return it == coords_.end() ? Rational(0) : it->second;
    }

    void set(int i, Rational v) {
        if (i < 0 || i >= dim_) throw std::out_of_range("SparseVector::set: index out of range");
        if (v.is_zero())
            coords_.erase(i);
        else
            coords_[i] = std::move(v);
    }

    void add(int i, const Rational& v) { set(i, at(i) + v); }

    /// this += c * other
    void axpy(const Rational& c, const SparseVector& other) {
        if (c.is_zero()) return;
        for (const auto& [i, v] : other.coords()) add(i, c * v);
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim_ == b.dim_ && a.coords_ == b.coords_;
    }

private:
    int dim_ = 0;
    std::map<int, Rational> coords_;
};

/// Sparse matrix over Q mapping column-index space to row-index space.
/// Zero entries are never stored. Instances are treated as immutable once
/// built; the elimination routines work on private copies.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nnz() const { return static_cast<int>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    Rational at(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(int r, int c, Rational v) {
        check_index(r, c);
        if (v.is_zero())
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    void add(int r, int c, const Rational& v) { set(r, c, at(r, c) + v); }

    SparseMatrix transpose() const;

    /// Matrix product this * rhs.
    SparseMatrix operator*(const SparseMatrix& rhs) const;

    /// Matrix–vector product this * v.
    SparseVector apply(const SparseVector& v) const;

    /// Column c as a SparseVector of dimension rows().
    SparseVector column(int c) const;

    static SparseMatrix identity(int n);

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("SparseMatrix: index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

/// A list of independent sparse column vectors in a common ambient space.
struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<SparseVector> vectors;

    int count() const { return static_cast<int>(vectors.size()); }
};

}  // namespace cebetti
