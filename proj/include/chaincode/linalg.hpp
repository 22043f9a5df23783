#pragma once

#include <vector>

#include "chaincode/field.hpp"

namespace chaincode {

/// Row space over F_q in reduced row echelon form. Rows are vectors of
/// element indices. Supports membership by reduction and span comparison.
class LinearSpan {
public:
    LinearSpan(const Field& f, int cols) : f_(&f), cols_(cols) {}

    const Field& field() const { return *f_; }
    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduce v against the current basis; returns the residual.
    std::vector<int> reduce(std::vector<int> v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            int c = v[pivots_[r]];
            if (c == 0) continue;
            for (int j = pivots_[r]; j < cols_; ++j) v[j] = f_->sub(v[j], f_->mul(c, rows_[r][j]));
        }
        return v;
    }

    bool contains(const std::vector<int>& v) const {
        auto res = reduce(v);
        for (int c : res)
            if (c != 0) return false;
        return true;
    }

    /// Insert a row, keeping RREF; returns false if v was already in the span.
    bool insert(std::vector<int> v) {
        v = reduce(std::move(v));
        int piv = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        int inv = f_->inv(v[piv]);
        for (int j = piv; j < cols_; ++j) v[j] = f_->mul(v[j], inv);
        // clear the new pivot column in existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            int c = rows_[r][piv];
            if (c == 0) continue;
            for (int j = piv; j < cols_; ++j) rows_[r][j] = f_->sub(rows_[r][j], f_->mul(c, v[j]));
        }
        size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    /// RREF is canonical, so span equality is row-list equality.
    friend bool operator==(const LinearSpan& x, const LinearSpan& y) {
        return x.cols_ == y.cols_ && x.rows_ == y.rows_;
    }
    friend bool operator!=(const LinearSpan& x, const LinearSpan& y) { return !(x == y); }

private:
    const Field* f_;
    int cols_;
    std::vector<std::vector<int>> rows_;  // RREF, sorted by pivot column
    std::vector<int> pivots_;
};

/// Null space of the linear map v -> M v (M given row-wise, size m x n):
/// returns a basis of {v : M v = 0} as a LinearSpan of n-vectors.
inline LinearSpan null_space(const Field& f, const std::vector<std::vector<int>>& m_rows, int n) {
    LinearSpan row_space(f, n);
    for (const auto& r : m_rows) row_space.insert(r);
    // free columns parameterize the kernel
    std::vector<bool> is_pivot(n, false);
    for (int p : row_space.pivots()) is_pivot[p] = true;
    LinearSpan kernel(f, n);
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(n, 0);
        v[free] = f.one();
        const auto& rows = row_space.rows();
        for (int r = 0; r < row_space.rank(); ++r)
            v[row_space.pivots()[r]] = f.neg(rows[r][free]);
        kernel.insert(std::move(v));
    }
    return kernel;
}

} // namespace chaincode
