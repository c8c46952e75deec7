/*
 * Dense matrices over an exact field, with deterministic elimination:
 * pivots are chosen at the leftmost viable column, first available row.
 *
 * Two kernel paths are provided.  Over RationalFunction the elimination
 * is fraction-free (Bareiss) after clearing row denominators, which keeps
 * intermediate entries polynomial.  Over QuadraticFieldElement a plain
 * reduced row echelon elimination is used.
 */
#pragma once

#include <vector>

#include "qring/laurent.hpp"
#include "qring/quadratic_field.hpp"
#include "qring/rational_function.hpp"

namespace qring {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

template <class T>
struct KernelResult {
    int rank = 0;
    std::vector<std::vector<T>> basis;   // right-kernel basis, one vector per free column
};

// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        m.swap_rows(row, pr);
        const T inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const T f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Kernel basis from a reduced row echelon form: for each free column f
// (ascending) the vector with 1 at f and the pivot entries solved.
template <class T>
KernelResult<T> kernel_from_rref(const Matrix<T>& m, const std::vector<int>& pivots) {
    KernelResult<T> res;
    res.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<T> vec(static_cast<size_t>(m.cols()), T());
        vec[static_cast<size_t>(f)] = T(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            vec[static_cast<size_t>(pivots[k])] = -m.at(static_cast<int>(k), f);
        res.basis.push_back(std::move(vec));
    }
    return res;
}

// Exact right kernel over Q(sqrt(q)); throws when entries mix radicands.
KernelResult<QuadraticFieldElement> exact_kernel(const Matrix<QuadraticFieldElement>& m);

// Exact right kernel over Q(v) via fraction-free elimination.
KernelResult<RationalFunction> exact_kernel(const Matrix<RationalFunction>& m);

// Canonical reduced-row-echelon basis of the span of `rows`; used as the
// basis-independent fingerprint of a dependency space.
template <class T>
std::vector<std::vector<T>> rref_span(const std::vector<std::vector<T>>& rows, int cols) {
    Matrix<T> m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    const auto pivots = rref(m);
    std::vector<std::vector<T>> out;
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        std::vector<T> vec(static_cast<size_t>(cols));
        for (int c = 0; c < cols; ++c) vec[static_cast<size_t>(c)] = m.at(r, c);
        out.push_back(std::move(vec));
    }
    return out;
}

} // namespace qring
