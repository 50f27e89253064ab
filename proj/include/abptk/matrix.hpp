#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace abptk {

/// Dense matrix over an exact field K (Rational or Fp). Plain rational
/// Gauss-Jordan elimination; the contract is exactness, not speed.
template <class K>
class Matrix {
   public:
    using Context = typename K::Context;

    Matrix(std::size_t rows, std::size_t cols, Context ctx)
        : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, ctx.zero()) {}

    static Matrix identity(std::size_t n, Context ctx) {
        Matrix m(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Context context() const { return ctx_; }

    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, ctx_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t rows_, cols_;
    Context ctx_;
    std::vector<K> data_;
};

/// Reduced row echelon form and the pivot columns; rank = pivot count.
template <class K>
std::pair<Matrix<K>, std::vector<std::size_t>> rref(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        K inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).second.size();
}

/// One exact solution of a.x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1, a.context());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [red, pivots] = rref(std::move(aug));
    // inconsistent iff some pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(a.cols(), a.context().zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, a.cols());
    return x;
}

}  // namespace abptk
