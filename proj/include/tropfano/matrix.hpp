#pragma once

#include <stdexcept>
#include <vector>

#include "tropfano/rational.hpp"
#include "tropfano/tratfn.hpp"

namespace tropfano {

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T()) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, fill) {}
    explicit Matrix(std::vector<std::vector<T>> rows) {
        rows_ = int(rows.size());
        cols_ = rows.empty() ? 0 : int(rows[0].size());
        for (auto& r : rows) {
            if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
            for (auto& x : r) data_.push_back(std::move(x));
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const T& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    std::vector<T> row(int r) const {
        std::vector<T> out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
        return out;
    }

    Matrix<T> select_columns(const std::vector<int>& cols) const {
        Matrix<T> out(rows_, int(cols.size()));
        for (int r = 0; r < rows_; ++r)
            for (size_t j = 0; j < cols.size(); ++j) out.at(r, int(j)) = at(r, cols[j]);
        return out;
    }

    Matrix<T> transposed() const {
        Matrix<T> out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<long>;
using QMatrix = Matrix<Rational>;
using TMatrix = Matrix<TRatFn>;

// Bareiss fraction-free elimination; returns the determinant of a square matrix.
template <typename T>
T det_bareiss(Matrix<T> m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det of non-square matrix");
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == T(0)) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!(m.at(r, k) == T(0))) {
                    piv = r;
                    break;
                }
            if (piv < 0) return T(0);
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sign < 0 ? T(0) - d : d;
}

// rank over the fraction field via fraction-free elimination
template <typename T>
int exact_rank(Matrix<T> m) {
    int rows = m.rows(), cols = m.cols();
    int rank = 0;
    T prev(1);
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!(m.at(r, c) == T(0))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        for (int i = rank + 1; i < rows; ++i)
            for (int j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(rank, c) - m.at(i, c) * m.at(rank, j)) / prev;
        for (int i = rank + 1; i < rows; ++i) m.at(i, c) = T(0);
        prev = m.at(rank, c);
        ++rank;
    }
    return rank;
}

}  // namespace tropfano
