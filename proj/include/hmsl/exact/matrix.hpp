#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmsl/errors.hpp"
#include "hmsl/exact/scalar.hpp"

namespace hmsl {

// Small dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill = F{})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  explicit Matrix(std::vector<std::vector<F>> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    a_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix rows");
      for (auto& x : r) a_.push_back(std::move(x));
    }
  }

  static Matrix identity(std::size_t n, const F& one, const F& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a_.begin() + static_cast<long>(i * cols_),
                          a_.begin() + static_cast<long>((i + 1) * cols_));
  }
  std::vector<F> col(std::size_t j) const {
    std::vector<F> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t j = 0; j < y.cols_; ++j) {
        F acc = zero_like(x(i, 0));
        for (std::size_t k = 0; k < x.cols_; ++k) acc += x(i, k) * y(k, j);
        r(i, j) = acc;
      }
    }
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw DomainError("matrix/vector shape mismatch");
    std::vector<F> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      F acc = zero_like(v.front());
      for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
      out.push_back(acc);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && is_zero((*this)(piv, c))) ++piv;
      if (piv == rows_) continue;
      swap_rows(r, piv);
      F inv = inverse((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        F factor = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) {
          (*this)(i, j) -= factor * (*this)(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  // Basis of {x : M x = 0}, one vector per free column, with a 1 in that
  // column.
  std::vector<std::vector<F>> nullspace(const F& one, const F& zero) const {
    Matrix m = *this;
    std::vector<std::size_t> piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, zero);
      v[free] = one;
      for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Some solution of M x = rhs, or nullopt when the system is inconsistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& rhs, const F& zero) const {
    if (rhs.size() != rows_) throw DomainError("right-hand side has wrong length");
    Matrix aug(rows_, cols_ + 1, zero);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = rhs[i];
    }
    std::vector<std::size_t> piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<F> x(cols_, zero);
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, cols_);
    return x;
  }

  // Inverse of a square matrix; throws DomainError if singular.
  Matrix inverse_matrix(const F& one, const F& zero) const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = one;
    }
    std::vector<std::size_t> piv = aug.rref();
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) {
      throw DomainError("singular matrix");
    }
    Matrix inv(rows_, cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

}  // namespace hmsl
