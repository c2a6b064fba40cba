#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/errors.hpp"
#include "leavitt/rational.hpp"

namespace leavitt {

/// Dense row-major matrix over ℚ.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
  }

  friend Matrix operator*(const Rational& q, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.data_) x *= q;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractError("matrix shapes do not compose");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) m(i, j) += x * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using SparseRow = std::map<std::size_t, Rational>;

/// Incremental row echelon form over ℚ. Each inserted row is reduced against
/// the stored pivots; rank grows when something survives.
class Echelon {
 public:
  /// Returns true when `row` is independent of the rows inserted so far.
  bool insert(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second == 0) {
        it = row.erase(it);
        continue;
      }
      ++it;
    }
    for (const auto& [col, pivot_row] : pivots_) {
      auto hit = row.find(col);
      if (hit == row.end()) continue;
      Rational factor = hit->second;
      for (const auto& [c, v] : pivot_row) {
        Rational& slot = row[c];
        slot -= factor * v;
        if (slot == 0) row.erase(c);
      }
    }
    if (row.empty()) return false;
    const std::size_t lead = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [col, pivot_row] : pivots_) {
      auto hit = pivot_row.find(lead);
      if (hit == pivot_row.end()) continue;
      Rational factor = hit->second;
      for (const auto& [c, v] : row) {
        Rational& slot = pivot_row[c];
        slot -= factor * v;
        if (slot == 0) pivot_row.erase(c);
      }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // keyed by leading column, fully reduced
};

inline std::size_t rank(const Matrix& m) {
  Echelon e;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) row.emplace(j, m(i, j));
    e.insert(std::move(row));
  }
  return e.rank();
}

/// Dimension of {x : Σ_j row[j] x_j = 0 for every row} in ℚ^unknowns.
inline std::size_t nullity(const std::vector<SparseRow>& rows, std::size_t unknowns) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return unknowns - e.rank();
}

/// Rows of space-separated exact rationals.
inline std::string render_rows(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace leavitt
