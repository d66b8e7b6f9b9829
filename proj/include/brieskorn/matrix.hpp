#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <brieskorn/integer.hpp>

namespace brieskorn {

/// Dense row-major matrix of unbounded integers. Zero-sized dimensions are allowed.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) {
        throw std::invalid_argument("IntegerMatrix: ragged initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      m(k, k) = 1;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = r + 1; c < cols_; ++c) {
        if ((*this)(r, c) != (*this)(c, r)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (r != c && (*this)(r, c) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols_ != y.rows_) {
      throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
    }
    IntegerMatrix out(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r) {
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Integer& xv = x(r, k);
        if (xv == 0) {
          continue;
        }
        for (std::size_t c = 0; c < y.cols_; ++c) {
          out(r, c) += xv * y(k, c);
        }
      }
    }
    return out;
  }

  friend IntegerMatrix operator-(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) {
      throw std::invalid_argument("IntegerMatrix: dimension mismatch in difference");
    }
    IntegerMatrix out = x;
    for (std::size_t k = 0; k < out.data_.size(); ++k) {
      out.data_[k] -= y.data_[k];
    }
    return out;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  /// Matrix with rows and columns reordered: out(a, b) = in(perm[a], perm[b]).
  IntegerMatrix permuted(const std::vector<std::size_t>& perm) const {
    if (!is_square() || perm.size() != rows_) {
      throw std::invalid_argument("IntegerMatrix: bad permutation");
    }
    IntegerMatrix out(rows_, cols_);
    for (std::size_t a = 0; a < rows_; ++a) {
      for (std::size_t b = 0; b < cols_; ++b) {
        out(a, b) = (*this)(perm[a], perm[b]);
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r == 0 ? "[" : ",[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c != 0) {
          s += ",";
        }
        s += (*this)(r, c).str();
      }
      s += "]";
    }
    return s + "]";
  }

  // Elementary operations used by the Smith normal form.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      std::swap((*this)(r, a), (*this)(r, b));
    }
  }
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(source, c) != 0) {
        (*this)(target, c) += factor * (*this)(source, c);
      }
    }
  }
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if ((*this)(r, source) != 0) {
        (*this)(r, target) += factor * (*this)(r, source);
      }
    }
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      (*this)(r, c) = -(*this)(r, c);
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

namespace detail {

/// Fraction-free (Bareiss) elimination; returns the rank and, for square input,
/// leaves the determinant in `det`.
inline std::size_t bareiss(IntegerMatrix m, Integer* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m(r, k) = (m(r, k) * m(rank, c) - m(r, c) * m(rank, k)) / prev;
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  if (det != nullptr) {
    *det = (rows == cols && rank == rows) ? Integer(sign * (rows == 0 ? Integer(1) : prev)) : Integer(0);
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(const IntegerMatrix& m) { return detail::bareiss(m, nullptr); }

inline Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  Integer det;
  detail::bareiss(m, &det);
  return det;
}

}  // namespace brieskorn
