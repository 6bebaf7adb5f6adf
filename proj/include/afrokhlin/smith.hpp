#pragma once

#include <cstddef>
#include <vector>

#include "afrokhlin/rational.hpp"

namespace afrokhlin {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix &o) const = default;

  /// Determinant of a square matrix (fraction-free elimination).
  Integer determinant() const;
  bool is_diagonal() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);

/// M = U * S * V with U, V unimodular and S diagonal, its nonnegative
/// diagonal entries dividing successively. `left` and `right` are the
/// inverses of U and V: left * M * right = S.
struct SmithForm {
  IntMatrix U, S, V;
  IntMatrix left, right;

  /// Diagonal of S (min(rows, cols) entries, zeros last).
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

} // namespace afrokhlin
