#include "afrokhlin/smith.hpp"

#include <stdexcept>
#include <utility>

namespace afrokhlin {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  IntMatrix a = *this;
  Integer sign = 1, prev = 1;
  // Bareiss elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0)
        return false;
  return true;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    out.push_back(S(i, i));
  return out;
}

namespace {

// Elementary operations applied to the working matrix A, keeping
// U*A*V == M and left*M*right == A.
struct Reducer {
  IntMatrix A, U, V, L, R;

  explicit Reducer(const IntMatrix &m)
      : A(m), U(IntMatrix::identity(m.rows())), V(IntMatrix::identity(m.cols())),
        L(IntMatrix::identity(m.rows())), R(IntMatrix::identity(m.cols())) {}

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer &c) {
    for (std::size_t k = 0; k < A.cols(); ++k)
      A(i, k) += c * A(j, k);
    for (std::size_t k = 0; k < L.cols(); ++k)
      L(i, k) += c * L(j, k);
    for (std::size_t k = 0; k < U.rows(); ++k)
      U(k, j) -= c * U(k, i);
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer &c) {
    for (std::size_t k = 0; k < A.rows(); ++k)
      A(k, i) += c * A(k, j);
    for (std::size_t k = 0; k < R.rows(); ++k)
      R(k, i) += c * R(k, j);
    for (std::size_t k = 0; k < V.cols(); ++k)
      V(j, k) -= c * V(i, k);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t k = 0; k < A.cols(); ++k)
      std::swap(A(i, k), A(j, k));
    for (std::size_t k = 0; k < L.cols(); ++k)
      std::swap(L(i, k), L(j, k));
    for (std::size_t k = 0; k < U.rows(); ++k)
      std::swap(U(k, i), U(k, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t k = 0; k < A.rows(); ++k)
      std::swap(A(k, i), A(k, j));
    for (std::size_t k = 0; k < R.rows(); ++k)
      std::swap(R(k, i), R(k, j));
    for (std::size_t k = 0; k < V.cols(); ++k)
      std::swap(V(i, k), V(j, k));
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < A.cols(); ++k)
      A(i, k) = -A(i, k);
    for (std::size_t k = 0; k < L.cols(); ++k)
      L(i, k) = -L(i, k);
    for (std::size_t k = 0; k < U.rows(); ++k)
      U(k, i) = -U(k, i);
  }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix &m) {
  Reducer r(m);
  IntMatrix &A = r.A;
  const std::size_t rows = A.rows(), cols = A.cols();
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (A(i, j) != 0 && (pi == rows || abs(A(i, j)) < abs(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows)
        goto finished;  // trailing block is zero
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (A(i, t) == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        r.add_row(i, t, -q);
        if (A(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (A(t, j) == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        r.add_col(j, t, -q);
        if (A(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (A(i, j) % A(t, t) != 0) {
            r.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (A(t, t) < 0)
      r.negate_row(t);
  }
finished:
  return {std::move(r.U), std::move(r.A), std::move(r.V), std::move(r.L), std::move(r.R)};
}

} // namespace afrokhlin
