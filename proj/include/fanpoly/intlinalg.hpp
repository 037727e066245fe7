#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fanpoly {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix over an exact ring. Zero-sized dimensions are
/// allowed and meaningful (a 0 x n matrix has kernel Z^n).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  std::vector<std::vector<T>> row_vectors() const;

  Matrix transposed() const;
  Matrix take_rows(std::size_t begin, std::size_t end) const;
  Matrix take_cols(std::size_t begin, std::size_t end) const;
  void append_row(std::span<const T> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool is_zero() const;
  std::vector<T> apply(std::span<const T> x) const;  // this * x

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

/// Stacks matrices with equal column counts.
template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom);

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& a);

struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Diagonal of S (length min(rows, cols)), nonnegative, each nonzero
  /// entry dividing the next.
  std::vector<Integer> diagonal() const;
};

struct HNFResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

/// Smith normal form: U * A * V = S.
SNFResult snf(const IntMatrix& a);

/// Row-style Hermite normal form: U * A = H with H in echelon form, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows last.
HNFResult hnf(const IntMatrix& a);

/// Nonzero rows of hnf(a).H: the canonical basis of the row lattice.
IntMatrix hnf_basis(const IntMatrix& a);

/// Canonical (HNF) basis of {x in Z^cols : a * x = 0}, one basis vector per row.
IntMatrix kernel_lattice(const IntMatrix& a);

/// Canonical basis of span_Q(rows of l) intersected with Z^cols.
IntMatrix saturate(const IntMatrix& l);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Reduces v against a basis in Hermite normal form; the remainder is zero
/// iff v lies in the lattice.
IntVector reduce_modulo(const IntMatrix& hnf_rows, IntVector v);
bool lattice_contains(const IntMatrix& hnf_rows, const IntVector& v);

/// Equality of the row lattices of two generator sets.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Solves X * a = b over Q when the rows of b lie in the row space of a.
std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b);

Integer content(std::span<const Integer> v);
IntVector primitive(IntVector v);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

std::string to_string(std::span<const Integer> v);

}  // namespace fanpoly
