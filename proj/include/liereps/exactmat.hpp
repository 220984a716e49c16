#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Matrices act on row vectors throughout (x -> x * M), matching the way
// characters and cocharacters are written as coordinate rows.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace liereps {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix diagonal(const IntVector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  void set_row(std::size_t i, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix first_columns(std::size_t n) const { return block(0, 0, rows_, n); }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  // elementary operations
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& m);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntVector& x, const IntMatrix& m);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
Integer dot(const IntVector& a, const IntVector& b);
std::string to_string(const IntVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_integral() const;
  /// Throws ValidationError when some entry is not an integer.
  IntMatrix to_integer() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// P * M * Q = D with P, Q unimodular and D diagonal.
struct SnfResult {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;

  /// Diagonal entries d_1 | d_2 | ... (min(rows, cols) of them, zeros last).
  IntVector diagonal() const;
  std::size_t rank() const;
};

/// Smith normal form with transforms. Pivot rule: least absolute value in
/// the remaining submatrix, leftmost column first, then topmost row. Only the
/// diagonal is canonical; callers must not rely on the exact P and Q.
SnfResult smith_normal_form(const IntMatrix& m);

/// Row Hermite normal form over Z: nonzero rows only, positive pivots,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Canonical echelon form of the row space of m over Z/modulus. Entries lie in
/// [0, modulus), every pivot divides the modulus, zero rows are dropped.
IntMatrix hermite_form_mod(const IntMatrix& m, const Integer& modulus);

/// Rows form a Z-basis of {y : y * m^tr = 0}: the trailing rows of Q^tr from
/// the Smith form of m.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/// Hermite basis of the lattice {x in Z^k : x * v = 0 mod modulus} (v is k x s).
IntMatrix congruence_solutions(const IntMatrix& v, const Integer& modulus);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/// Exact inverse over Q; throws ValidationError("not invertible") when singular.
RatMatrix rational_inverse(const IntMatrix& m);
/// Integer inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

IntMatrix matrix_power(const IntMatrix& m, std::size_t n);
/// Least n <= bound with m^n = identity; throws ValidationError otherwise.
std::size_t matrix_order(const IntMatrix& m, std::size_t bound);

}  // namespace liereps
