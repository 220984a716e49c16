#include "liereps/exactmat.hpp"

#include "liereps/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace liereps {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("matrix rows have unequal length");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("matrix rows have unequal length");
    m.set_row(i, rows[i]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

IntMatrix IntMatrix::diagonal(const IntVector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src,
                                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix sum: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix difference: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& m) {
  IntMatrix c = m;
  for (auto& v : c.data_) v *= s;
  return c;
}

std::string IntMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ", ";
    out << to_string(row(i));
  }
  out << ']';
  return out.str();
}

IntVector operator*(const IntVector& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw ValidationError("vector-matrix product: dimension mismatch");
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw ValidationError("vstack: column mismatch");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) m.set_row(i, top.row(i));
  for (std::size_t i = 0; i < bottom.rows(); ++i) m.set_row(top.rows() + i, bottom.row(i));
  return m;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw ValidationError("hstack: row mismatch");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
  }
  return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ValidationError("dot product: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// --- rational matrices ---------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rational(m(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& v) { return v.get_den() == 1; });
}

IntMatrix RatMatrix::to_integer() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& v = (*this)(i, j);
      if (v.get_den() != 1) throw ValidationError("matrix is not integral");
      m(i, j) = v.get_num();
    }
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product: dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// --- Smith normal form ---------------------------------------------------

IntVector SnfResult::diagonal() const {
  IntVector d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const auto& v : diagonal())
    if (v != 0) ++r;
  return r;
}

namespace {

// Floor quotient: a - q*b has absolute value < |b| and the sign of b.
Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> least_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t j = t; j < d.cols(); ++j)
    for (std::size_t i = t; i < d.rows(); ++i) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = res.D;
  IntMatrix& p = res.P;
  // Column operations on D are mirrored on Q; keep Q^tr so the mirror is a row op.
  IntMatrix qt = IntMatrix::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  bool exhausted = false;
  for (std::size_t t = 0; t < steps && !exhausted; ++t) {
    for (;;) {
      auto pivot = least_pivot(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pivot->row);
      p.swap_rows(t, pivot->row);
      d.swap_columns(t, pivot->col);
      qt.swap_rows(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer f = -floor_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, f);
        p.add_row_multiple(i, t, f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer f = -floor_quotient(d(t, j), d(t, t));
        d.add_column_multiple(j, t, f);
        qt.add_row_multiple(j, t, f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column t are clear; enforce divisibility of the rest.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      d.add_row_multiple(t, *offender, 1);
      p.add_row_multiple(t, *offender, 1);
    }
    if (!exhausted && d(t, t) < 0) {
      d.negate_row(t);
      p.negate_row(t);
    }
  }
  res.Q = qt.transpose();
  return res;
}

// --- Hermite forms -------------------------------------------------------

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -floor_quotient(h(i, c), h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      h.add_row_multiple(i, r, -floor_quotient(h(i, c), h(r, c)));
    ++r;
  }
  return h.block(0, 0, r, h.cols());
}

IntMatrix hermite_form_mod(const IntMatrix& m, const Integer& modulus) {
  if (modulus < 1) throw ValidationError("hermite_form_mod: modulus must be positive");
  const std::size_t n = m.cols();
  IntMatrix reduced = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer& v = reduced(i, j);
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    }
  // The lattice rowspace(m) + modulus*Z^n has a unique Hermite basis; rows whose
  // pivot equals the modulus vanish modulo it and are redundant.
  IntMatrix h = hermite_normal_form(vstack(reduced, modulus * IntMatrix::identity(n)));
  std::vector<IntVector> kept;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    IntVector row = h.row(i);
    auto pivot = std::find_if(row.begin(), row.end(), [](const Integer& v) { return v != 0; });
    if (*pivot == modulus) continue;
    for (auto& v : row) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    kept.push_back(std::move(row));
  }
  return IntMatrix::from_rows(kept, n);
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  IntMatrix qt = snf.Q.transpose();
  return qt.block(r, 0, m.cols() - r, m.cols());
}

IntMatrix congruence_solutions(const IntMatrix& v, const Integer& modulus) {
  const std::size_t k = v.rows();
  if (v.cols() == 0 || modulus == 1) return IntMatrix::identity(k);
  // (x, y) with x*v + y*(modulus*I) = 0, projected onto x.
  IntMatrix stacked = vstack(v, modulus * IntMatrix::identity(v.cols()));
  IntMatrix kernel = integer_kernel_basis(stacked.transpose());
  IntMatrix h = hermite_normal_form(kernel.block(0, 0, kernel.rows(), k));
  if (h.rows() != k) throw InternalError("congruence_solutions: lattice not of full rank");
  return h;
}

// --- determinants, inverses, orders --------------------------------------

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw ValidationError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw ValidationError("not invertible: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw ValidationError("not invertible");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  RatMatrix inv = rational_inverse(u);
  if (!inv.is_integral()) throw ValidationError("not invertible over the integers");
  return inv.to_integer();
}

IntMatrix matrix_power(const IntMatrix& m, std::size_t n) {
  if (!m.is_square()) throw ValidationError("matrix power of non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::size_t matrix_order(const IntMatrix& m, std::size_t bound) {
  if (!m.is_square()) throw ValidationError("matrix order of non-square matrix");
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix pw = m;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (pw == id) return n;
    pw = pw * m;
  }
  throw ValidationError("order exceeds bound " + std::to_string(bound));
}

}  // namespace liereps
