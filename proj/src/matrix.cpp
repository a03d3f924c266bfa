#include "realmod/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace realmod {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::zero(std::size_t rows, std::size_t cols) {
  return ExactMatrix(rows, cols);
}

Int& ExactMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return a_[r * cols_ + c];
}

const Int& ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return a_[r * cols_ + c];
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix p(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& f = at(r, k);
      if (f == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        p.at(r, c) += f * rhs.at(k, c);
      }
    }
  }
  return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  ExactMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + rhs.a_[i];
  return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  ExactMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - rhs.a_[i];
  return s;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
  return s;
}

Vec ExactMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  Vec out(rows_, Int(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

Vec ExactMatrix::column(std::size_t c) const {
  Vec out(rows_, Int(0));
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void ExactMatrix::swap_rows(std::size_t r1, std::size_t r2) {
  if (r1 >= rows_ || r2 >= rows_) throw std::out_of_range("swap_rows: row out of range");
  if (r1 == r2) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

void ExactMatrix::add_row_multiple(std::size_t r1, std::size_t r2, const Int& factor) {
  if (r1 >= rows_ || r2 >= rows_)
    throw std::out_of_range("add_row_multiple: row out of range");
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(r1, c) += factor * at(r2, c);
}

void ExactMatrix::negate_row(std::size_t r) {
  if (r >= rows_) throw std::out_of_range("negate_row: row out of range");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

Int determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  ExactMatrix w = m;
  Int sign(1);
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && w.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return Int(0);
      w.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

ExactMatrix inverse_unimodular(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse_unimodular: matrix not square");
  const std::size_t n = m.rows();
  ExactMatrix w = m;
  ExactMatrix inv = ExactMatrix::identity(n);

  // Forward phase: integer row reduction to upper-triangular form.  Entries
  // below the diagonal are cleared with Euclidean gcd steps (quotient-multiple
  // subtractions and row swaps), which keep both matrices integral.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      while (w.at(i, k) != 0) {
        if (w.at(k, k) == 0) {
          w.swap_rows(k, i);
          inv.swap_rows(k, i);
          continue;
        }
        Int q;
        // Truncated quotient keeps |remainder| < |divisor|, so the loop
        // terminates like the Euclidean algorithm.
        mpz_tdiv_q(q.get_mpz_t(), w.at(i, k).get_mpz_t(), w.at(k, k).get_mpz_t());
        w.add_row_multiple(i, k, -q);
        inv.add_row_multiple(i, k, -q);
        if (w.at(i, k) != 0) {
          w.swap_rows(k, i);
          inv.swap_rows(k, i);
        }
      }
    }
    if (w.at(k, k) == 0) throw std::invalid_argument("inverse_unimodular: matrix is singular");
  }

  // A unimodular matrix reduces to diagonal entries +1/-1; anything else
  // means |det| != 1.
  for (std::size_t k = 0; k < n; ++k) {
    if (w.at(k, k) == -1) {
      w.negate_row(k);
      inv.negate_row(k);
    } else if (w.at(k, k) != 1) {
      throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
    }
  }

  // Back substitution clears the strict upper triangle with integer steps.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) {
      Int f = w.at(k, j);
      if (f == 0) continue;
      w.add_row_multiple(k, j, -f);
      inv.add_row_multiple(k, j, -f);
    }
  }
  return inv;
}

Vec vec_add(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

Vec vec_sub(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

Vec vec_scaled(const Vec& u, const Int& c) {
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = c * u[i];
  return out;
}

Vec vec_neg(const Vec& u) {
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = -u[i];
  return out;
}

bool vec_is_zero(const Vec& u) {
  for (const Int& x : u)
    if (x != 0) return false;
  return true;
}

Int dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: size mismatch");
  Int s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace realmod
