#ifndef REALMOD_MATRIX_HPP
#define REALMOD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace realmod {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Dense matrix over the integers with exact (arbitrary-precision) entries.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c);
  const Int& at(std::size_t r, std::size_t c) const;

  bool operator==(const ExactMatrix& other) const;
  bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix operator-() const;

  // Matrix-vector product; the vector is a column vector.
  Vec apply(const Vec& v) const;

  // Column of the matrix as a vector.
  Vec column(std::size_t c) const;

  void swap_rows(std::size_t r1, std::size_t r2);
  // row r1 += factor * row r2
  void add_row_multiple(std::size_t r1, std::size_t r2, const Int& factor);
  void negate_row(std::size_t r);

  bool is_identity() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Determinant by fraction-free (Bareiss) elimination.  Exact for any square
// integer matrix.
Int determinant(const ExactMatrix& m);

// Inverse of a matrix with determinant +1 or -1, computed by integer row
// reduction (gcd steps only, no divisions).  Throws std::invalid_argument if
// the matrix is not square or not unimodular.
ExactMatrix inverse_unimodular(const ExactMatrix& m);

// Vector helpers (componentwise, exact).
Vec vec_add(const Vec& u, const Vec& v);
Vec vec_sub(const Vec& u, const Vec& v);
Vec vec_scaled(const Vec& u, const Int& c);
Vec vec_neg(const Vec& u);
bool vec_is_zero(const Vec& u);
Int dot(const Vec& u, const Vec& v);

}  // namespace realmod

#endif  // REALMOD_MATRIX_HPP
