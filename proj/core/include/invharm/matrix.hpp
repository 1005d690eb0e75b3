#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invharm/scalar.hpp"

namespace invharm {

using Vec = std::vector<Scalar>;

/// Dense matrix over the Gaussian rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vec& d);
  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix conjugate() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Stacks matrices vertically; all must share a column count.
Matrix vstack(const std::vector<Matrix>& parts);

struct RrefResult {
  Matrix r;                        // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
  std::size_t rank = 0;
};

/// Gauss-Jordan over Q(i). Pivot rule: columns scanned left to right, within a
/// column the first row with a nonzero entry is taken, so the output is a
/// deterministic function of the input.
RrefResult rref(Matrix m);

/// Basis of {v : M v = 0}, one vector per free column, in canonical reduced
/// echelon form (see Subspace).
std::vector<Vec> kernel_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact solve A x = b; empty optional when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse_matrix(const Matrix& m);

Scalar determinant(Matrix m);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);
std::string to_string(const Vec& v);

}  // namespace invharm
