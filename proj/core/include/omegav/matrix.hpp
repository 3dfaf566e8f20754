#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "omegav/field.hpp"

namespace omegav {

/// Dense row-major matrix over F_ell.  All target instances are small
/// (dimension at most a few dozen), so there is no sparse path.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  Matrix(PrimeField field, std::size_t rows, std::size_t cols,
         std::vector<std::int64_t> entries);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix zero(PrimeField field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) {
    e_[r * cols_ + c] = v % field_.modulus();
  }
  void set_signed(std::size_t r, std::size_t c, std::int64_t v) {
    e_[r * cols_ + c] = field_.reduce(v);
  }

  Matrix transpose() const;
  Matrix scaled(std::uint64_t s) const;
  std::uint64_t trace() const;  // ShapeError if not square
  bool is_square() const { return rows_ == cols_; }

  bool operator==(const Matrix& o) const;

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Row vector over F_ell; the carrier for reflection vectors and seeds.
using Vector = std::vector<std::uint64_t>;

Vector apply(const Matrix& m, const Vector& v);  // m * v^T, as a vector

/// Exact determinant by Gaussian elimination.
std::uint64_t determinant(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A subspace of F_ell^n in canonical reduced-echelon form: equality of
/// Subspace values is equality of subspaces.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient_dim);  // zero subspace

  /// Canonicalizes the span of the given row vectors.
  static Subspace span(PrimeField field, std::size_t ambient_dim,
                       const std::vector<Vector>& rows);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const PrimeField& field() const { return field_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator<(const Subspace& o) const;  // deterministic ordering

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;  // reduced echelon rows
};

/// Canonical echelon basis of { v : m v^T = 0 }.
Subspace kernel_basis(const Matrix& m);

/// Fixed vectors of g: kernel of g - identity.  ShapeError if not square.
Subspace fixed_space(const Matrix& g);

}  // namespace omegav
