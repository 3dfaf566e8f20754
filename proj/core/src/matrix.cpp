#include "omegav/matrix.hpp"

#include <algorithm>

#include "omegav/errors.hpp"

namespace omegav {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols,
               std::vector<std::int64_t> entries)
    : field_(field), rows_(rows), cols_(cols) {
  if (entries.size() != rows * cols)
    throw ShapeError("entry count does not match shape");
  e_.reserve(entries.size());
  for (std::int64_t x : entries) e_.push_back(field_.reduce(x));
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::zero(PrimeField field, std::size_t rows, std::size_t cols) {
  return Matrix(field, rows, cols);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::scaled(std::uint64_t s) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = field_.mul(e_[i], s);
  return m;
}

std::uint64_t Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of non-square matrix");
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, at(i, i));
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

namespace {

void check_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw ModulusMismatch("matrices over different prime fields");
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.cols() != b.rows()) throw ShapeError("product shape mismatch");
  const PrimeField& F = a.field();
  Matrix c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.set(i, j, F.add(c.at(i, j), F.mul(aik, b.at(k, j))));
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("sum shape mismatch");
  const PrimeField& F = a.field();
  Matrix c(F, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.set(i, j, F.add(a.at(i, j), b.at(i, j)));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("difference shape mismatch");
  const PrimeField& F = a.field();
  Matrix c(F, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.set(i, j, F.sub(a.at(i, j), b.at(i, j)));
  return c;
}

Vector apply(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  const PrimeField& F = m.field();
  Vector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      s = F.add(s, F.mul(m.at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F,
                              std::vector<Vector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::uint64_t piv = F.inv(rows[r][c]);
    for (std::size_t j = c; j < cols; ++j)
      rows[r][j] = F.mul(rows[r][j], piv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

std::vector<Vector> matrix_rows(const Matrix& m) {
  std::vector<Vector> rows(m.rows(), Vector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

}  // namespace

std::uint64_t determinant(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
  const PrimeField& F = m.field();
  std::size_t n = m.rows();
  auto rows = matrix_rows(m);
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && rows[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(rows[c], rows[sel]);
      det = F.neg(det);
    }
    det = F.mul(det, rows[c][c]);
    std::uint64_t piv = F.inv(rows[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (rows[i][c] == 0) continue;
      std::uint64_t f = F.mul(rows[i][c], piv);
      for (std::size_t j = c; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[c][j]));
    }
  }
  return det;
}

std::size_t rank(const Matrix& m) {
  auto rows = matrix_rows(m);
  return rref(m.field(), rows).size();
}

Subspace::Subspace(PrimeField field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim,
                        const std::vector<Vector>& rows) {
  for (const auto& v : rows)
    if (v.size() != ambient_dim)
      throw ShapeError("spanning vector has wrong length");
  Subspace s(field, ambient_dim);
  auto work = rows;
  rref(field, work);
  s.basis_ = std::move(work);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("vector has wrong length");
  Vector w = v;
  for (const auto& b : basis_) {
    std::size_t piv = 0;
    while (piv < ambient_ && b[piv] == 0) ++piv;
    if (piv == ambient_ || w[piv] == 0) continue;
    std::uint64_t f = w[piv];
    for (std::size_t j = piv; j < ambient_; ++j)
      w[j] = field_.sub(w[j], field_.mul(f, b[j]));
  }
  return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return !x; });
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw ShapeError("ambient dim mismatch");
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, rows);
}

bool Subspace::operator<(const Subspace& o) const {
  if (basis_.size() != o.basis_.size())
    return basis_.size() < o.basis_.size();
  return basis_ < o.basis_;
}

Subspace kernel_basis(const Matrix& m) {
  const PrimeField& F = m.field();
  auto rows = matrix_rows(m);
  auto pivots = rref(F, rows);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    Vector v(n, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F.neg(rows[i][fcol]);
    basis.push_back(std::move(v));
  }
  return Subspace::span(F, n, basis);
}

Subspace fixed_space(const Matrix& g) {
  if (!g.is_square()) throw ShapeError("fixed space of non-square matrix");
  return kernel_basis(g - Matrix::identity(g.field(), g.rows()));
}

}  // namespace omegav
