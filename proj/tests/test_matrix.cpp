#include <doctest.h>

#include <random>

#include "omegav/matrix.hpp"
#include "omegav/rep.hpp"

using namespace omegav;

namespace {

Matrix random_matrix(PrimeField F, std::size_t n, std::mt19937_64& rng) {
  Matrix m(F, n, n);
  std::uniform_int_distribution<std::uint64_t> d(0, F.modulus() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("products") {
  PrimeField F(7);
  Matrix m(F, 2, 2, {1, 2, 3, 4});
  CHECK(Matrix::identity(F, 2) * m == m);
  CHECK(m * Matrix::zero(F, 2, 2) == Matrix::zero(F, 2, 2));
  CHECK_THROWS_AS((void)(m * Matrix::zero(F, 3, 3)), ShapeError);

  // both shapes of the standard order-two element square to the identity
  for (std::size_t N : {4, 6, 8, 10}) {
    Matrix c = c_infinity(N, F);
    CHECK(c * c == Matrix::identity(F, N));
  }
}

TEST_CASE("determinants") {
  PrimeField F(7);
  CHECK(determinant(Matrix::identity(F, 5)) == 1);
  CHECK(determinant(c_infinity(4, F)) == 1);
  CHECK(determinant(c_infinity(6, F)) == 1);
  CHECK_THROWS_AS(determinant(Matrix::zero(F, 2, 3)), ShapeError);

  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(F, 5, rng), b = random_matrix(F, 5, rng);
    CHECK(determinant(a * b) == F.mul(determinant(a), determinant(b)));
  }
}

TEST_CASE("kernels") {
  PrimeField F(7);
  CHECK(kernel_basis(Matrix::identity(F, 4)).dim() == 0);
  CHECK(kernel_basis(Matrix::zero(F, 3, 3)).dim() == 3);

  Matrix m(F, 2, 2, {1, 1, 1, 1});
  Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vector{1, 6}));
}

TEST_CASE("rank-nullity on random matrices") {
  PrimeField F(7);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 11;  // up to 12
    Matrix m = random_matrix(F, n, rng);
    CHECK(rank(m) + kernel_basis(m).dim() == n);
  }
}

TEST_CASE("fixed spaces") {
  PrimeField F(7);
  CHECK(fixed_space(Matrix::identity(F, 4)).dim() == 4);
  CHECK(fixed_space(Matrix::identity(F, 4).scaled(6)).dim() == 0);
  CHECK(fixed_space(c_infinity(4, F)).dim() == 2);
}

TEST_CASE("involution eigenspace split") {
  PrimeField F(7);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 3 + t % 6;
    // random conjugate of a diagonal +-1 matrix
    Matrix d(F, n, n);
    for (std::size_t i = 0; i < n; ++i) d.set_signed(i, i, rng() % 2 ? 1 : -1);
    Matrix p = random_matrix(F, n, rng);
    while (determinant(p) == 0) p = random_matrix(F, n, rng);
    // p d p^{-1} via solving is overkill; conjugate by p using adjugate-free
    // route: g = p d p^{-1} with p^{-1} from Gaussian elimination
    Matrix aug(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug.set(i, j, p.at(i, j));
      aug.set(i, n + i, 1);
    }
    // invert via kernel-free elimination: reuse kernel machinery by solving
    // p x = e_i columnwise is clearer here
    Matrix pinv(F, n, n);
    for (std::size_t col = 0; col < n; ++col) {
      // solve p x = e_col by elimination on an augmented copy
      Matrix w(F, n, n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.set(i, j, p.at(i, j));
        w.set(i, n, i == col ? 1 : 0);
      }
      // forward elimination
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (w.at(sel, c) == 0) ++sel;
        if (sel != c)
          for (std::size_t j = 0; j <= n; ++j) {
            auto tmp = w.at(c, j);
            w.set(c, j, w.at(sel, j));
            w.set(sel, j, tmp);
          }
        std::uint64_t inv = F.inv(w.at(c, c));
        for (std::size_t j = 0; j <= n; ++j) w.set(c, j, F.mul(w.at(c, j), inv));
        for (std::size_t i = 0; i < n; ++i) {
          if (i == c || w.at(i, c) == 0) continue;
          std::uint64_t f = w.at(i, c);
          for (std::size_t j = 0; j <= n; ++j)
            w.set(i, j, F.sub(w.at(i, j), F.mul(f, w.at(c, j))));
        }
      }
      for (std::size_t i = 0; i < n; ++i) pinv.set(i, col, w.at(i, n));
    }
    Matrix g = p * d * pinv;
    REQUIRE(g * g == Matrix::identity(F, n));
    CHECK(fixed_space(g).dim() + fixed_space(g.scaled(6)).dim() == n);
  }
}

TEST_CASE("subspace canonicity") {
  PrimeField F(7);
  Subspace a = Subspace::span(F, 3, {{1, 2, 3}, {0, 1, 1}});
  Subspace b = Subspace::span(F, 3, {{2, 4, 6}, {1, 3, 4}});
  CHECK(a == b);
  CHECK(a.contains(Vector{1, 3, 4}));
  CHECK(!a.contains(Vector{0, 0, 1}));
}
