#include "omegav/forms.hpp"

#include <algorithm>
#include <numeric>

#include "omegav/errors.hpp"

namespace omegav {

BilinearSpace::BilinearSpace(FormKind kind, Matrix gram)
    : kind_(kind), gram_(std::move(gram)) {
  if (!gram_.is_square()) throw ShapeError("Gram matrix must be square");
  if (determinant(gram_) == 0)
    throw DegenerateForm("Gram matrix is singular");
  const PrimeField& F = gram_.field();
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      if (kind_ == FormKind::Symmetric) {
        if (gram_.at(i, j) != gram_.at(j, i))
          throw ShapeError("symmetric form requires symmetric Gram matrix");
      } else {
        if (gram_.at(i, j) != F.neg(gram_.at(j, i)))
          throw ShapeError("alternating form requires skew Gram matrix");
      }
    }
  if (kind_ == FormKind::Alternating)
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      if (gram_.at(i, i) != 0)
        throw ShapeError("alternating form requires zero diagonal");
}

BilinearSpace BilinearSpace::identity_form(PrimeField field, std::size_t dim) {
  return BilinearSpace(FormKind::Symmetric, Matrix::identity(field, dim));
}

BilinearSpace BilinearSpace::symplectic_form(PrimeField field, std::size_t n) {
  Matrix j(field, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.set(i, n + i, 1);
    j.set_signed(n + i, i, -1);
  }
  return BilinearSpace(FormKind::Alternating, std::move(j));
}

std::uint64_t BilinearSpace::pair(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw ShapeError("pairing argument has wrong length");
  const PrimeField& F = field();
  Vector gv = omegav::apply(gram_, v);
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s = F.add(s, F.mul(u[i], gv[i]));
  return s;
}

bool is_isometry(const Matrix& g, const BilinearSpace& V) {
  if (!g.is_square() || g.rows() != V.dim())
    throw ShapeError("isometry candidate has wrong shape");
  return g.transpose() * V.gram() * g == V.gram();
}

std::uint64_t symplectic_multiplier(const Matrix& g, const BilinearSpace& V) {
  if (V.kind() != FormKind::Alternating)
    throw ShapeError("symplectic multiplier needs an alternating form");
  if (!g.is_square() || g.rows() != V.dim())
    throw ShapeError("similitude candidate has wrong shape");
  Matrix m = g.transpose() * V.gram() * g;
  const Matrix& j = V.gram();
  const PrimeField& F = j.field();
  std::uint64_t nu = 0;
  bool found = false;
  for (std::size_t r = 0; r < j.rows() && !found; ++r)
    for (std::size_t c = 0; c < j.cols() && !found; ++c)
      if (j.at(r, c) != 0) {
        nu = F.mul(m.at(r, c), F.inv(j.at(r, c)));
        found = true;
      }
  if (!found || !(m == j.scaled(nu)) || nu == 0)
    throw NotASimilitude("g^T J g is not a nonzero multiple of J");
  return nu;
}

Matrix reflection(const Vector& v, const BilinearSpace& V) {
  if (V.kind() != FormKind::Symmetric)
    throw ShapeError("reflections require a symmetric form");
  std::uint64_t q = V.norm(v);
  if (q == 0) throw IsotropicVector("reflection vector is isotropic");
  const PrimeField& F = V.field();
  std::size_t n = V.dim();
  std::uint64_t two_over_q = F.mul(2 % F.modulus(), F.inv(q));
  Vector gv = omegav::apply(V.gram(), v);  // gv[j] = B(e_j, v)
  Matrix r = Matrix::identity(F, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.set(i, j,
            F.sub(r.at(i, j), F.mul(F.mul(two_over_q, gv[j]), v[i])));
  return r;
}

namespace {

// Orthogonal basis of a nondegenerate symmetric space: repeatedly pick an
// anisotropic vector from the working complement and project it off.  Over
// F_ell with ell odd one always exists (if all Q(w_i) vanish, some pairing
// B(w_i, w_j) does not, and Q(w_i + w_j) = 2 B(w_i, w_j) != 0).
std::vector<Vector> orthogonal_basis(const BilinearSpace& V) {
  const PrimeField& F = V.field();
  std::size_t n = V.dim();
  std::vector<Vector> work;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    work.push_back(std::move(e));
  }
  std::vector<Vector> out;
  while (!work.empty()) {
    Vector f;
    std::size_t picked = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (V.norm(work[i]) != 0) {
        f = work[i];
        picked = i;
        break;
      }
    if (picked == work.size()) {
      for (std::size_t i = 0; i < work.size() && f.empty(); ++i)
        for (std::size_t j = i + 1; j < work.size() && f.empty(); ++j)
          if (V.pair(work[i], work[j]) != 0) {
            f = work[i];
            for (std::size_t k = 0; k < n; ++k)
              f[k] = F.add(f[k], work[j][k]);
            picked = i;
          }
      if (f.empty())
        throw DegenerateForm("no anisotropic vector in complement");
    }
    out.push_back(f);
    std::uint64_t qinv = F.inv(V.norm(f));
    std::vector<Vector> projected;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == picked) continue;
      Vector w = work[i];
      std::uint64_t c = F.mul(V.pair(w, f), qinv);
      for (std::size_t k = 0; k < n; ++k)
        w[k] = F.sub(w[k], F.mul(c, f[k]));
      projected.push_back(std::move(w));
    }
    // re-independent: drop vectors that became dependent
    Subspace s = Subspace::span(F, n, projected);
    work.assign(s.basis().begin(), s.basis().end());
  }
  return out;
}

bool is_identity(const Matrix& m) {
  return m == Matrix::identity(m.field(), m.rows());
}

}  // namespace

std::vector<Vector> cartan_dieudonne(const Matrix& g, const BilinearSpace& V,
                                     std::mt19937_64* rng) {
  if (!is_isometry(g, V))
    throw NotAnIsometry("cartan_dieudonne input is not an isometry");
  const PrimeField& F = V.field();
  std::size_t n = V.dim();
  std::vector<Vector> basis = orthogonal_basis(V);
  if (rng) std::shuffle(basis.begin(), basis.end(), *rng);

  // Peel g down to the identity one orthogonal basis vector at a time.
  // At the step for f, h already fixes the previously processed f's, and
  // every reflection vector used is orthogonal to them, so the fixes stick.
  std::vector<Vector> vs;
  Matrix h = g;
  for (const Vector& f : basis) {
    Vector hf = omegav::apply(h, f);
    if (hf == f) continue;
    Vector diff(n), sum(n);
    for (std::size_t k = 0; k < n; ++k) {
      diff[k] = F.sub(hf[k], f[k]);
      sum[k] = F.add(hf[k], f[k]);
    }
    if (V.norm(diff) != 0) {
      // r_diff maps h f to f
      h = reflection(diff, V) * h;
      vs.push_back(std::move(diff));
    } else {
      // Q(diff) + Q(sum) = 4 Q(f) != 0, so Q(sum) != 0 here;
      // r_sum maps h f to -f, then r_f maps -f to f.
      h = reflection(f, V) * reflection(sum, V) * h;
      vs.push_back(std::move(sum));
      vs.push_back(f);
    }
  }
  if (!is_identity(h))
    throw DecompositionFailed("reflection peeling did not terminate");
  return vs;
}

SquareClass spinor_norm(const Matrix& g, const BilinearSpace& V) {
  auto vs = cartan_dieudonne(g, V);
  SquareClass c = SquareClass::Trivial;
  for (const auto& v : vs) c = c * V.field().square_class(V.norm(v));
  return c;
}

SquareClass discriminant(const BilinearSpace& V) {
  if (V.kind() != FormKind::Symmetric)
    throw ShapeError("discriminant requires a symmetric form");
  Matrix neg_id = Matrix::identity(V.field(), V.dim()).scaled(
      V.field().neg(1));
  return spinor_norm(neg_id, V);
}

OrthogonalVerdict classify(const Matrix& g, const BilinearSpace& V) {
  if (V.kind() != FormKind::Symmetric)
    throw ShapeError("classify requires a symmetric form");
  OrthogonalVerdict verdict;
  verdict.det = determinant(g);
  verdict.in_O = is_isometry(g, V);
  if (!verdict.in_O) return verdict;
  verdict.spinor = spinor_norm(g, V);
  verdict.in_Omega =
      verdict.det == 1 && *verdict.spinor == SquareClass::Trivial;
  return verdict;
}

Matrix project_to_SO(const Matrix& g) {
  if (!g.is_square()) throw ShapeError("projection of non-square matrix");
  if (g.rows() % 2 == 0)
    throw OddDimensionRequired("SO projection needs odd dimension");
  std::uint64_t d = determinant(g);
  const PrimeField& F = g.field();
  if (d != 1 && d != F.neg(1))
    throw NotOrthogonalShape("determinant is not +-1");
  return g.scaled(d);
}

}  // namespace omegav
