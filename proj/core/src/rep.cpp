#include "omegav/rep.hpp"

#include <algorithm>
#include <set>

#include "omegav/errors.hpp"

namespace omegav {

namespace {

constexpr std::uint64_t kLineBudget = 2'000'000;

void check_member(const Matrix& g, const BilinearSpace& V) {
  if (!g.is_square() || g.rows() != V.dim())
    throw ShapeError("representation matrix has wrong shape");
  if (V.kind() == FormKind::Symmetric) {
    if (!is_isometry(g, V))
      throw NotAnIsometry("generator is not an isometry of the form");
  } else {
    symplectic_multiplier(g, V);  // throws NotASimilitude if none
  }
}

Matrix direct_sum_one(const Matrix& g) {
  std::size_t n = g.rows();
  Matrix out(g.field(), n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, g.at(i, j));
  out.set(n, n, 1);
  return out;
}

}  // namespace

RepImage::RepImage(std::vector<Matrix> generators, Matrix conjugation,
                   BilinearSpace space)
    : generators_(std::move(generators)),
      conjugation_(std::move(conjugation)),
      space_(std::move(space)) {
  if (generators_.empty()) throw ShapeError("generator list is empty");
  for (const auto& g : generators_) check_member(g, space_);
  check_member(conjugation_, space_);
  if (!(conjugation_ * conjugation_ ==
        Matrix::identity(space_.field(), space_.dim())))
    throw NotAnInvolution("conjugation image must square to the identity");
}

Matrix interleave_blocks(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw ShapeError("no blocks given");
  const PrimeField& F = blocks[0].field();
  for (const auto& b : blocks) {
    if (b.rows() != 2 || b.cols() != 2)
      throw ShapeError("interleave blocks must be 2x2");
    if (b.field() != F)
      throw ModulusMismatch("blocks over different prime fields");
  }
  std::size_t n = blocks.size();
  Matrix out(F, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, i, blocks[i].at(0, 0));
    out.set(i, n + i, blocks[i].at(0, 1));
    out.set(n + i, i, blocks[i].at(1, 0));
    out.set(n + i, n + i, blocks[i].at(1, 1));
  }
  return out;
}

Matrix c_infinity(std::size_t N, PrimeField field) {
  if (N % 2 != 0) throw EvenDimensionRequired("c_infinity needs even N");
  if (N < 4) throw ShapeError("c_infinity needs N >= 4");
  std::size_t n = N / 2;
  Matrix c(field, N, N);
  if (N % 4 == 0) {
    // (0 1_n; 1_n 0)
    for (std::size_t i = 0; i < n; ++i) {
      c.set(i, n + i, 1);
      c.set(n + i, i, 1);
    }
  } else {
    // swap of the first n-1 coordinate pairs, -1 on the two leftover axes
    for (std::size_t i = 0; i + 1 < n; ++i) {
      c.set(i, n + i, 1);
      c.set(n + i, i, 1);
    }
    c.set_signed(n - 1, n - 1, -1);
    c.set_signed(2 * n - 1, 2 * n - 1, -1);
  }
  return c;
}

RepImage extend_plus_one(const RepImage& rep) {
  if (rep.space().kind() != FormKind::Symmetric)
    throw ShapeError("extension by an orthogonal line needs a symmetric form");
  if (rep.dim() % 2 != 0)
    throw EvenDimensionRequired("extend_plus_one expects even dimension");
  std::size_t n = rep.dim();
  Matrix gram(rep.field(), n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.set(i, j, rep.space().gram().at(i, j));
  gram.set(n, n, 1);
  std::vector<Matrix> gens;
  gens.reserve(rep.generators().size());
  for (const auto& g : rep.generators()) gens.push_back(direct_sum_one(g));
  return RepImage(std::move(gens), direct_sum_one(rep.conjugation()),
                  BilinearSpace(FormKind::Symmetric, std::move(gram)));
}

RepImage quadratic_twist(const RepImage& rep, const std::vector<int>& signs) {
  if (signs.size() != rep.generators().size() + 1)
    throw SignCountError("need one sign per generator plus one for c");
  for (int s : signs)
    if (s != 1 && s != -1) throw SignCountError("signs must be +-1");
  const PrimeField& F = rep.field();
  std::uint64_t minus_one = F.neg(1);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < rep.generators().size(); ++i)
    gens.push_back(signs[i] == 1 ? rep.generators()[i]
                                 : rep.generators()[i].scaled(minus_one));
  Matrix conj = signs.back() == 1 ? rep.conjugation()
                                  : rep.conjugation().scaled(minus_one);
  return RepImage(std::move(gens), std::move(conj), rep.space());
}

namespace {

// (ell^d - 1)/(ell - 1), or nullopt past the budget.
std::optional<std::uint64_t> line_count(std::uint64_t ell, std::size_t d) {
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += power;
    power *= ell;
    if (total > kLineBudget) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

// Smallest invariant subspace containing v: spin under the action.
Subspace spin(const RepImage& rep, const Vector& v) {
  const PrimeField& F = rep.field();
  std::size_t n = rep.dim();
  std::vector<const Matrix*> action;
  for (const auto& g : rep.generators()) action.push_back(&g);
  action.push_back(&rep.conjugation());

  Subspace s = Subspace::span(F, n, {v});
  std::vector<Vector> frontier = {v};
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& w : frontier)
      for (const Matrix* m : action) {
        Vector img = omegav::apply(*m, w);
        if (!s.contains(img)) {
          std::vector<Vector> rows = s.basis();
          rows.push_back(img);
          s = Subspace::span(F, n, rows);
          next.push_back(std::move(img));
        }
      }
    frontier = std::move(next);
  }
  return s;
}

// All distinct spinning closures of lines, proper and nonzero.
std::set<Subspace> spun_subspaces(const RepImage& rep) {
  const PrimeField& F = rep.field();
  std::size_t n = rep.dim();
  if (!line_count(F.modulus(), n))
    throw EnumerationBudgetExceeded(
        "too many projective lines to enumerate in dimension " +
        std::to_string(n) + " over F_" + std::to_string(F.modulus()));
  std::set<Subspace> out;
  // Canonical line representatives: first nonzero entry 1 at position p.
  Vector v(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    std::fill(v.begin(), v.end(), 0);
    v[p] = 1;
    // Enumerate the free tail v[p+1..n) over F_ell.
    bool done = false;
    while (!done) {
      Subspace s = spin(rep, v);
      if (s.dim() < n) out.insert(std::move(s));
      done = true;
      for (std::size_t j = n; j-- > p + 1;) {
        if (++v[j] < F.modulus()) {
          done = false;
          break;
        }
        v[j] = 0;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Subspace> minimal_invariant_subspaces(const RepImage& rep) {
  auto spun = spun_subspaces(rep);
  std::vector<Subspace> minimal;
  for (const auto& s : spun) {
    bool is_min = true;
    for (const auto& t : spun)
      if (!(t == s) && s.contains(t)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<Subspace> invariant_subspaces(const RepImage& rep) {
  auto spun = spun_subspaces(rep);
  // Close under sums: every invariant subspace is a sum of line closures.
  std::set<Subspace> all = spun;
  std::vector<Subspace> worklist(all.begin(), all.end());
  while (!worklist.empty()) {
    Subspace s = std::move(worklist.back());
    worklist.pop_back();
    for (const auto& t : spun) {
      Subspace u = s.sum(t);
      if (u.dim() == rep.dim()) continue;
      if (all.insert(u).second) worklist.push_back(std::move(u));
    }
  }
  return {all.begin(), all.end()};
}

bool is_totally_isotropic(const Subspace& s, const BilinearSpace& V) {
  for (const auto& u : s.basis())
    for (const auto& w : s.basis())
      if (V.pair(u, w) != 0) return false;
  return true;
}

bool is_g_irreducible(const RepImage& rep) {
  // Any invariant totally isotropic subspace contains a minimal invariant
  // subspace, which inherits total isotropy.
  for (const auto& s : minimal_invariant_subspaces(rep))
    if (is_totally_isotropic(s, rep.space())) return false;
  return true;
}

LieAlgebraBasis lie_algebra(const BilinearSpace& space) {
  const PrimeField& F = space.field();
  const Matrix& G = space.gram();
  std::size_t d = space.dim();
  // Linear system X^T G + G X = 0 in the d^2 entries of X.
  Matrix sys(F, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t eq = i * d + j;
      for (std::size_t r = 0; r < d; ++r) {
        // X[r][i] * G[r][j]
        std::size_t var1 = r * d + i;
        sys.set(eq, var1, F.add(sys.at(eq, var1), G.at(r, j)));
        // G[i][r] * X[r][j]
        std::size_t var2 = r * d + j;
        sys.set(eq, var2, F.add(sys.at(eq, var2), G.at(i, r)));
      }
    }
  Subspace ker = kernel_basis(sys);
  LieAlgebraBasis out{space.kind(), {}};
  for (const auto& row : ker.basis()) {
    Matrix X(F, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) X.set(i, j, row[i * d + j]);
    out.basis.push_back(std::move(X));
  }
  return out;
}

std::size_t flag_dimension(RootSystem type, std::size_t rank) {
  switch (type) {
    case RootSystem::A:
      return rank * (rank + 1) / 2;
    case RootSystem::B:
    case RootSystem::C:
      return rank * rank;
    case RootSystem::D:
      return rank * (rank - 1);
  }
  throw ShapeError("unknown root system");
}

OddnessReport is_odd(const RepImage& rep) {
  const PrimeField& F = rep.field();
  std::size_t d = rep.dim();
  const Matrix& c = rep.conjugation();
  if (!(c * c == Matrix::identity(F, d)))
    throw NotAnInvolution("conjugation image must square to the identity");

  LieAlgebraBasis L = lie_algebra(rep.space());
  std::size_t k = L.basis.size();

  // Pivot columns of the echelonized (vectorized) Lie algebra basis.
  std::vector<std::size_t> pivots(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix& X = L.basis[j];
    std::size_t p = 0;
    while (p < d * d && X.at(p / d, p % d) == 0) ++p;
    pivots[j] = p;
  }

  // Matrix of Ad(c) on the Lie algebra in that basis (c is an involution,
  // so conjugation by c is c X c).
  Matrix ad(F, k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Matrix Y = c * L.basis[j] * c;
    for (std::size_t i = 0; i < k; ++i)
      ad.set(j, i, Y.at(pivots[i] / d, pivots[i] % d));
  }
  Matrix diff = (ad - Matrix::identity(F, k)).transpose();
  std::size_t fixed_dim = kernel_basis(diff).dim();

  OddnessReport report;
  report.fixed_dim = fixed_dim;
  if (rep.space().kind() == FormKind::Symmetric) {
    report.flag_dim = d % 2 == 1 ? flag_dimension(RootSystem::B, (d - 1) / 2)
                                 : flag_dimension(RootSystem::D, d / 2);
    // Exterior-square cross-check: tr(Ad c) on so_d equals
    // (tr(c)^2 - tr(c^2))/2, which must match 2 fixed_dim - dim g.
    std::uint64_t t = c.trace();
    std::uint64_t lhs = F.mul(F.sub(F.mul(t, t), (c * c).trace()),
                              F.inv(2 % F.modulus()));
    std::uint64_t rhs = F.reduce(2 * static_cast<std::int64_t>(fixed_dim) -
                                 static_cast<std::int64_t>(k));
    report.trace_check = lhs == rhs;
  } else {
    report.flag_dim = flag_dimension(RootSystem::C, d / 2);
    report.trace_check = true;
  }
  report.verdict = report.fixed_dim == report.flag_dim;
  return report;
}

Construction choose_construction(ConstructionCase c, std::int64_t tr) {
  if (tr != -2 && tr != 0 && tr != 2)
    throw TraceOutOfRange("trace of conjugation must be in {-2, 0, 2}");
  if (c == ConstructionCase::Mod6O) return Construction::ProjectThenSum;
  if (tr == 2) return Construction::TwistThenSum;
  return Construction::DirectSum;
}

WeightAssignment select_ht_weights(std::size_t n, std::int64_t target_sum) {
  if (n < 1) throw ShapeError("need n >= 1 weight pairs");
  for (std::int64_t offset = 0;; ++offset) {
    // Candidate pairs {-(offset+i), target_sum + offset + i}, i = 1..n.
    // Negatives and positives are separately distinct; a cross collision
    // -(offset+i) = target_sum + offset + j needs -target_sum - 2 offset
    // to land in [2, 2n].
    std::int64_t collide = -target_sum - 2 * offset;
    if (collide >= 2 && collide <= 2 * static_cast<std::int64_t>(n))
      continue;
    WeightAssignment out;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i)
      out.pairs.push_back({-(offset + i), target_sum + offset + i});
    return out;
  }
}

}  // namespace omegav
