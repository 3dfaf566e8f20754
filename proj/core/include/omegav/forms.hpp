#pragma once

#include <optional>
#include <random>
#include <vector>

#include "omegav/matrix.hpp"

namespace omegav {

enum class FormKind { Symmetric, Alternating };

/// A nondegenerate bilinear space: Gram matrix plus its kind.  Symmetric
/// Gram matrices are arbitrary invertible ones, not just the identity.
class BilinearSpace {
 public:
  BilinearSpace(FormKind kind, Matrix gram);

  static BilinearSpace identity_form(PrimeField field, std::size_t dim);
  /// The standard symplectic form J = (0 1_n; -1_n 0) on 2n-space.
  static BilinearSpace symplectic_form(PrimeField field, std::size_t n);

  FormKind kind() const { return kind_; }
  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  const PrimeField& field() const { return gram_.field(); }

  /// B(u, v)
  std::uint64_t pair(const Vector& u, const Vector& v) const;
  /// Q(v) = B(v, v)
  std::uint64_t norm(const Vector& v) const { return pair(v, v); }

  bool operator==(const BilinearSpace& o) const {
    return kind_ == o.kind_ && gram_ == o.gram_;
  }

 private:
  FormKind kind_;
  Matrix gram_;
};

/// Verdict bundle for one matrix against a symmetric space.
struct OrthogonalVerdict {
  bool in_O = false;
  std::uint64_t det = 0;
  std::optional<SquareClass> spinor;
  std::optional<bool> in_Omega;
};

/// g^T * gram * g == gram ?
bool is_isometry(const Matrix& g, const BilinearSpace& V);

/// The scalar nu with g^T J g = nu J; NotASimilitude if no scalar works.
std::uint64_t symplectic_multiplier(const Matrix& g, const BilinearSpace& V);

/// x |-> x - (2 B(x,v) / Q(v)) v.  IsotropicVector when Q(v) = 0.
Matrix reflection(const Vector& v, const BilinearSpace& V);

/// Vectors v_1, ..., v_k with g = reflection(v_1) ... reflection(v_k),
/// k <= 2 dim.  The optional generator shuffles the internal basis order,
/// producing a different (equally valid) decomposition per seed.
std::vector<Vector> cartan_dieudonne(const Matrix& g, const BilinearSpace& V,
                                     std::mt19937_64* rng = nullptr);

/// Product of square_class(Q(v_i)) over a reflection decomposition; the
/// convention sp(reflection(v)) = square_class(Q(v)) is fixed here and
/// nowhere else.
SquareClass spinor_norm(const Matrix& g, const BilinearSpace& V);

/// sp(-1): trivial iff -identity has trivial spinor norm.
SquareClass discriminant(const BilinearSpace& V);

/// Full verdict: O-membership, determinant, spinor norm, Omega-membership.
OrthogonalVerdict classify(const Matrix& g, const BilinearSpace& V);

/// For odd-size g with det +-1: det(g) * g, the SO component under
/// O_{2m+1} = SO_{2m+1} x {+-1}.
Matrix project_to_SO(const Matrix& g);

}  // namespace omegav
