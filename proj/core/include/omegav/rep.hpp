#pragma once

#include <cstdint>
#include <vector>

#include "omegav/forms.hpp"
#include "omegav/matrix.hpp"

namespace omegav {

/// A matrix image of a Galois group: generator matrices plus the
/// designated involution playing the role of complex conjugation.  The
/// group itself is abstracted away; every verdict computed here (form
/// compatibility, irreducibility, oddness at the involution, traces)
/// depends only on this data.
class RepImage {
 public:
  RepImage(std::vector<Matrix> generators, Matrix conjugation,
           BilinearSpace space);

  std::size_t dim() const { return space_.dim(); }
  const std::vector<Matrix>& generators() const { return generators_; }
  const Matrix& conjugation() const { return conjugation_; }
  const BilinearSpace& space() const { return space_; }
  const PrimeField& field() const { return space_.field(); }

 private:
  std::vector<Matrix> generators_;
  Matrix conjugation_;
  BilinearSpace space_;
};

/// Echelonized basis of { X : X^T gram + gram X = 0 }, the Lie algebra of
/// the isometry group: so_m for symmetric forms, sp_2n for alternating.
struct LieAlgebraBasis {
  FormKind type;
  std::vector<Matrix> basis;
};

/// n integer pairs with all 2n members distinct and all pair sums equal.
struct WeightAssignment {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

/// The 2n x 2n matrix with the a_i / b_i / c_i / d_i entries of the 2x2
/// blocks spread along the four n x n diagonals.  When all block
/// determinants agree the result is a symplectic similitude for
/// J = (0 1_n; -1_n 0) with multiplier that common determinant.
Matrix interleave_blocks(const std::vector<Matrix>& blocks);

/// The fixed order-two element of SO_N(F_ell), one shape per N mod 4.
/// Trace 0 when N = 0 mod 4, trace -2 when N = 2 mod 4.
Matrix c_infinity(std::size_t N, PrimeField field);

/// Standard embedding SO_N -> SO_{N+1}: each matrix gains a fixed
/// orthogonal line of norm 1.
RepImage extend_plus_one(const RepImage& rep);

/// Twist by a quadratic character realized as one sign per generator plus
/// one for the conjugation.
RepImage quadratic_twist(const RepImage& rep,
                         const std::vector<int>& signs);

/// All proper nonzero subspaces invariant under every generator and the
/// conjugation: minimal ones found by spinning every line, closed under
/// sums.  EnumerationBudgetExceeded when the projective line count
/// exceeds the budget.
std::vector<Subspace> invariant_subspaces(const RepImage& rep);

/// Minimal invariant subspaces only (the spinning closures of lines, with
/// non-minimal ones discarded).
std::vector<Subspace> minimal_invariant_subspaces(const RepImage& rep);

/// True iff no invariant subspace is totally isotropic, i.e. the image
/// lies in no proper parabolic of the isometry group.
bool is_g_irreducible(const RepImage& rep);

bool is_totally_isotropic(const Subspace& s, const BilinearSpace& V);

LieAlgebraBasis lie_algebra(const BilinearSpace& space);

enum class RootSystem { A, B, C, D };

/// Number of positive roots: dim of the flag variety.
std::size_t flag_dimension(RootSystem type, std::size_t rank);

struct OddnessReport {
  bool verdict = false;
  std::size_t fixed_dim = 0;
  std::size_t flag_dim = 0;
  bool trace_check = false;  // exterior-square trace agrees (orthogonal only)
};

/// Oddness at the designated involution: the Ad-fixed dimension in the
/// derived Lie algebra must equal the flag variety dimension.
OddnessReport is_odd(const RepImage& rep);

enum class ConstructionCase { Mod0, Mod2, Mod4, Mod6Omega, Mod6O };
enum class Construction { DirectSum, TwistThenSum, ProjectThenSum };

/// Which construction yields an odd SO_{N+1} representation, per the case
/// of N mod 8 and the trace of the conjugation.
Construction choose_construction(ConstructionCase c, std::int64_t tr_theta_c);

/// n pairs with distinct members and common sum target_sum.
WeightAssignment select_ht_weights(std::size_t n, std::int64_t target_sum);

}  // namespace omegav
