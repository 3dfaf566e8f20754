#pragma once

#include <cstdint>
#include <iosfwd>

#include "omegav/errors.hpp"

namespace omegav {

/// Coset in F_ell^x / (F_ell^x)^2, the value group of the spinor norm.
enum class SquareClass { Trivial, NonTrivial };

inline SquareClass operator*(SquareClass a, SquareClass b) {
  return a == b ? SquareClass::Trivial : SquareClass::NonTrivial;
}

std::ostream& operator<<(std::ostream& os, SquareClass c);

/// The prime field F_ell for an odd prime ell >= 5.  All residues are kept
/// canonical in [0, ell).  Machine-word modulus with double-width products.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t ell);

  std::uint64_t modulus() const { return ell_; }

  std::uint64_t reduce(std::int64_t x) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // DivisionByZero on 0

  /// Euler criterion: Trivial iff a^((ell-1)/2) = 1.  NotAUnit on 0.
  SquareClass square_class(std::uint64_t a) const;

  bool operator==(const PrimeField& o) const { return ell_ == o.ell_; }
  bool operator!=(const PrimeField& o) const { return ell_ != o.ell_; }

 private:
  std::uint64_t ell_;
};

/// True when ell clears the one explicit largeness bound the source
/// material states, ell > 2(2N+1); smaller primes are accepted everywhere
/// but callers may want to surface a warning.
inline bool modulus_comfortably_large(std::uint64_t ell, std::uint64_t N) {
  return ell > 2 * (2 * N + 1);
}

/// A residue tagged with its modulus.  Mixed-modulus arithmetic raises
/// ModulusMismatch.
struct FieldElement {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  bool operator==(const FieldElement&) const = default;
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement invert(FieldElement a);
SquareClass square_class(FieldElement a);

}  // namespace omegav
