#include "omegav/field.hpp"

#include <ostream>

namespace omegav {

std::ostream& operator<<(std::ostream& os, SquareClass c) {
  return os << (c == SquareClass::Trivial ? "trivial" : "non-trivial");
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t ell) : ell_(ell) {
  if (ell < 5 || !is_prime(ell))
    throw NotAPrime("modulus must be a prime >= 5, got " + std::to_string(ell));
}

std::uint64_t PrimeField::reduce(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(ell_);
  if (r < 0) r += static_cast<std::int64_t>(ell_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  return s >= ell_ ? s - ell_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + ell_ - b;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % ell_);
}

std::uint64_t PrimeField::neg(std::uint64_t a) const {
  return a == 0 ? 0 : ell_ - a;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= ell_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % ell_ == 0) throw DivisionByZero("inverse of zero");
  return pow(a, ell_ - 2);
}

SquareClass PrimeField::square_class(std::uint64_t a) const {
  if (a % ell_ == 0) throw NotAUnit("square class of zero");
  return pow(a, (ell_ - 1) / 2) == 1 ? SquareClass::Trivial
                                     : SquareClass::NonTrivial;
}

namespace {

void check_same(FieldElement a, FieldElement b) {
  if (a.modulus != b.modulus)
    throw ModulusMismatch("operands over F_" + std::to_string(a.modulus) +
                          " and F_" + std::to_string(b.modulus));
}

}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same(a, b);
  return {PrimeField(a.modulus).add(a.value, b.value), a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  check_same(a, b);
  return {PrimeField(a.modulus).sub(a.value, b.value), a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  check_same(a, b);
  return {PrimeField(a.modulus).mul(a.value, b.value), a.modulus};
}

FieldElement invert(FieldElement a) {
  return {PrimeField(a.modulus).inv(a.value), a.modulus};
}

SquareClass square_class(FieldElement a) {
  return PrimeField(a.modulus).square_class(a.value);
}

}  // namespace omegav
