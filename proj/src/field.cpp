#include "gbkit/field.hpp"

#include <ostream>
#include <string>

namespace gbkit {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p <= 2 || p > kMaxModulus) {
    throw Error(Errc::InvalidModulus,
                "modulus " + std::to_string(p) + " must be an odd prime below 2^31");
  }
  if (!is_prime(p)) {
    throw Error(Errc::CompositeModulus, "modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<Residue>(p);
}

Residue PrimeField::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
  std::int64_t old_r = p_, r = a;
  std::int64_t old_s = 0, s = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const noexcept {
  Residue result = 1 % p_;
  base %= p_;
  while (exp != 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

FieldElement PrimeField::element(std::int64_t v) const noexcept { return FieldElement(reduce(v), *this); }

namespace {

Residue common_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::ModulusMismatch, "F_" + std::to_string(a.modulus()) + " vs F_" +
                                           std::to_string(b.modulus()));
  }
  return a.modulus();
}

}  // namespace

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(modulus_));
  std::int64_t old_r = modulus_, r = value_;
  std::int64_t old_s = 0, s = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_s < 0) old_s += modulus_;
  return FieldElement(static_cast<Residue>(old_s), modulus_);
}

FieldElement operator+(FieldElement a, FieldElement b) {
  std::uint64_t p = common_modulus(a, b);
  return FieldElement(static_cast<Residue>((std::uint64_t{a.value_} + b.value_) % p), a.modulus_);
}

FieldElement operator-(FieldElement a, FieldElement b) {
  std::uint64_t p = common_modulus(a, b);
  return FieldElement(static_cast<Residue>((std::uint64_t{a.value_} + p - b.value_) % p), a.modulus_);
}

FieldElement operator*(FieldElement a, FieldElement b) {
  std::uint64_t p = common_modulus(a, b);
  return FieldElement(static_cast<Residue>((std::uint64_t{a.value_} * b.value_) % p), a.modulus_);
}

FieldElement operator-(FieldElement a) {
  return FieldElement(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.modulus() << ")";
}

}  // namespace gbkit
