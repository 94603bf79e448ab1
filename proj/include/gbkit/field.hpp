#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "gbkit/error.hpp"

namespace gbkit {

// Canonical residue in [0, p-1]. Hot loops (elimination, reduction) work on
// raw residues through a PrimeField; FieldElement is the checked value type.
using Residue = std::uint32_t;

class FieldElement;

// The prime field F_p with 2 < p < 2^31. Products of two residues fit in 64
// bits, so every operation is a widening multiply followed by one reduction.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  // Throws InvalidModulus when p is out of range and CompositeModulus when p
  // fails the primality check.
  explicit PrimeField(std::uint64_t p);

  Residue modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue reduce_unsigned(std::uint64_t v) const noexcept { return static_cast<Residue>(v % p_); }

  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  // a - b*c, the elimination kernel.
  Residue sub_mul(Residue a, Residue b, Residue c) const noexcept {
    return sub(a, mul(b, c));
  }
  // Extended Euclid. Throws DivisionByZero on 0.
  Residue inv(Residue a) const;
  Residue pow(Residue base, std::uint64_t exp) const noexcept;

  FieldElement element(std::int64_t v) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldElement {
 public:
  FieldElement(Residue value, const PrimeField& field) noexcept
      : value_(value % field.modulus()), modulus_(field.modulus()) {}

  Residue value() const noexcept { return value_; }
  Residue modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  // Throws DivisionByZero for the zero element.
  FieldElement inv() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a);

  // Elements of different fields compare unequal rather than throwing.
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(Residue value, Residue modulus) noexcept : value_(value), modulus_(modulus) {}

  Residue value_;
  Residue modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace gbkit
