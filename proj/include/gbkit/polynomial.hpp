#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "gbkit/field.hpp"

namespace gbkit {

// A term x_1^a_1 ... x_n^a_n, stored as its exponent vector.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = (std::uint32_t{1} << 20) - 1;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  // Throws ExponentOverflow if an exponent is >= 2^20.
  explicit Monomial(std::vector<std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // true iff this divides other.
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t e : m.exponents()) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

enum class TermOrder { Lex, DegLex, DegRevLex };

std::string to_string(TermOrder order);
// Accepts "lex", "deglex", "degrevlex" (also "drl", "grevlex").
TermOrder parse_term_order(const std::string& name);

// Throws ArityMismatch on vectors of different lengths.
std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b);

// Unchecked variant for hot loops.
std::strong_ordering compare_unchecked(TermOrder order, const Monomial& a, const Monomial& b) noexcept;

// F_p[x_1..x_n] with a fixed term order; x_1 > x_2 > ... > x_n.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> names, TermOrder order);
  Ring(std::uint64_t p, std::vector<std::string> names, TermOrder order)
      : Ring(PrimeField(p), std::move(names), order) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  TermOrder order() const noexcept { return order_; }

  std::strong_ordering cmp(const Monomial& a, const Monomial& b) const noexcept {
    return compare_unchecked(order_, a, b);
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> names, TermOrder order);
RingPtr with_order(const RingPtr& ring, TermOrder order);

struct Term {
  Monomial mono;
  Residue coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Terms in any order; duplicates merged, zeros dropped, coefficients reduced.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, Monomial m, Residue c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);
  // Caller guarantees strictly descending, nonzero, reduced coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Leading data; all throw ZeroPolynomial on 0.
  const Monomial& lt() const;
  FieldElement lc() const;
  Term lm() const;
  std::uint64_t degree() const noexcept;

  Residue coefficient(const Monomial& m) const;

  Polynomial monic() const;
  // Everything but the leading term.
  Polynomial tail() const;
  Polynomial scaled(Residue c) const;
  Polynomial mul_term(const Monomial& m, Residue c) const;

  // this - c*m*g, the fused reduction step.
  Polynomial sub_mul_term(const Monomial& m, Residue c, const Polynomial& g) const;

  // Re-sorts under another ring with the same field and variables.
  Polynomial with_ring(RingPtr ring) const;

  Residue evaluate(const std::vector<Residue>& point) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, FieldElement c);
  friend Polynomial operator-(const Polynomial& f);

  // Equal iff same ring and same terms.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Throws RingMismatch unless both polynomials live in equal rings.
void check_same_ring(const Polynomial& f, const Polynomial& g);
void check_same_ring(const std::vector<Polynomial>& F);

// Union of supports, strictly descending.
std::vector<Monomial> support(const std::vector<Polynomial>& F);

}  // namespace gbkit
