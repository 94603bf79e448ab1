#include "gbkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gbkit {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (std::uint32_t e : exps_) {
    if (e > kMaxExponent) throw Error(Errc::ExponentOverflow, "exponent " + std::to_string(e) + " exceeds 2^20-1");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::ArityMismatch, "monomial product of different arity");
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    std::uint32_t e = a.exps_[i] + b.exps_[i];
    if (e > Monomial::kMaxExponent) throw Error(Errc::ExponentOverflow, "exponent exceeds 2^20-1");
    r.exps_[i] = e;
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw Error(Errc::Internal, "monomial quotient is not exact");
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::ArityMismatch, "lcm of different arity");
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::ArityMismatch, "gcd of different arity");
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::string to_string(TermOrder order) {
  switch (order) {
    case TermOrder::Lex: return "lex";
    case TermOrder::DegLex: return "deglex";
    case TermOrder::DegRevLex: return "degrevlex";
  }
  return "?";
}

TermOrder parse_term_order(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "lex" || s == "plex") return TermOrder::Lex;
  if (s == "deglex" || s == "grlex") return TermOrder::DegLex;
  if (s == "degrevlex" || s == "drl" || s == "grevlex") return TermOrder::DegRevLex;
  throw Error(Errc::ParseError, "unknown term order '" + name + "'");
}

std::strong_ordering compare_unchecked(TermOrder order, const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = a.nvars();
  if (order != TermOrder::Lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (order == TermOrder::DegRevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(Errc::ArityMismatch,
                "comparing terms in " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) + " variables");
  }
  return compare_unchecked(order, a, b);
}

Ring::Ring(PrimeField field, std::vector<std::string> names, TermOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  if (names_.empty()) throw Error(Errc::EmptyInput, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw Error(Errc::ParseError, "duplicate variable '" + n + "'");
  }
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> names, TermOrder order) {
  return std::make_shared<const Ring>(p, std::move(names), order);
}

RingPtr with_order(const RingPtr& ring, TermOrder order) {
  if (ring->order() == order) return ring;
  return std::make_shared<const Ring>(ring->field(), ring->names(), order);
}

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error(Errc::RingMismatch, "polynomials from different rings");
}

void check_same_ring(const std::vector<Polynomial>& F) {
  for (std::size_t i = 1; i < F.size(); ++i) check_same_ring(F[0], F[i]);
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Ring& R = *ring_;
  for (auto& t : terms) {
    if (t.mono.nvars() != R.nvars()) throw Error(Errc::ArityMismatch, "term arity does not match the ring");
    t.coeff %= R.field().modulus();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.cmp(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = R.field().add(terms_.back().coeff, t.coeff);
    } else {
      terms_.push_back(std::move(t));
    }
    if (terms_.back().coeff == 0) terms_.pop_back();
  }
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Residue r = ring->field().reduce(c);
  Monomial one(ring->nvars());
  if (r == 0) return Polynomial(std::move(ring));
  return from_sorted(std::move(ring), {Term{std::move(one), r}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Residue c) {
  if (m.nvars() != ring->nvars()) throw Error(Errc::ArityMismatch, "term arity does not match the ring");
  c %= ring->field().modulus();
  if (c == 0) return Polynomial(std::move(ring));
  return from_sorted(std::move(ring), {Term{std::move(m), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), std::move(m), 1);
}

const Monomial& Polynomial::lt() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.front().mono;
}

FieldElement Polynomial::lc() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return FieldElement(terms_.front().coeff, ring_->field());
}

Term Polynomial::lm() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading monomial of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Residue Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::scaled(Residue c) const {
  const PrimeField& F = ring_->field();
  c %= F.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return from_sorted(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::mul_term(const Monomial& m, Residue c) const {
  const PrimeField& F = ring_->field();
  c %= F.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, F.mul(t.coeff, c)});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::sub_mul_term(const Monomial& m, Residue c, const Polynomial& g) const {
  check_same_ring(*this, g);
  const Ring& R = *ring_;
  const PrimeField& F = R.field();
  c %= F.modulus();
  if (c == 0 || g.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Monomial shifted;
  bool have = false;
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b != g.terms_.end() && !have) {
      shifted = b->mono * m;
      have = true;
    }
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    if (a == terms_.end()) {
      out.push_back(Term{std::move(shifted), F.neg(F.mul(b->coeff, c))});
      ++b;
      have = false;
      continue;
    }
    auto o = R.cmp(a->mono, shifted);
    if (o > 0) {
      out.push_back(*a++);
    } else if (o < 0) {
      out.push_back(Term{std::move(shifted), F.neg(F.mul(b->coeff, c))});
      ++b;
      have = false;
    } else {
      Residue v = F.sub(a->coeff, F.mul(b->coeff, c));
      if (v != 0) out.push_back(Term{a->mono, v});
      ++a;
      ++b;
      have = false;
    }
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::with_ring(RingPtr ring) const {
  if (ring->field() != ring_->field() || ring->nvars() != ring_->nvars()) {
    throw Error(Errc::RingMismatch, "cannot move a polynomial between rings of different shape");
  }
  return Polynomial(std::move(ring), terms_);
}

Residue Polynomial::evaluate(const std::vector<Residue>& point) const {
  const PrimeField& F = ring_->field();
  if (point.size() != ring_->nvars()) throw Error(Errc::ArityMismatch, "evaluation point has wrong length");
  Residue acc = 0;
  for (const auto& t : terms_) {
    Residue v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] != 0) v = F.mul(v, F.pow(point[i], t.mono[i]));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  const Ring& R = *f.ring_;
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  while (a != f.terms_.end() && b != g.terms_.end()) {
    auto o = R.cmp(a->mono, b->mono);
    if (o > 0) {
      out.push_back(*a++);
    } else if (o < 0) {
      out.push_back(*b++);
    } else {
      Residue v = F.add(a->coeff, b->coeff);
      if (v != 0) out.push_back(Term{a->mono, v});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, f.terms_.end());
  out.insert(out.end(), b, g.terms_.end());
  return Polynomial::from_sorted(f.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& f) {
  const PrimeField& F = f.ring_->field();
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial::from_sorted(f.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  Polynomial acc(f.ring_);
  for (const auto& t : g.terms_) acc = acc.sub_mul_term(t.mono, f.ring_->field().neg(t.coeff), f);
  return acc;
}

Polynomial operator*(const Polynomial& f, FieldElement c) {
  if (c.modulus() != f.ring_->field().modulus()) {
    throw Error(Errc::RingMismatch, "scalar from F_" + std::to_string(c.modulus()) + " applied to a polynomial over F_" +
                                        std::to_string(f.ring_->field().modulus()));
  }
  return f.scaled(c.value());
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

std::vector<Monomial> support(const std::vector<Polynomial>& F) {
  if (F.empty()) return {};
  check_same_ring(F);
  const Ring& R = *F[0].ring();
  std::vector<Monomial> all;
  for (const auto& f : F) {
    for (const auto& t : f.terms()) all.push_back(t.mono);
  }
  std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) { return R.cmp(a, b) > 0; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace gbkit
