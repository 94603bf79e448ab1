#include "gbkit/univariate.hpp"

namespace gbkit {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Residue eval(const PrimeField& F, const UPoly& a, Residue x) {
  Residue acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

UPoly rem(const PrimeField& F, UPoly a, const UPoly& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "univariate remainder by zero");
  trim(a);
  Residue inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Residue c = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub_mul(a[shift + i], c, b[i]);
    trim(a);
  }
  return a;
}

UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Residue inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

std::vector<Residue> roots(const PrimeField& F, const UPoly& a) {
  if (a.empty()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Residue> out;
  if (a.size() == 1) return out;
  if (a.size() == 2) {
    out.push_back(F.neg(F.mul(a[0], F.inv(a[1]))));
    return out;
  }
  for (Residue x = 0; x < F.modulus(); ++x) {
    if (eval(F, a, x) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace gbkit
