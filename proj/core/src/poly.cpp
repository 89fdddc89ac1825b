#include "tqft/poly.hpp"

#include <sstream>

#include "tqft/errors.hpp"

namespace tqft {

Poly Poly::from_coeffs(Field f, Vec coeffs) {
  Poly p(f);
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.coeffs_ = {c};
  return p;
}

Poly Poly::x(Field f) { return from_coeffs(f, {f.zero(), f.one()}); }

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

const Scalar& Poly::lc() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out(field_);
  out.coeffs_ = coeffs_;
  if (rhs.coeffs_.size() > out.coeffs_.size()) out.coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out(field_);
  out.coeffs_ = coeffs_;
  if (rhs.coeffs_.size() > out.coeffs_.size()) out.coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return Poly(field_);
  Poly out(field_);
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (!rhs.coeffs_[j].is_zero()) out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(field_);
  out.coeffs_ = coeffs_;
  for (auto& x : out.coeffs_) x *= c;
  out.trim();
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = *this;
  Poly quot(field_);
  int dd = divisor.degree();
  if (rem.degree() >= dd) quot.coeffs_.assign(rem.degree() - dd + 1, field_.zero());
  Scalar lc_inv = divisor.lc().inverse();
  while (rem.degree() >= dd) {
    std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
    Scalar factor = rem.lc() * lc_inv;
    quot.coeffs_[shift] = factor;
    for (int i = 0; i <= dd; ++i) {
      rem.coeffs_[shift + static_cast<std::size_t>(i)] -=
          factor * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::derivative() const {
  Poly out(field_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.coeffs_.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
  }
  out.trim();
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inverse());
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !coeffs_[i].is_one()) os << coeffs_[i].to_string();
    if (i > 0) {
      if (!coeffs_[i].is_one()) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.lc().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly poly_powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly acc = Poly::constant(base.field().one()) % m;
  Poly b = base % m;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = (acc * b) % m;
    b = (b * b) % m;
    k >>= 1;
  }
  return acc;
}

}  // namespace tqft
