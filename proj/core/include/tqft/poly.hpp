#pragma once

#include <utility>

#include "tqft/matrix.hpp"

namespace tqft {

/// Dense univariate polynomial over one field. The zero polynomial has
/// degree -1; coefficients above the degree are never stored.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  static Poly from_coeffs(Field f, Vec coeffs);
  static Poly constant(const Scalar& c);
  static Poly x(Field f);

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(std::size_t i) const;
  const Scalar& lc() const;
  const Vec& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }
  Poly operator/(const Poly& divisor) const { return divmod(divisor).first; }

  Poly derivative() const;
  Poly monic() const;
  Scalar eval(const Scalar& x) const;

  std::string to_string() const;  // e.g. "x^2 - 1/2"

 private:
  void trim();
  Field field_;
  Vec coeffs_;  // coeffs_[i] multiplies x^i
};

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
/// g = gcd(a,b) monic with s*a + t*b = g.
struct XgcdResult {
  Poly g, s, t;
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

/// base^e mod m with an arbitrary-precision exponent.
Poly poly_powmod(const Poly& base, const mpz_class& e, const Poly& m);

}  // namespace tqft
