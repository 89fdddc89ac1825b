#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tqft/errors.hpp"

namespace tqft {

class Scalar;

/// Descriptor of the base field: the rationals, or F_p for an odd-sized
/// prime p. Residue arithmetic keeps p below 2^62 so products fit in the
/// 128-bit intermediate.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  /// Accepts an integer or "a/b". Throws ScalarParseError.
  Scalar parse(std::string_view text) const;

  /// "Q" or "Fp:<p>", matching the algebra file format.
  std::string to_string() const;
  static std::optional<Field> from_string(std::string_view text);

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact field element. Arithmetic between elements of different fields
/// throws FieldMismatch; division by zero throws DivisionByZero.
class Scalar {
 public:
  /// Rational zero.
  Scalar() : p_(0), q_(0), r_(0) {}

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  bool is_rational() const { return p_ == 0; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
  /// Total order within one field (value order over Q, residue order over
  /// F_p); used for deterministic sorting.
  bool operator<(const Scalar& rhs) const;

  /// Sign of a rational (-1, 0, +1). Throws FieldUnsupported over F_p.
  int sign() const;

  /// Canonical form: "n" or "n/d" over Q, the residue over F_p.
  std::string to_string() const;

  /// Exponent may be negative for invertible values.
  Scalar pow(long long e) const;

  /// The underlying rational; only valid over Q.
  const mpq_class& rational() const;
  /// The underlying residue; only valid over F_p.
  std::uint64_t residue() const;

 private:
  friend class Field;
  Scalar(std::uint64_t p, mpq_class q, std::uint64_t r)
      : p_(p), q_(std::move(q)), r_(r) {}

  void require_same_field(const Scalar& other) const;

  std::uint64_t p_;  // 0 = rational
  mpq_class q_;      // value when p_ == 0
  std::uint64_t r_;  // residue when p_ != 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace tqft
