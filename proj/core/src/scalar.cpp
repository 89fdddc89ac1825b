#include "tqft/scalar.hpp"

#include <charconv>
#include <ostream>

namespace tqft {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 acc = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) acc = mulmod(acc, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return acc;
}

u64 invmod(u64 a, u64 p) {
  // extended Euclid on (a, p); p prime, a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every n < 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= (u64(1) << 62)) throw FieldUnsupported("prime modulus too large: " + std::to_string(p));
  if (!is_prime_u64(p)) throw FieldUnsupported("modulus is not prime: " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return Scalar(p_, mpq_class(0), 0); }

Scalar Field::one() const { return Scalar(p_, mpq_class(1), p_ == 0 ? 0 : 1 % p_); }

Scalar Field::from_int(long long n) const {
  if (p_ == 0) return Scalar(0, mpq_class(static_cast<long>(n)), 0);
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return Scalar(p_, mpq_class(0), static_cast<u64>(m));
}

Scalar Field::parse(std::string_view text) const {
  auto parse_int = [](std::string_view s, mpz_class& out) -> bool {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    out = mpz_class(std::string(s), 10);
    return true;
  };

  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  mpz_class n, d(1);
  if (!parse_int(num, n) || (!den.empty() && !parse_int(den, d)) ||
      (den.empty() && text.find('/') != std::string_view::npos)) {
    throw ScalarParseError("bad scalar literal: \"" + std::string(text) + "\"");
  }
  if (d == 0) throw ScalarParseError("zero denominator in \"" + std::string(text) + "\"");

  if (p_ == 0) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(0, std::move(q), 0);
  }
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class nr = n % pz, dr = d % pz;
  if (nr < 0) nr += pz;
  if (dr < 0) dr += pz;
  u64 nv = mpz_get_ui(nr.get_mpz_t());
  u64 dv = mpz_get_ui(dr.get_mpz_t());
  if (dv == 0) throw ScalarParseError("denominator divisible by p in \"" + std::string(text) + "\"");
  return Scalar(p_, mpq_class(0), mulmod(nv, invmod(dv, p_), p_));
}

std::string Field::to_string() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

std::optional<Field> Field::from_string(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    u64 p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
    if (p >= (u64(1) << 62) || !is_prime_u64(p)) return std::nullopt;
    return Field(p);
  }
  return std::nullopt;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(0, mpq_class(-q_), 0);
  return Scalar(p_, mpq_class(0), r_ == 0 ? 0 : p_ - r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (p_ == 0) return Scalar(0, mpq_class(1) / q_, 0);
  return Scalar(p_, mpq_class(0), invmod(r_, p_));
}

void Scalar::require_same_field(const Scalar& other) const {
  if (p_ != other.p_) {
    throw FieldMismatch("mixed-field arithmetic: " + field().to_string() + " vs " +
                        other.field().to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ == 0) {
    q_ += rhs.q_;
  } else {
    r_ += rhs.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ == 0) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ >= rhs.r_) ? r_ - rhs.r_ : r_ + p_ - rhs.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ == 0) {
    q_ *= rhs.q_;
  } else {
    r_ = mulmod(r_, rhs.r_, p_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  if (p_ == 0) {
    q_ /= rhs.q_;
  } else {
    r_ = mulmod(r_, invmod(rhs.r_, p_), p_);
  }
  return *this;
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same_field(rhs);
  return p_ == 0 ? q_ == rhs.q_ : r_ == rhs.r_;
}

bool Scalar::operator<(const Scalar& rhs) const {
  require_same_field(rhs);
  return p_ == 0 ? q_ < rhs.q_ : r_ < rhs.r_;
}

int Scalar::sign() const {
  if (p_ != 0) throw FieldUnsupported("sign is undefined over F_p");
  return sgn(q_);
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Scalar acc = field().one();
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw FieldUnsupported("rational() on an F_p element");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw FieldUnsupported("residue() on a rational");
  return r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace tqft
