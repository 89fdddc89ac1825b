#pragma once

#include <string>
#include <vector>

#include "tqft/subspace.hpp"

namespace tqft {

class NonCommutative : public Error {
 public:
  NonCommutative(std::size_t i, std::size_t j)
      : Error("not commutative: a" + std::to_string(i) + "*a" + std::to_string(j) +
              " != a" + std::to_string(j) + "*a" + std::to_string(i)),
        i(i),
        j(j) {}
  std::size_t i, j;
};

class NonAssociative : public Error {
 public:
  NonAssociative(std::size_t i, std::size_t j, std::size_t k)
      : Error("not associative at basis triple (" + std::to_string(i) + ", " + std::to_string(j) +
              ", " + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  std::size_t i, j, k;
};

class BadUnit : public Error {
 public:
  explicit BadUnit(std::size_t i)
      : Error("unit law fails on basis vector a" + std::to_string(i)), i(i) {}
  std::size_t i;
};

class NotNilpotentType : public Error {
 public:
  using Error::Error;
};

/// Structure-constant description of a finite-dimensional commutative unital
/// algebra, prior to validation. mult[i][j] holds the coordinates of a_i*a_j.
struct AlgebraSpec {
  Field field = Field::rationals();
  std::vector<std::string> basis_names;
  std::vector<std::vector<Vec>> mult;
  Vec unit;
};

/// A validated commutative associative unital algebra over Q or F_p
/// (p prime, p > dim). Immutable; all operations are pure.
class Algebra {
 public:
  /// Checks dimensions, commutativity, the unit law and associativity over
  /// all basis triples. Throws DimensionMismatch, FieldUnsupported,
  /// NonCommutative, BadUnit or NonAssociative.
  static Algebra build(AlgebraSpec spec);

  std::size_t dim() const { return spec_.unit.size(); }
  Field field() const { return spec_.field; }
  const std::vector<std::string>& basis_names() const { return spec_.basis_names; }
  const Vec& unit() const { return spec_.unit; }
  const Vec& product_of_basis(std::size_t i, std::size_t j) const { return spec_.mult[i][j]; }
  const AlgebraSpec& spec() const { return spec_; }

  Vec basis_vector(std::size_t i) const;
  /// Bilinear extension of the structure constants.
  Vec multiply(const Vec& x, const Vec& y) const;
  /// The regular representation L_x with L_x(y) = x*y.
  Matrix mult_operator(const Vec& x) const;
  /// x^e, e >= 0 (x^0 = unit).
  Vec power(const Vec& x, std::size_t e) const;

 private:
  explicit Algebra(AlgebraSpec spec) : spec_(std::move(spec)) {}
  AlgebraSpec spec_;
};

/// x is nilpotent iff L_x^dim = 0 (dim bounds the nilpotency index).
bool is_nilpotent_element(const Algebra& a, const Vec& x);

/// The ideal of nilpotent elements, computed as the radical of the trace
/// form (x,y) -> trace(L_xy); valid over Q and over F_p with p > dim.
Subspace nilradical(const Algebra& a);

/// Elements killed by every nilpotent; the whole space when the nilradical
/// vanishes.
Subspace socle(const Algebra& a);

/// Smallest k >= 1 with N^k = 0 for N the nilradical (1 when N = 0).
std::size_t nilpotency_index(const Algebra& a);

/// The socle series N_1 = socle(A) c N_2 c ... c N_n = A, where N_k is the
/// preimage of the socle of A/N_{k-1}, together with a basis of A listing
/// N_1 first and extending through each N_k in order.
struct IdealChain {
  std::vector<Subspace> chain;
  std::vector<Vec> adapted_basis;
};
/// Requires a nonzero nilradical and a one-dimensional socle; throws
/// NotNilpotentType otherwise.
IdealChain ideal_chain(const Algebra& a);

/// Same algebra in the basis given by the columns of t (expressed in the old
/// basis); t must be invertible.
Algebra change_basis(const Algebra& a, const Matrix& t);

}  // namespace tqft
