#pragma once

#include "tqft/algebra.hpp"

namespace tqft {

class DegeneratePairing : public Error {
 public:
  explicit DegeneratePairing(Vec witness)
      : Error("the pairing (a,b) = mu(ab) is degenerate; kernel contains " +
              vec_to_string(witness)),
        witness(std::move(witness)) {}
  Vec witness;
};

class ZeroLambda : public Error {
 public:
  ZeroLambda() : Error("lambda must be nonzero") {}
};

class SocleNotOneDim : public Error {
 public:
  explicit SocleNotOneDim(std::size_t got)
      : Error("socle dimension is " + std::to_string(got) + ", expected 1"), got(got) {}
  std::size_t got;
};

class MuVanishesOnSocle : public Error {
 public:
  MuVanishesOnSocle() : Error("mu vanishes on the socle") {}
};

class SemisimpleInput : public Error {
 public:
  SemisimpleInput() : Error("algebra has no nilpotents") {}
};

class NotLocal : public Error {
 public:
  NotLocal() : Error("algebra is not spanned by the identity and nilpotents") {}
};

/// A commutative algebra with a functional mu whose pairing mu(ab) is
/// nondegenerate. Caches the Gram matrix G_ij = mu(a_i a_j), its inverse,
/// the dual basis b_j = sum_k (G^-1)_kj a_k and the handle element
/// H = sum_i a_i b_i.
class FrobeniusAlgebra {
 public:
  /// Throws DegeneratePairing with a kernel witness when the Gram matrix is
  /// singular.
  static FrobeniusAlgebra attach(Algebra algebra, Vec mu);

  const Algebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  Field field() const { return algebra_.field(); }
  const Vec& mu() const { return mu_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  const Vec& dual_basis_vector(std::size_t j) const { return dual_basis_[j]; }
  const std::vector<Vec>& dual_basis() const { return dual_basis_; }
  const Vec& handle() const { return handle_; }

  Scalar mu_of(const Vec& x) const;

 private:
  FrobeniusAlgebra(Algebra algebra, Vec mu, Matrix gram, Matrix gram_inv,
                   std::vector<Vec> dual_basis, Vec handle)
      : algebra_(std::move(algebra)),
        mu_(std::move(mu)),
        gram_(std::move(gram)),
        gram_inv_(std::move(gram_inv)),
        dual_basis_(std::move(dual_basis)),
        handle_(std::move(handle)) {}

  Algebra algebra_;
  Vec mu_;
  Matrix gram_;
  Matrix gram_inv_;
  std::vector<Vec> dual_basis_;
  Vec handle_;
};

/// The one-dimensional Frobenius algebra with mu(x) = x/lambda; its handle
/// element is lambda itself. Throws ZeroLambda.
FrobeniusAlgebra build_simple(const Scalar& lambda);

/// A local algebra (identity plus nilpotents, one-dimensional socle) with
/// any functional that does not vanish on the socle. Throws SemisimpleInput,
/// SocleNotOneDim or MuVanishesOnSocle.
FrobeniusAlgebra build_nilpotent(const Algebra& algebra, const Vec& mu);

/// Block-diagonal sum; mu and units concatenate. Throws FieldMismatch.
FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& f1, const FrobeniusAlgebra& f2);

/// The unique algebra homomorphism to the field on a local algebra: 1 on
/// the identity, 0 on the nilradical. Throws NotLocal.
Vec augmentation(const FrobeniusAlgebra& f);

/// True iff the Gram form is positive definite (all leading principal
/// minors positive). Only meaningful over Q; throws FieldUnsupported.
bool check_positive_definite(const FrobeniusAlgebra& f);

/// Transport along the basis given by the columns of t.
FrobeniusAlgebra frobenius_change_basis(const FrobeniusAlgebra& f, const Matrix& t);

/// Outcome of classify(): one of the three indecomposable shapes.
struct Classification {
  enum class Kind { Simple, Nilpotent, SimpleFieldExtension };
  Kind kind;
  // Simple
  Scalar lambda;
  // Nilpotent
  std::size_t dim = 0;
  Vec socle_generator;
  std::size_t nilpotency_index = 0;
  // SimpleFieldExtension
  std::size_t degree = 0;

  std::string tag() const;
  std::string to_string() const;
};

}  // namespace tqft
