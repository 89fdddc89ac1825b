#pragma once

#include "tqft/matrix.hpp"

namespace tqft {

/// A linear subspace in canonical form: the basis rows are the nonzero rows
/// of a reduced row echelon matrix, so equal subspaces compare equal.
class Subspace {
 public:
  static Subspace from_vectors(Field f, std::size_t ambient_dim, const std::vector<Vec>& spanning);
  static Subspace from_kernel_of(const Matrix& m);
  static Subspace zero(Field f, std::size_t ambient_dim);
  static Subspace full(Field f, std::size_t ambient_dim);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  Field field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector in the canonical basis; throws if v is
  /// not in the subspace.
  Vec coordinates_of(const Vec& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  /// Linear map Q with ker Q = this subspace, as an ambient x ambient
  /// matrix; used for membership constraints and preimages.
  Matrix complement_projector() const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  Subspace(Matrix basis, std::size_t ambient, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), ambient_(ambient), pivots_(std::move(pivots)) {}

  Matrix basis_;  // dim x ambient, RREF with no zero rows
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tqft
