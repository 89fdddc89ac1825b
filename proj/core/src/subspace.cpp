#include "tqft/subspace.hpp"

#include "tqft/errors.hpp"

namespace tqft {

Subspace Subspace::from_vectors(Field f, std::size_t ambient_dim,
                                const std::vector<Vec>& spanning) {
  Matrix m = Matrix::from_rows(f, spanning, ambient_dim);
  std::vector<std::size_t> pivots;
  Matrix red = m.rref(&pivots);
  Matrix basis(f, pivots.size(), ambient_dim);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < ambient_dim; ++c) basis.at(r, c) = red.at(r, c);
  }
  return Subspace(std::move(basis), ambient_dim, std::move(pivots));
}

Subspace Subspace::from_kernel_of(const Matrix& m) {
  Matrix k = m.kernel();
  std::vector<Vec> rows;
  rows.reserve(k.rows());
  for (std::size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
  return from_vectors(m.field(), m.cols(), rows);
}

Subspace Subspace::zero(Field f, std::size_t ambient_dim) {
  return from_vectors(f, ambient_dim, {});
}

Subspace Subspace::full(Field f, std::size_t ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v = vec_zero(f, ambient_dim);
    v[i] = f.one();
    rows.push_back(std::move(v));
  }
  return from_vectors(f, ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
  Vec residual = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar& c = residual[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= factor * basis_.at(r, j);
  }
  return vec_is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_vector(r))) return false;
  }
  return true;
}

Vec Subspace::coordinates_of(const Vec& v) const {
  if (!contains(v)) throw DimensionMismatch("vector is not in the subspace");
  // with an RREF basis the coordinates are just the pivot entries
  Vec coords;
  coords.reserve(basis_.rows());
  for (std::size_t r = 0; r < basis_.rows(); ++r) coords.push_back(v[pivots_[r]]);
  return coords;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("ambient dims differ");
  Matrix q1 = complement_projector();
  Matrix q2 = other.complement_projector();
  Matrix stacked(basis_.field(), 2 * ambient_, ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) {
      stacked.at(i, j) = q1.at(i, j);
      stacked.at(ambient_ + i, j) = q2.at(i, j);
    }
  }
  return from_kernel_of(stacked);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("ambient dims differ");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_vector(r));
  for (std::size_t r = 0; r < other.dim(); ++r) rows.push_back(other.basis_vector(r));
  return from_vectors(basis_.field(), ambient_, rows);
}

Matrix Subspace::complement_projector() const {
  Field f = basis_.field();
  // Q(e_u) = e_u - basis_row(t) when u is the t-th pivot, else e_u.
  Matrix q = Matrix::identity(f, ambient_);
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    std::size_t u = pivots_[t];
    for (std::size_t i = 0; i < ambient_; ++i) q.at(i, u) -= basis_.at(t, i);
  }
  return q;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

}  // namespace tqft
