#include "tqft/frobenius.hpp"

namespace tqft {

FrobeniusAlgebra FrobeniusAlgebra::attach(Algebra algebra, Vec mu) {
  const std::size_t d = algebra.dim();
  if (mu.size() != d) throw DimensionMismatch("mu length != dim");

  Matrix gram(algebra.field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& prod = algebra.product_of_basis(i, j);
      Scalar acc = algebra.field().zero();
      for (std::size_t k = 0; k < d; ++k) {
        if (!prod[k].is_zero()) acc += mu[k] * prod[k];
      }
      gram.at(i, j) = acc;
    }
  }
  auto inv = gram.inverse();
  if (!inv) {
    Matrix ker = gram.kernel();
    throw DegeneratePairing(ker.row(0));
  }
  std::vector<Vec> dual;
  dual.reserve(d);
  for (std::size_t j = 0; j < d; ++j) dual.push_back(inv->col(j));
  Vec handle = vec_zero(algebra.field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    handle = vec_add(handle, algebra.multiply(algebra.basis_vector(i), dual[i]));
  }
  return FrobeniusAlgebra(std::move(algebra), std::move(mu), std::move(gram), std::move(*inv),
                          std::move(dual), std::move(handle));
}

Scalar FrobeniusAlgebra::mu_of(const Vec& x) const {
  if (x.size() != dim()) throw DimensionMismatch("vector length != dim");
  Scalar acc = field().zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i].is_zero()) acc += mu_[i] * x[i];
  }
  return acc;
}

FrobeniusAlgebra build_simple(const Scalar& lambda) {
  if (lambda.is_zero()) throw ZeroLambda();
  Field f = lambda.field();
  AlgebraSpec spec;
  spec.field = f;
  spec.basis_names = {"e"};
  spec.unit = {f.one()};
  spec.mult = {{{f.one()}}};
  return FrobeniusAlgebra::attach(Algebra::build(std::move(spec)), {lambda.inverse()});
}

FrobeniusAlgebra build_nilpotent(const Algebra& algebra, const Vec& mu) {
  if (mu.size() != algebra.dim()) throw DimensionMismatch("mu length != dim");
  Subspace nil = nilradical(algebra);
  if (nil.dim() == 0) throw SemisimpleInput();
  Subspace soc = socle(algebra);
  if (soc.dim() != 1) throw SocleNotOneDim(soc.dim());
  Vec gen = soc.basis_vector(0);
  Scalar value = algebra.field().zero();
  for (std::size_t i = 0; i < gen.size(); ++i) value += mu[i] * gen[i];
  if (value.is_zero()) throw MuVanishesOnSocle();
  return FrobeniusAlgebra::attach(algebra, mu);
}

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& f1, const FrobeniusAlgebra& f2) {
  if (f1.field() != f2.field()) throw FieldMismatch("direct sum over different fields");
  Field f = f1.field();
  const std::size_t d1 = f1.dim(), d2 = f2.dim(), d = d1 + d2;

  AlgebraSpec spec;
  spec.field = f;
  for (const auto& n : f1.algebra().basis_names()) spec.basis_names.push_back(n);
  for (const auto& n : f2.algebra().basis_names()) spec.basis_names.push_back(n);
  spec.unit = vec_zero(f, d);
  for (std::size_t i = 0; i < d1; ++i) spec.unit[i] = f1.algebra().unit()[i];
  for (std::size_t i = 0; i < d2; ++i) spec.unit[d1 + i] = f2.algebra().unit()[i];

  spec.mult.assign(d, std::vector<Vec>(d, vec_zero(f, d)));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      const Vec& prod = f1.algebra().product_of_basis(i, j);
      for (std::size_t k = 0; k < d1; ++k) spec.mult[i][j][k] = prod[k];
    }
  }
  for (std::size_t i = 0; i < d2; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      const Vec& prod = f2.algebra().product_of_basis(i, j);
      for (std::size_t k = 0; k < d2; ++k) spec.mult[d1 + i][d1 + j][d1 + k] = prod[k];
    }
  }

  Vec mu = vec_zero(f, d);
  for (std::size_t i = 0; i < d1; ++i) mu[i] = f1.mu()[i];
  for (std::size_t i = 0; i < d2; ++i) mu[d1 + i] = f2.mu()[i];
  return FrobeniusAlgebra::attach(Algebra::build(std::move(spec)), std::move(mu));
}

Vec augmentation(const FrobeniusAlgebra& f) {
  const Algebra& a = f.algebra();
  const std::size_t d = a.dim();
  Subspace nil = nilradical(a);
  if (nil.dim() + 1 != d) throw NotLocal();

  // solve f(unit) = 1, f(v) = 0 for each nilradical basis vector v
  Matrix system(a.field(), d, d);
  Vec rhs = vec_zero(a.field(), d);
  for (std::size_t j = 0; j < d; ++j) system.at(0, j) = a.unit()[j];
  rhs[0] = a.field().one();
  for (std::size_t r = 0; r < nil.dim(); ++r) {
    Vec v = nil.basis_vector(r);
    for (std::size_t j = 0; j < d; ++j) system.at(r + 1, j) = v[j];
  }
  auto sol = system.solve(rhs);
  if (!sol) throw NotLocal();
  return *sol;
}

namespace {

Scalar leading_minor(const Matrix& m, std::size_t k) {
  // determinant of the leading k x k block by fraction elimination
  Matrix sub(m.field(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
  }
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && sub.at(piv, c).is_zero()) ++piv;
    if (piv == k) return m.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(sub.at(c, j), sub.at(piv, j));
      det = -det;
    }
    det *= sub.at(c, c);
    Scalar inv = sub.at(c, c).inverse();
    for (std::size_t r = c + 1; r < k; ++r) {
      if (sub.at(r, c).is_zero()) continue;
      Scalar factor = sub.at(r, c) * inv;
      for (std::size_t j = c; j < k; ++j) sub.at(r, j) -= factor * sub.at(c, j);
    }
  }
  return det;
}

}  // namespace

bool check_positive_definite(const FrobeniusAlgebra& f) {
  if (!f.field().is_rational()) {
    throw FieldUnsupported("positive definiteness needs an ordered field");
  }
  for (std::size_t k = 1; k <= f.dim(); ++k) {
    if (leading_minor(f.gram(), k).sign() <= 0) return false;
  }
  return true;
}

FrobeniusAlgebra frobenius_change_basis(const FrobeniusAlgebra& f, const Matrix& t) {
  Algebra moved = change_basis(f.algebra(), t);
  // mu'(e_i) = mu(t e_i)
  Vec mu;
  for (std::size_t i = 0; i < f.dim(); ++i) mu.push_back(f.mu_of(t.col(i)));
  return FrobeniusAlgebra::attach(std::move(moved), std::move(mu));
}

std::string Classification::tag() const {
  switch (kind) {
    case Kind::Simple:
      return "simple";
    case Kind::Nilpotent:
      return "nilpotent";
    case Kind::SimpleFieldExtension:
      return "simple_field_extension";
  }
  return "?";
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::Simple:
      return "simple(lambda=" + lambda.to_string() + ")";
    case Kind::Nilpotent:
      return "nilpotent(dim=" + std::to_string(dim) + ", index=" +
             std::to_string(nilpotency_index) + ", socle=" + vec_to_string(socle_generator) + ")";
    case Kind::SimpleFieldExtension:
      return "simple_field_extension(degree=" + std::to_string(degree) + ")";
  }
  return "?";
}

}  // namespace tqft
