#include "tqft/algebra.hpp"

namespace tqft {

Algebra Algebra::build(AlgebraSpec spec) {
  const std::size_t dim = spec.unit.size();
  if (dim == 0) throw DimensionMismatch("algebra dimension must be at least 1");
  if (spec.basis_names.empty()) {
    for (std::size_t i = 0; i < dim; ++i) spec.basis_names.push_back("a" + std::to_string(i));
  }
  if (spec.basis_names.size() != dim) throw DimensionMismatch("basis name count != dim");
  if (spec.mult.size() != dim) throw DimensionMismatch("mult table has wrong row count");
  for (const auto& row : spec.mult) {
    if (row.size() != dim) throw DimensionMismatch("mult table has wrong column count");
    for (const auto& v : row) {
      if (v.size() != dim) throw DimensionMismatch("mult table entry has wrong length");
    }
  }
  if (!spec.field.is_rational() && spec.field.modulus() <= dim) {
    throw FieldUnsupported("prime field needs p > dim, got p = " +
                           std::to_string(spec.field.modulus()) + ", dim = " + std::to_string(dim));
  }

  Algebra a(std::move(spec));

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (a.spec_.mult[i][j] != a.spec_.mult[j][i]) throw NonCommutative(i, j);
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (a.multiply(a.spec_.unit, a.basis_vector(i)) != a.basis_vector(i)) throw BadUnit(i);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        Vec left = a.multiply(a.spec_.mult[i][j], a.basis_vector(k));
        Vec right = a.multiply(a.basis_vector(i), a.spec_.mult[j][k]);
        if (left != right) throw NonAssociative(i, j, k);
      }
    }
  }
  return a;
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v = vec_zero(field(), dim());
  v[i] = field().one();
  return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("vector length != dim");
  Vec out = vec_zero(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& sc = spec_.mult[i][j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!sc[k].is_zero()) out[k] += c * sc[k];
      }
    }
  }
  return out;
}

Matrix Algebra::mult_operator(const Vec& x) const {
  if (x.size() != dim()) throw DimensionMismatch("vector length != dim");
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = multiply(x, basis_vector(j));
    for (std::size_t r = 0; r < dim(); ++r) m.at(r, j) = col[r];
  }
  return m;
}

Vec Algebra::power(const Vec& x, std::size_t e) const {
  Vec acc = spec_.unit;
  for (std::size_t i = 0; i < e; ++i) acc = multiply(acc, x);
  return acc;
}

bool is_nilpotent_element(const Algebra& a, const Vec& x) {
  return a.mult_operator(x).pow(a.dim()).is_zero();
}

Subspace nilradical(const Algebra& a) {
  if (!a.field().is_rational() && a.field().modulus() <= a.dim()) {
    throw FieldUnsupported("nilradical via the trace form needs char 0 or p > dim");
  }
  const std::size_t d = a.dim();
  // trace form T_ij = trace(L_{a_i a_j}); its radical is the nilradical
  Vec basis_traces;
  basis_traces.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    basis_traces.push_back(a.mult_operator(a.basis_vector(k)).trace());
  }
  Matrix t(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& prod = a.product_of_basis(i, j);
      Scalar acc = a.field().zero();
      for (std::size_t k = 0; k < d; ++k) {
        if (!prod[k].is_zero()) acc += prod[k] * basis_traces[k];
      }
      t.at(i, j) = acc;
    }
  }
  Subspace rad = Subspace::from_kernel_of(t);
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    if (!is_nilpotent_element(a, rad.basis_vector(r))) {
      throw Error("internal: trace-form radical contains a non-nilpotent element");
    }
  }
  return rad;
}

Subspace socle(const Algebra& a) {
  Subspace nil = nilradical(a);
  const std::size_t d = a.dim();
  if (nil.dim() == 0) return Subspace::full(a.field(), d);
  Matrix stacked(a.field(), nil.dim() * d, d);
  for (std::size_t r = 0; r < nil.dim(); ++r) {
    Matrix l = a.mult_operator(nil.basis_vector(r));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) stacked.at(r * d + i, j) = l.at(i, j);
    }
  }
  return Subspace::from_kernel_of(stacked);
}

std::size_t nilpotency_index(const Algebra& a) {
  Subspace nil = nilradical(a);
  if (nil.dim() == 0) return 1;
  std::size_t k = 1;
  Subspace current = nil;
  while (current.dim() > 0) {
    std::vector<Vec> products;
    for (std::size_t i = 0; i < current.dim(); ++i) {
      for (std::size_t j = 0; j < nil.dim(); ++j) {
        products.push_back(a.multiply(current.basis_vector(i), nil.basis_vector(j)));
      }
    }
    current = Subspace::from_vectors(a.field(), a.dim(), products);
    ++k;
  }
  return k;
}

IdealChain ideal_chain(const Algebra& a) {
  Subspace nil = nilradical(a);
  if (nil.dim() == 0) throw NotNilpotentType("semisimple algebra has no socle series");
  Subspace soc = socle(a);
  if (soc.dim() != 1) {
    throw NotNilpotentType("socle dimension is " + std::to_string(soc.dim()) + ", expected 1");
  }

  const std::size_t d = a.dim();
  std::vector<Matrix> nil_ops;
  for (std::size_t r = 0; r < nil.dim(); ++r) {
    nil_ops.push_back(a.mult_operator(nil.basis_vector(r)));
  }

  IdealChain out;
  out.chain.push_back(soc);
  while (out.chain.back().dim() < d) {
    // N_k = { x : v*x in N_{k-1} for every nilradical basis vector v }
    Matrix q = out.chain.back().complement_projector();
    Matrix stacked(a.field(), nil_ops.size() * d, d);
    for (std::size_t r = 0; r < nil_ops.size(); ++r) {
      Matrix ql = q * nil_ops[r];
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) stacked.at(r * d + i, j) = ql.at(i, j);
      }
    }
    Subspace next = Subspace::from_kernel_of(stacked);
    if (next.dim() <= out.chain.back().dim()) {
      throw Error("internal: socle series stalled");
    }
    out.chain.push_back(next);
  }

  Subspace covered = Subspace::zero(a.field(), d);
  for (const auto& step : out.chain) {
    for (std::size_t r = 0; r < step.dim(); ++r) {
      Vec v = step.basis_vector(r);
      if (!covered.contains(v)) {
        out.adapted_basis.push_back(v);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < covered.dim(); ++i) rows.push_back(covered.basis_vector(i));
        rows.push_back(v);
        covered = Subspace::from_vectors(a.field(), d, rows);
      }
    }
  }
  return out;
}

Algebra change_basis(const Algebra& a, const Matrix& t) {
  const std::size_t d = a.dim();
  if (t.rows() != d || t.cols() != d) throw DimensionMismatch("basis-change matrix shape");
  auto tinv = t.inverse();
  if (!tinv) throw Error("basis-change matrix is singular");

  AlgebraSpec spec;
  spec.field = a.field();
  for (std::size_t i = 0; i < d; ++i) spec.basis_names.push_back("c" + std::to_string(i));
  spec.unit = tinv->apply(a.unit());
  spec.mult.assign(d, std::vector<Vec>(d, vec_zero(a.field(), d)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      spec.mult[i][j] = tinv->apply(a.multiply(t.col(i), t.col(j)));
    }
  }
  return Algebra::build(std::move(spec));
}

}  // namespace tqft
