#include "tqft/families.hpp"

namespace tqft {
namespace families {

FrobeniusAlgebra dual_numbers(Field f) { return truncated_polynomials(2, f); }

FrobeniusAlgebra truncated_polynomials(std::size_t n, Field f) {
  if (n == 0) throw DimensionMismatch("truncation order must be positive");
  AlgebraSpec spec;
  spec.field = f;
  for (std::size_t i = 0; i < n; ++i) {
    spec.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
  }
  spec.unit = vec_zero(f, n);
  spec.unit[0] = f.one();
  spec.mult.assign(n, std::vector<Vec>(n, vec_zero(f, n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j < n) spec.mult[i][j][i + j] = f.one();
    }
  }
  Vec mu = vec_zero(f, n);
  mu[n - 1] = f.one();
  return FrobeniusAlgebra::attach(Algebra::build(std::move(spec)), std::move(mu));
}

FrobeniusAlgebra square_zero_pair(Field f) {
  // basis order: 1, x, y, xy
  AlgebraSpec spec;
  spec.field = f;
  spec.basis_names = {"1", "x", "y", "xy"};
  spec.unit = {f.one(), f.zero(), f.zero(), f.zero()};
  spec.mult.assign(4, std::vector<Vec>(4, vec_zero(f, 4)));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    spec.mult[i][j][k] = f.one();
    spec.mult[j][i][k] = f.one();
  };
  set(0, 0, 0);
  set(0, 1, 1);
  set(0, 2, 2);
  set(0, 3, 3);
  set(1, 2, 3);  // x*y = xy; x^2 = y^2 = x*xy = y*xy = xy*xy = 0
  Vec mu = {f.zero(), f.zero(), f.zero(), f.one()};
  return FrobeniusAlgebra::attach(Algebra::build(std::move(spec)), std::move(mu));
}

FrobeniusAlgebra mixed_sum13() {
  Field f = Field::rationals();
  AlgebraSpec spec;
  spec.field = f;
  spec.basis_names = {"a", "b"};
  spec.unit = {f.one(), f.zero()};
  Vec a = {f.one(), f.zero()};
  Vec b = {f.zero(), f.one()};
  spec.mult = {{a, b}, {b, a}};
  Vec mu = {f.parse("4/3"), f.parse("2/3")};
  return FrobeniusAlgebra::attach(Algebra::build(std::move(spec)), std::move(mu));
}

}  // namespace families
}  // namespace tqft
