#pragma once

#include "tqft/frobenius.hpp"

namespace tqft {
namespace families {

/// F[e]/(e^2) with basis (e, n) and mu = (0, 1).
FrobeniusAlgebra dual_numbers(Field f = Field::rationals());

/// F[x]/(x^n), basis (1, x, ..., x^(n-1)), mu = coefficient of x^(n-1).
FrobeniusAlgebra truncated_polynomials(std::size_t n, Field f = Field::rationals());

/// F[x,y]/(x^2, y^2), basis (1, x, y, xy), mu = coefficient of xy.
FrobeniusAlgebra square_zero_pair(Field f = Field::rationals());

/// S_1 (+) S_3 written in the mixed basis a = (1,1), b = (1,-1), so the
/// block structure is hidden: a*a = a, a*b = b, b*b = a, mu = (4/3, 2/3).
FrobeniusAlgebra mixed_sum13();

}  // namespace families
}  // namespace tqft
