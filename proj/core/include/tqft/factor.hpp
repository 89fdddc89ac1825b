#pragma once

#include <utility>
#include <vector>

#include "tqft/poly.hpp"

namespace tqft {

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted deterministically. Works over Q (Zassenhaus: modular factorization,
/// Hensel lifting, subset recombination) and over F_p (distinct-degree plus
/// Cantor-Zassenhaus splitting). The input must be nonconstant.
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f);

bool is_irreducible(const Poly& f);

}  // namespace tqft
