#pragma once

#include "tqft/frobenius.hpp"

namespace tqft {

class NotIndecomposable : public Error {
 public:
  explicit NotIndecomposable(std::size_t idempotents)
      : Error("algebra has " + std::to_string(idempotents) +
              " primitive idempotents, expected 1"),
        idempotents(idempotents) {}
  std::size_t idempotents;
};

/// The complete list of primitive orthogonal idempotents, summing to 1,
/// in lexicographic coordinate order. Computed by splitting the semisimple
/// quotient A/N along factorized minimal polynomials and lifting each
/// idempotent back through the nilradical with e <- 3e^2 - 2e^3.
std::vector<Vec> primitive_idempotents(const FrobeniusAlgebra& f);

struct Summand {
  Vec idempotent;
  FrobeniusAlgebra component;
  Classification classification;
  /// Rows are the component basis vectors in ambient coordinates.
  Matrix embedding;
};

struct DecompositionResult {
  std::vector<Summand> summands;
};

/// Splits f into indecomposable Frobenius summands p_i A with the restricted
/// functional, classified and sorted by (dim, tag, idempotent).
DecompositionResult decompose(const FrobeniusAlgebra& f);

/// dim 1 -> Simple{1/mu(1)}; nonzero nilradical -> Nilpotent with the
/// normalized socle generator and nilpotency index; semisimple of higher
/// dimension -> SimpleFieldExtension. Throws NotIndecomposable.
Classification classify(const FrobeniusAlgebra& f);

}  // namespace tqft
