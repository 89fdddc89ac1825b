#include "tqft/decompose.hpp"

#include <algorithm>
#include <cassert>

#include "tqft/factor.hpp"

namespace tqft {

namespace {

// A/N with a section back into A: quotient coordinates are the non-pivot
// coordinates of the nilradical's echelon basis.
struct Quotient {
  Algebra algebra;                    // the quotient as an algebra
  std::vector<std::size_t> section;   // quotient index -> ambient coordinate
  Matrix projector;                   // ambient projector Q with ker Q = N
};

Quotient make_quotient(const Algebra& a, const Subspace& nil) {
  const std::size_t d = a.dim();
  Field f = a.field();
  Matrix q = nil.complement_projector();

  std::vector<bool> is_pivot(d, false);
  for (std::size_t r = 0; r < nil.dim(); ++r) {
    // pivots are the leading-one columns of the echelon basis
    for (std::size_t c = 0; c < d; ++c) {
      if (!nil.basis().at(r, c).is_zero()) {
        is_pivot[c] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> section;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) section.push_back(c);
  }
  const std::size_t qd = section.size();
  assert(qd == d - nil.dim());

  auto project = [&](const Vec& x) {
    Vec qx = q.apply(x);
    Vec out;
    out.reserve(qd);
    for (auto c : section) out.push_back(qx[c]);
    return out;
  };
  auto lift = [&](std::size_t i) {
    Vec v = vec_zero(f, d);
    v[section[i]] = f.one();
    return v;
  };

  AlgebraSpec spec;
  spec.field = f;
  spec.unit = project(a.unit());
  spec.mult.assign(qd, std::vector<Vec>(qd, vec_zero(f, qd)));
  for (std::size_t i = 0; i < qd; ++i) {
    for (std::size_t j = 0; j < qd; ++j) {
      spec.mult[i][j] = project(a.multiply(lift(i), lift(j)));
    }
  }
  return Quotient{Algebra::build(std::move(spec)), std::move(section), std::move(q)};
}

struct Block {
  Vec idem;                // block identity, quotient coordinates
  std::vector<Vec> basis;  // basis of idem * B
};

// minimal polynomial of x inside the unital subalgebra with identity e
Poly min_poly_on_block(const Algebra& b, const Vec& x, const Vec& e) {
  Field f = b.field();
  std::vector<Vec> krylov{e};
  for (;;) {
    Matrix stacked = Matrix::from_rows(f, krylov, b.dim());
    Vec next = b.multiply(x, krylov.back());
    if (auto coeffs = stacked.transpose().solve(next)) {
      Vec poly_coeffs;
      for (const auto& c : *coeffs) poly_coeffs.push_back(-c);
      poly_coeffs.push_back(f.one());
      return Poly::from_coeffs(f, std::move(poly_coeffs));
    }
    krylov.push_back(std::move(next));
  }
}

Vec eval_poly_at(const Algebra& b, const Poly& g, const Vec& x, const Vec& e) {
  Vec acc = vec_zero(b.field(), b.dim());
  Vec power = e;  // x^0 relative to the block identity
  for (int k = 0; k <= g.degree(); ++k) {
    Scalar c = g.coeff(static_cast<std::size_t>(k));
    if (!c.is_zero()) acc = vec_add(acc, vec_scale(c, power));
    power = b.multiply(x, power);
  }
  return acc;
}

// split every block of the semisimple algebra b until each one is a field
std::vector<Block> split_blocks(const Algebra& b) {
  std::vector<Block> blocks;
  {
    Block whole;
    whole.idem = b.unit();
    for (std::size_t i = 0; i < b.dim(); ++i) whole.basis.push_back(b.basis_vector(i));
    blocks.push_back(std::move(whole));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t bi = 0; bi < blocks.size() && !changed; ++bi) {
      if (blocks[bi].basis.size() < 2) continue;
      for (std::size_t ai = 0; ai < b.dim() && !changed; ++ai) {
        Vec x = b.multiply(blocks[bi].idem, b.basis_vector(ai));
        Poly m = min_poly_on_block(b, x, blocks[bi].idem);
        if (m.degree() < 2) continue;
        auto factors = factor_poly(m);
        if (factors.size() < 2) continue;

        std::vector<Block> sub;
        for (const auto& [fac, mult] : factors) {
          assert(mult == 1 && "semisimple minimal polynomials are squarefree");
          Poly h = m / fac;
          auto bez = poly_xgcd(h, fac);
          assert(bez.g.degree() == 0);
          Poly g = (bez.s * h) % m;  // 1 mod fac, 0 mod the other factors
          Block nb;
          nb.idem = eval_poly_at(b, g, x, blocks[bi].idem);
          std::vector<Vec> span;
          for (const auto& v : blocks[bi].basis) span.push_back(b.multiply(nb.idem, v));
          Subspace s = Subspace::from_vectors(b.field(), b.dim(), span);
          for (std::size_t r = 0; r < s.dim(); ++r) nb.basis.push_back(s.basis_vector(r));
          sub.push_back(std::move(nb));
        }
        std::size_t total = 0;
        for (const auto& nb : sub) total += nb.basis.size();
        if (total != blocks[bi].basis.size()) {
          throw Error("internal: block splitting lost dimensions");
        }
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(bi));
        blocks.insert(blocks.end(), std::make_move_iterator(sub.begin()),
                      std::make_move_iterator(sub.end()));
        changed = true;
      }
    }
  }
  return blocks;
}

std::vector<Vec> primitive_idempotents_of(const Algebra& a) {
  Subspace nil = nilradical(a);
  Field f = a.field();
  const std::size_t d = a.dim();

  std::vector<Vec> idems;
  if (nil.dim() == 0) {
    for (auto& blk : split_blocks(a)) idems.push_back(std::move(blk.idem));
  } else {
    Quotient quo = make_quotient(a, nil);
    for (auto& blk : split_blocks(quo.algebra)) {
      // section of the quotient idempotent, then Newton-style lifting:
      // e <- 3e^2 - 2e^3 squares the nilpotent defect each round
      Vec e = vec_zero(f, d);
      for (std::size_t i = 0; i < blk.idem.size(); ++i) e[quo.section[i]] = blk.idem[i];
      Scalar three = f.from_int(3), two = f.from_int(2);
      bool fixed = false;
      for (int iter = 0; iter < 64; ++iter) {
        Vec e2 = a.multiply(e, e);
        if (e2 == e) {
          fixed = true;
          break;
        }
        e = vec_sub(vec_scale(three, e2), vec_scale(two, a.multiply(e2, e)));
      }
      if (!fixed) throw Error("internal: idempotent lifting did not converge");
      idems.push_back(std::move(e));
    }
  }

  // completeness and orthogonality are forced; verify anyway
  Vec sum = vec_zero(f, d);
  for (const auto& e : idems) sum = vec_add(sum, e);
  if (sum != a.unit()) throw Error("internal: idempotents do not sum to 1");
  for (std::size_t i = 0; i < idems.size(); ++i) {
    for (std::size_t j = i + 1; j < idems.size(); ++j) {
      if (!vec_is_zero(a.multiply(idems[i], idems[j]))) {
        throw Error("internal: idempotents are not orthogonal");
      }
    }
  }
  std::sort(idems.begin(), idems.end(), vec_less);
  return idems;
}

int tag_rank(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Simple:
      return 0;
    case Classification::Kind::Nilpotent:
      return 1;
    case Classification::Kind::SimpleFieldExtension:
      return 2;
  }
  return 3;
}

}  // namespace

std::vector<Vec> primitive_idempotents(const FrobeniusAlgebra& f) {
  return primitive_idempotents_of(f.algebra());
}

Classification classify(const FrobeniusAlgebra& f) {
  auto idems = primitive_idempotents(f);
  if (idems.size() != 1) throw NotIndecomposable(idems.size());

  Classification c;
  const Algebra& a = f.algebra();
  if (a.dim() == 1) {
    c.kind = Classification::Kind::Simple;
    c.lambda = f.mu_of(a.unit()).inverse();
    c.dim = 1;
    return c;
  }
  Subspace nil = nilradical(a);
  if (nil.dim() > 0) {
    Subspace soc = socle(a);
    if (soc.dim() != 1) {
      throw Error("internal: indecomposable Frobenius algebra with socle dim != 1");
    }
    Vec gen = soc.basis_vector(0);
    Scalar v = f.mu_of(gen);
    c.kind = Classification::Kind::Nilpotent;
    c.dim = a.dim();
    c.socle_generator = vec_scale(v.inverse(), gen);
    c.nilpotency_index = nilpotency_index(a);
    return c;
  }
  c.kind = Classification::Kind::SimpleFieldExtension;
  c.dim = a.dim();
  c.degree = a.dim();
  return c;
}

DecompositionResult decompose(const FrobeniusAlgebra& f) {
  const Algebra& a = f.algebra();
  Field k = f.field();
  const std::size_t d = a.dim();

  DecompositionResult out;
  for (const auto& p : primitive_idempotents(f)) {
    Matrix lp = a.mult_operator(p);
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < d; ++c) cols.push_back(lp.col(c));
    Subspace range = Subspace::from_vectors(k, d, cols);
    const std::size_t cd = range.dim();

    AlgebraSpec spec;
    spec.field = k;
    spec.unit = range.coordinates_of(p);
    spec.mult.assign(cd, std::vector<Vec>(cd, vec_zero(k, cd)));
    for (std::size_t i = 0; i < cd; ++i) {
      for (std::size_t j = 0; j < cd; ++j) {
        spec.mult[i][j] =
            range.coordinates_of(a.multiply(range.basis_vector(i), range.basis_vector(j)));
      }
    }
    Vec mu;
    for (std::size_t i = 0; i < cd; ++i) mu.push_back(f.mu_of(range.basis_vector(i)));

    FrobeniusAlgebra comp = FrobeniusAlgebra::attach(Algebra::build(std::move(spec)), std::move(mu));
    Classification cls = classify(comp);
    out.summands.push_back(Summand{p, std::move(comp), std::move(cls), range.basis()});
  }

  std::sort(out.summands.begin(), out.summands.end(), [](const Summand& x, const Summand& y) {
    if (x.component.dim() != y.component.dim()) return x.component.dim() < y.component.dim();
    int rx = tag_rank(x.classification.kind), ry = tag_rank(y.classification.kind);
    if (rx != ry) return rx < ry;
    return vec_less(x.idempotent, y.idempotent);
  });
  return out;
}

}  // namespace tqft
