#include "tqft/factor.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

// ---------------------------------------------------------------------------
// Factorization over F_p (squarefree monic input)

std::uint64_t poly_seed(const Poly& f) {
  // FNV-1a over the residues, so equal-degree splitting is reproducible
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& c : f.coeffs()) {
    h ^= c.residue();
    h *= 1099511628211ull;
  }
  h ^= f.field().modulus();
  h *= 1099511628211ull;
  return h;
}

void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Field k = f.field();
  std::uint64_t p = k.modulus();
  if (p == 2) throw FieldUnsupported("equal-degree splitting requires an odd prime");
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  for (;;) {
    Vec coeffs;
    for (int i = 0; i < f.degree(); ++i) {
      coeffs.push_back(k.from_int(static_cast<long long>(rng() % p)));
    }
    Poly r = Poly::from_coeffs(k, std::move(coeffs));
    if (r.degree() < 1) continue;
    Poly g = poly_gcd(r, f);
    if (g.degree() == 0) {
      g = poly_powmod(r, e, f) - Poly::constant(k.one());
      g = poly_gcd(g, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split((f / g).monic(), d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree_fp(const Poly& f_in) {
  Field k = f_in.field();
  std::uint64_t p = k.modulus();
  Poly f = f_in.monic();
  std::vector<Poly> out;
  std::mt19937_64 rng(poly_seed(f));

  // distinct-degree decomposition
  Poly h = Poly::x(k) % f;
  Poly rest = f;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = poly_powmod(h, mpz_class(static_cast<unsigned long>(p)), rest);
    Poly g = poly_gcd(h - Poly::x(k), rest);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = (rest / g).monic();
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials for the Zassenhaus route

using ZPoly = std::vector<mpz_class>;  // [i] multiplies x^i; no leading zeros

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}

void zmod(ZPoly& f, const mpz_class& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(f);
}

void zmod_centered(ZPoly& f, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(f);
}

// divide by a monic divisor, coefficients taken mod m
std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& f, const ZPoly& g, const mpz_class& m) {
  assert(!g.empty() && g.back() == 1);
  ZPoly rem = f;
  zmod(rem, m);
  ZPoly quot;
  int dg = zdeg(g);
  if (zdeg(rem) >= dg) quot.assign(static_cast<std::size_t>(zdeg(rem) - dg) + 1, mpz_class(0));
  while (zdeg(rem) >= dg) {
    std::size_t shift = static_cast<std::size_t>(zdeg(rem) - dg);
    mpz_class factor = rem.back();
    quot[shift] = factor;
    for (int i = 0; i <= dg; ++i) {
      std::size_t idx = shift + static_cast<std::size_t>(i);
      rem[idx] = (rem[idx] - factor * g[static_cast<std::size_t>(i)]) % m;
      if (rem[idx] < 0) rem[idx] += m;
    }
    ztrim(rem);
  }
  ztrim(quot);
  return {quot, rem};
}

// exact division over Z; nullopt when g does not divide f
std::optional<ZPoly> zdivide_exact(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) return std::nullopt;
  ZPoly rem = f;
  ZPoly quot;
  int dg = zdeg(g);
  if (zdeg(rem) >= dg) quot.assign(static_cast<std::size_t>(zdeg(rem) - dg) + 1, mpz_class(0));
  while (zdeg(rem) >= dg) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), g.back().get_mpz_t());
    if (r != 0) return std::nullopt;
    std::size_t shift = static_cast<std::size_t>(zdeg(rem) - dg);
    quot[shift] = q;
    for (int i = 0; i <= dg; ++i) {
      rem[shift + static_cast<std::size_t>(i)] -= q * g[static_cast<std::size_t>(i)];
    }
    ztrim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  ztrim(quot);
  return quot;
}

Poly zpoly_to_fp(const ZPoly& f, Field k) {
  Vec coeffs;
  mpz_class p(static_cast<unsigned long>(k.modulus()));
  for (const auto& c : f) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    coeffs.push_back(k.from_int(static_cast<long long>(mpz_get_ui(r.get_mpz_t()))));
  }
  return Poly::from_coeffs(k, std::move(coeffs));
}

ZPoly fp_to_zpoly(const Poly& f) {
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    out.emplace_back(static_cast<unsigned long>(c.residue()));
  }
  return out;
}

// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the same
// congruences mod m^2. f, g, h monic; deg s < deg h, deg t < deg g.
struct HenselPair {
  ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = zsub(f, zmul(in.g, in.h));
  zmod(e, m2);
  // u = (e*t) rem g, e*t = q*g + u; v = e*s + q*h
  auto [q, u] = zdivmod_monic_mod(zmul(e, in.t), in.g, m2);
  ZPoly v = zadd(zmul(e, in.s), zmul(q, in.h));
  zmod(v, m2);
  HenselPair out;
  out.g = zadd(in.g, u);
  zmod(out.g, m2);
  out.h = zadd(in.h, v);
  zmod(out.h, m2);
  // refresh the Bezout pair: b = s*g' + t*h' - 1 (mod m^2)
  ZPoly b = zsub(zadd(zmul(in.s, out.g), zmul(in.t, out.h)), ZPoly{mpz_class(1)});
  zmod(b, m2);
  auto [q2, dt] = zdivmod_monic_mod(zmul(b, in.t), out.g, m2);
  ZPoly ds = zadd(zmul(b, in.s), zmul(q2, out.h));
  zmod(ds, m2);
  out.s = zsub(in.s, ds);
  zmod(out.s, m2);
  out.t = zsub(in.t, dt);
  zmod(out.t, m2);
  return out;
}

// Lift the factorization f = prod(factors) (mod p) to mod target, where
// target is a power of p. All polynomials monic, f squarefree mod p.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<Poly>& factors, Field fp,
                                    const mpz_class& p, const mpz_class& target) {
  if (factors.size() == 1) {
    ZPoly out = f;
    zmod(out, target);
    return {out};
  }
  std::size_t half = factors.size() / 2;
  std::vector<Poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Poly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  Poly gp = Poly::constant(fp.one());
  for (const auto& x : left) gp = gp * x;
  Poly hp = Poly::constant(fp.one());
  for (const auto& x : right) hp = hp * x;
  auto bez = poly_xgcd(gp, hp);
  assert(bez.g.degree() == 0);

  HenselPair pair{fp_to_zpoly(gp), fp_to_zpoly(hp), fp_to_zpoly(bez.s), fp_to_zpoly(bez.t)};
  mpz_class m = p;
  while (m < target) {
    pair = hensel_step(f, pair, m);
    m = m * m;
  }
  zmod(pair.g, target);
  zmod(pair.h, target);
  auto lifted_left = hensel_lift_tree(pair.g, left, fp, p, target);
  auto lifted_right = hensel_lift_tree(pair.h, right, fp, p, target);
  lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
  return lifted_left;
}

// next k-combination of indices into [0, n); returns false when exhausted
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Zassenhaus on a monic squarefree integer polynomial; returns monic factors.
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& f_in) {
  if (zdeg(f_in) <= 1) return {f_in};

  // pick an odd prime keeping f squarefree
  std::uint64_t p = 0;
  Field fp = Field::rationals();  // reassigned below
  for (std::uint64_t cand = 3;; cand += 2) {
    if (!is_prime_u64(cand)) continue;
    Field k = Field::prime(cand);
    Poly fbar = zpoly_to_fp(f_in, k);
    if (fbar.degree() != zdeg(f_in)) continue;  // cannot happen for monic f
    if (poly_gcd(fbar, fbar.derivative()).degree() == 0) {
      p = cand;
      fp = k;
      break;
    }
  }

  std::vector<Poly> modular = factor_squarefree_fp(zpoly_to_fp(f_in, fp));
  if (modular.size() == 1) return {f_in};

  // Landau-Mignotte: factor coefficients are below 2^deg * ||f||_2
  mpz_class norm2(0);
  for (const auto& c : f_in) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= zdeg(f_in);
  mpz_class target(static_cast<unsigned long>(p));
  while (target <= 2 * bound) target *= static_cast<unsigned long>(p);

  std::vector<ZPoly> lifted = hensel_lift_tree(f_in, modular, fp, mpz_class(static_cast<unsigned long>(p)), target);

  // subset recombination
  std::vector<ZPoly> result;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  ZPoly rem_f = f_in;
  std::size_t t = 1;
  while (2 * t <= live.size()) {
    bool found = false;
    std::vector<std::size_t> comb(t);
    for (std::size_t i = 0; i < t; ++i) comb[i] = i;
    do {
      ZPoly cand{mpz_class(1)};
      for (auto ci : comb) cand = zmul(cand, lifted[live[ci]]);
      zmod_centered(cand, target);
      if (auto quot = zdivide_exact(rem_f, cand)) {
        result.push_back(cand);
        rem_f = *quot;
        std::vector<std::size_t> next_live;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) next_live.push_back(live[i]);
        }
        live = std::move(next_live);
        found = true;
        break;
      }
    } while (next_combination(comb, live.size()));
    if (!found) ++t;
  }
  if (zdeg(rem_f) > 0) result.push_back(rem_f);
  return result;
}

// monic rational polynomial -> monic integer polynomial via x -> x/L
struct Monicized {
  ZPoly f;
  mpz_class scale;
};

Monicized monicize(const Poly& f) {
  mpz_class lcm(1);
  for (const auto& c : f.coeffs()) {
    mpz_class den = c.rational().get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  int n = f.degree();
  ZPoly out(static_cast<std::size_t>(n) + 1);
  mpz_class power(1);  // L^(n-i)
  for (int i = n; i >= 0; --i) {
    mpq_class scaled = f.coeff(static_cast<std::size_t>(i)).rational() * mpq_class(power);
    assert(scaled.get_den() == 1);
    out[static_cast<std::size_t>(i)] = scaled.get_num();
    power *= lcm;
  }
  return {out, lcm};
}

Poly scale_back(const ZPoly& g, const mpz_class& scale) {
  // G(x) monic in Z[x] -> G(scale * x) / scale^deg, monic in Q[x]
  Field q = Field::rationals();
  int d = zdeg(g);
  Vec coeffs;
  mpz_class denom(1);  // scale^(d-i)
  for (int i = d; i >= 0; --i) {
    mpq_class c(g[static_cast<std::size_t>(i)], denom);
    c.canonicalize();
    coeffs.push_back(q.parse(c.get_str()));
    denom *= scale;
  }
  std::reverse(coeffs.begin(), coeffs.end());
  return Poly::from_coeffs(q, std::move(coeffs));
}

std::vector<Poly> factor_squarefree_q(const Poly& f) {
  auto [zf, scale] = monicize(f.monic());
  auto zfactors = factor_monic_squarefree_z(zf);
  std::vector<Poly> out;
  out.reserve(zfactors.size());
  for (const auto& g : zfactors) out.push_back(scale_back(g, scale));
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return vec_less(a.coeffs(), b.coeffs());
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f) {
  if (f.degree() < 1) throw Error("factor_poly requires a nonconstant polynomial");
  Field k = f.field();
  Poly mf = f.monic();

  // squarefree part; degrees stay below char(k), so the derivative is honest
  Poly deriv = mf.derivative();
  Poly sqfree = deriv.is_zero() ? mf : (mf / poly_gcd(mf, deriv)).monic();

  std::vector<Poly> irreducibles =
      k.is_rational() ? factor_squarefree_q(sqfree) : factor_squarefree_fp(sqfree);
  for (auto& g : irreducibles) g = g.monic();
  std::sort(irreducibles.begin(), irreducibles.end(), poly_less);

  std::vector<std::pair<Poly, int>> out;
  Poly rest = mf;
  for (const auto& g : irreducibles) {
    int mult = 0;
    for (;;) {
      auto [q, r] = rest.divmod(g);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    assert(mult >= 1);
    out.emplace_back(g, mult);
  }
  assert(rest.degree() == 0);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto factors = factor_poly(f);
  return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace tqft
