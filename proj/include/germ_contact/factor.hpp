#ifndef GERM_CONTACT_FACTOR_HPP
#define GERM_CONTACT_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "upoly.hpp"

// Univariate factorization over Q (Zassenhaus): factor modulo a small prime
// with Cantor-Zassenhaus, Hensel-lift to a power of p above the Mignotte
// bound, then recombine lifted factors by trial division.

namespace germ_contact {

namespace detail {

using IntPoly = std::vector<Integer>;  // low degree first, trimmed

inline void trim(IntPoly& f)
{
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

inline int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

/// Primitive integer polynomial with positive leading coefficient, same roots as f.
inline IntPoly primitive_integer(const QPoly& f)
{
  Integer den = 1;
  for (const auto& c : f.coeffs())
    den = lcm(den, Integer(c.get_den()));
  IntPoly out;
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = Integer(c.get_num()) * (den / Integer(c.get_den()));
    out.push_back(v);
    content = gcd(content, v);
  }
  trim(out);
  if (out.empty())
    return out;
  if (content != 0 && content != 1)
    for (auto& v : out)
      v /= content;
  if (out.back() < 0)
    for (auto& v : out)
      v = -v;
  return out;
}

inline QPoly to_qpoly(const IntPoly& f)
{
  std::vector<Rational> c;
  for (const auto& v : f)
    c.emplace_back(v);
  return QPoly(RationalField{}, std::move(c));
}

inline Integer mod_positive(const Integer& a, const Integer& m)
{
  Integer r = a % m;
  if (r < 0)
    r += m;
  return r;
}

inline Integer symmetric_mod(const Integer& a, const Integer& m)
{
  Integer r = mod_positive(a, m);
  if (2 * r > m)
    r -= m;
  return r;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b)
{
  if (a.empty() || b.empty())
    return {};
  IntPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline IntPoly reduce(IntPoly f, const Integer& m)
{
  for (auto& v : f)
    v = mod_positive(v, m);
  trim(f);
  return f;
}

inline UPoly<PrimeField> to_modp(const IntPoly& f, const PrimeField& fp)
{
  std::vector<std::uint64_t> c;
  for (const auto& v : f)
    c.push_back(fp.from_integer(v));
  return UPoly<PrimeField>(fp, std::move(c));
}

inline IntPoly from_modp(const UPoly<PrimeField>& f)
{
  IntPoly out;
  for (auto v : f.coeffs())
    out.emplace_back(static_cast<unsigned long>(v));
  trim(out);
  return out;
}

inline bool is_prime_u64(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Distinct-degree then equal-degree splitting of a monic square-free
/// polynomial over F_p (p odd). Deterministic for a fixed seed.
inline std::vector<UPoly<PrimeField>> cantor_zassenhaus(const UPoly<PrimeField>& f, std::mt19937_64& rng)
{
  using P = UPoly<PrimeField>;
  const PrimeField& fp = f.field();
  std::uint64_t p = fp.modulus();
  std::vector<P> out;
  P rest = f.monic();
  P x = P::x(fp);
  P h = x % rest;
  int i = 0;
  std::vector<std::pair<P, int>> by_degree;
  while (rest.degree() >= 2 * (i + 1)) {
    ++i;
    h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
    P g = gcd(rest, h - x);
    if (g.degree() > 0) {
      by_degree.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0)
    by_degree.emplace_back(rest, rest.degree());

  std::vector<std::pair<P, int>> work = by_degree;
  while (!work.empty()) {
    auto [g, d] = work.back();
    work.pop_back();
    if (g.degree() == d) {
      out.push_back(g.monic());
      continue;
    }
    Integer pd = 1;
    for (int k = 0; k < d; ++k)
      pd *= static_cast<unsigned long>(p);
    Integer e = (pd - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
      std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
      for (auto& v : c)
        v = dist(rng);
      P a(fp, std::move(c));
      if (a.degree() <= 0)
        continue;
      P b = powmod(a, e, g) - P::constant(fp, 1);
      P s = gcd(g, b);
      if (s.degree() > 0 && s.degree() < g.degree()) {
        work.emplace_back(s, d);
        work.emplace_back((g / s).monic(), d);
        break;
      }
    }
  }
  return out;
}

/// Lift target = g*h (mod p), g monic, gcd(g,h) = 1 mod p, to a factorization
/// modulo `modulus` (a power of p).
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& target, const UPoly<PrimeField>& g,
                                               const UPoly<PrimeField>& h, const PrimeField& fp,
                                               const Integer& modulus)
{
  using P = UPoly<PrimeField>;
  Integer p = static_cast<unsigned long>(fp.modulus());
  auto [one, s, t] = xgcd(g, h);
  if (one.degree() != 0)
    throw std::logic_error("Hensel lifting needs coprime factors");
  IntPoly G = from_modp(g), H = from_modp(h);
  Integer m = p;
  while (m < modulus) {
    Integer mp = m * p;
    IntPoly gh = mul(G, H);
    IntPoly err(std::max(target.size(), gh.size()), Integer(0));
    for (std::size_t k = 0; k < target.size(); ++k)
      err[k] += target[k];
    for (std::size_t k = 0; k < gh.size(); ++k)
      err[k] -= gh[k];
    for (auto& v : err) {
      v = mod_positive(v, mp);
      if (v % m != 0)
        throw std::logic_error("Hensel invariant violated");
      v /= m;
    }
    trim(err);
    P e = to_modp(err, fp);
    auto [q, dg] = divmod(t * e, g);
    P dh = s * e + q * h;
    IntPoly DG = from_modp(dg), DH = from_modp(dh);
    if (G.size() < DG.size())
      G.resize(DG.size(), Integer(0));
    for (std::size_t k = 0; k < DG.size(); ++k)
      G[k] += m * DG[k];
    if (H.size() < DH.size())
      H.resize(DH.size(), Integer(0));
    for (std::size_t k = 0; k < DH.size(); ++k)
      H[k] += m * DH[k];
    G = reduce(G, mp);
    H = reduce(H, mp);
    m = mp;
  }
  return {G, H};
}

/// Irreducible factors of a primitive square-free integer polynomial of degree >= 2.
inline std::vector<IntPoly> zassenhaus(const IntPoly& f)
{
  int n = degree(f);
  Integer lc = f.back();
  std::mt19937_64 rng(0x5eed);

  // choose the prime (among a few admissible ones) giving the fewest modular factors
  std::vector<UPoly<PrimeField>> best_factors;
  std::uint64_t best_p = 0;
  int admissible = 0;
  for (std::uint64_t p = 1009; admissible < 5; p += 2) {
    if (!is_prime_u64(p))
      continue;
    PrimeField fp(p);
    if (fp.from_integer(lc) == 0)
      continue;
    UPoly<PrimeField> fm = to_modp(f, fp);
    if (gcd(fm, fm.derivative()).degree() != 0)
      continue;
    ++admissible;
    auto facs = cantor_zassenhaus(fm, rng);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_factors = std::move(facs);
      best_p = p;
    }
    if (best_factors.size() == 1)
      break;
  }
  if (best_factors.size() <= 1)
    return {f};

  PrimeField fp(best_p);
  Integer p = static_cast<unsigned long>(best_p);
  Integer maxc = 0;
  for (const auto& c : f)
    maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = 2 * abs(lc) * maxc * (n + 1);
  for (int i = 0; i < n; ++i)
    bound *= 2;
  Integer modulus = p;
  while (modulus <= bound)
    modulus *= p;

  // lift one monic factor at a time: rest = lc * prod(remaining)
  std::vector<IntPoly> lifted;
  IntPoly rest = reduce(f, modulus);
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    UPoly<PrimeField> others = UPoly<PrimeField>::constant(fp, fp.from_integer(lc));
    for (std::size_t j = i + 1; j < best_factors.size(); ++j)
      others = others * best_factors[j];
    auto [G, H] = hensel_pair(rest, best_factors[i], others, fp, modulus);
    lifted.push_back(G);
    rest = H;
  }
  {
    // the last factor is rest / lc, monic modulo the lifting modulus
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), mod_positive(lc, modulus).get_mpz_t(), modulus.get_mpz_t());
    IntPoly last = rest;
    for (auto& v : last)
      v = mod_positive(v * lc_inv, modulus);
    trim(last);
    lifted.push_back(last);
  }

  std::vector<IntPoly> result;
  IntPoly remaining = f;
  std::vector<IntPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t k = 0; k < s; ++k)
      idx[k] = k;
    while (true) {
      IntPoly cand{remaining.back()};
      for (auto k : idx)
        cand = reduce(mul(cand, pool[k]), modulus);
      for (auto& v : cand)
        v = symmetric_mod(v, modulus);
      trim(cand);
      QPoly candq = to_qpoly(cand);
      QPoly remq = to_qpoly(remaining);
      auto [quo, rem] = divmod(remq, candq);
      if (rem.is_zero()) {
        IntPoly g = primitive_integer(candq);
        result.push_back(g);
        remaining = primitive_integer(quo);
        std::vector<IntPoly> next;
        for (std::size_t k = 0; k < pool.size(); ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end())
            next.push_back(pool[k]);
        pool = std::move(next);
        found = true;
        break;
      }
      // next combination
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == pool.size() - s + static_cast<std::size_t>(k))
        --k;
      if (k < 0)
        break;
      ++idx[static_cast<std::size_t>(k)];
      for (std::size_t j = static_cast<std::size_t>(k) + 1; j < s; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    if (!found)
      ++s;
  }
  if (degree(remaining) > 0)
    result.push_back(remaining);
  return result;
}

}  // namespace detail

/// Monic irreducible factors over Q of a square-free polynomial.
inline std::vector<QPoly> factor_squarefree_rational(const QPoly& f)
{
  if (f.degree() <= 0)
    return {};
  if (f.degree() == 1)
    return {f.monic()};
  std::vector<QPoly> out;
  detail::IntPoly g = detail::primitive_integer(f);
  // peel off the root 0 first; it is common and cheap
  if (g.front() == 0) {
    out.push_back(QPoly::x(RationalField{}));
    g.erase(g.begin());
  }
  if (detail::degree(g) == 1)
    out.push_back(detail::to_qpoly(g).monic());
  else if (detail::degree(g) >= 2)
    for (const auto& h : detail::zassenhaus(g))
      out.push_back(detail::to_qpoly(h).monic());
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end(),
                                        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
  });
  return out;
}

/// Monic irreducible factors with multiplicities.
inline std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f)
{
  std::vector<std::pair<QPoly, int>> out;
  for (const auto& [s, mult] : squarefree_decomposition(f))
    for (const auto& g : factor_squarefree_rational(s))
      out.emplace_back(g, mult);
  return out;
}

inline bool is_irreducible_rational(const QPoly& f)
{
  if (f.degree() <= 0)
    return false;
  if (squarefree_part(f).degree() != f.degree())
    return false;
  return factor_squarefree_rational(f).size() == 1;
}

}  // namespace germ_contact

#endif
