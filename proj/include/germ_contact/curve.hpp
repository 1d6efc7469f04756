#ifndef GERM_CONTACT_CURVE_HPP
#define GERM_CONTACT_CURVE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "number_field.hpp"
#include "polynomial.hpp"

namespace germ_contact {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameterized curve germ t -> (c_1(t), ..., c_n(t)). Coefficients of
/// exponents below `truncation` are exact; when `exact` is set the components
/// are genuine polynomials and nothing is unknown.
template <class Field>
struct CurveGermT {
  Field field{};
  std::vector<UPoly<Field>> components;
  int truncation = 64;
  bool exact = false;

  int nvars() const { return static_cast<int>(components.size()); }

  // Lowest exponent over all components; nullopt when every component is
  // zero below the truncation.
  std::optional<int> order() const
  {
    std::optional<int> best;
    for (const auto& c : components) {
      int o = c.truncated(truncation).order();
      if (o >= 0 && (!best || o < *best))
        best = o;
    }
    return best;
  }

  int max_degree() const
  {
    int d = 0;
    for (const auto& c : components)
      d = std::max(d, c.degree());
    return d;
  }

  std::string to_string(const std::string& var = "t") const
  {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i)
        out += ", ";
      out += series_string(components[i], var);
    }
    out += ")";
    if (!exact)
      out += " + O(" + var + "^" + std::to_string(truncation) + ")";
    return out;
  }

private:
  std::string series_string(const UPoly<Field>& p, const std::string& var) const
  {
    UPoly<Field> s = exact ? p : p.truncated(truncation);
    if (s.is_zero())
      return "0";
    std::string out;
    for (int i = 0; i <= s.degree(); ++i) {
      const auto& c = s.coeffs()[static_cast<std::size_t>(i)];
      if (field.is_zero(c))
        continue;
      std::string cs = field.to_string(c);
      bool simple = cs.find_first_of(" +") == std::string::npos && cs.find('-', 1) == std::string::npos;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string term;
      if (mono.empty())
        term = simple ? cs : "(" + cs + ")";
      else if (cs == "1")
        term = mono;
      else if (cs == "-1")
        term = "-" + mono;
      else
        term = (simple ? cs : "(" + cs + ")") + "*" + mono;
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out;
  }
};

using CurveGerm = CurveGermT<RationalField>;
using AlgebraicCurveGerm = CurveGermT<NumberField>;

/// Polynomial curve with rational coefficients; components given low degree first.
inline CurveGerm polynomial_curve(const std::vector<std::vector<Rational>>& components)
{
  CurveGerm c;
  for (const auto& v : components) {
    if (!v.empty() && sgn(v[0]) != 0)
      throw std::invalid_argument("curve components must vanish at t = 0");
    c.components.emplace_back(RationalField{}, v);
  }
  c.exact = true;
  c.truncation = c.max_degree() + 1;
  return c;
}

inline AlgebraicCurveGerm to_algebraic(const CurveGerm& c)
{
  AlgebraicCurveGerm out;
  out.truncation = c.truncation;
  out.exact = c.exact;
  for (const auto& comp : c.components)
    out.components.push_back(detail::lift_to_kpoly(out.field, comp));
  return out;
}

template <class Field>
int curve_order(const CurveGermT<Field>& c)
{
  auto o = c.order();
  if (!o)
    throw TruncationError("curve is zero up to its truncation order " + std::to_string(c.truncation));
  return *o;
}

/// g(c(t)) modulo t^n.
template <class Field>
UPoly<Field> pullback_series(const Polynomial& g, const CurveGermT<Field>& c, int n)
{
  if (g.nvars() != c.nvars())
    throw std::invalid_argument("arity mismatch: polynomial in " + std::to_string(g.nvars()) +
                                " variables, curve with " + std::to_string(c.nvars()) + " components");
  const Field& f = c.field;
  std::size_t nv = c.components.size();
  std::vector<std::vector<UPoly<Field>>> powers(nv);
  auto power = [&](std::size_t i, int k) -> const UPoly<Field>& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(UPoly<Field>::constant(f, f.one()));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(mul_trunc(cache.back(), c.components[i].truncated(n), n));
    return cache[static_cast<std::size_t>(k)];
  };
  UPoly<Field> sum(f);
  for (const auto& [e, coef] : g.terms()) {
    UPoly<Field> term = UPoly<Field>::constant(f, f.from_rational(coef));
    for (std::size_t i = 0; i < nv && !term.is_zero(); ++i)
      if (e[i] > 0)
        term = mul_trunc(term, power(i, e[i]), n);
    sum = sum + term;
  }
  return sum.truncated(n);
}

/// Precision at which the pullback of g along c is fully determined: the
/// curve's truncation, or for an exact curve the degree of the composite + 1.
template <class Field>
int pullback_precision(const Polynomial& g, const CurveGermT<Field>& c)
{
  if (c.exact)
    return std::max(1, g.total_degree() * c.max_degree() + 1);
  return c.truncation;
}

/// Order of g along c; nullopt means identically zero to the truncation
/// (which, for an exact curve, means the curve lies in V(g)).
template <class Field>
std::optional<int> pullback_order(const Polynomial& g, const CurveGermT<Field>& c)
{
  int o = pullback_series(g, c, pullback_precision(g, c)).order();
  if (o < 0)
    return std::nullopt;
  return o;
}

template <class Field>
std::optional<int> ideal_order_on_curve(const IdealPresentation& ideal, const CurveGermT<Field>& c)
{
  if (ideal.nvars() != c.nvars())
    throw std::invalid_argument("arity mismatch between ideal and curve");
  std::optional<int> best;
  for (const auto& g : ideal.generators()) {
    auto o = pullback_order(g, c);
    if (o && (!best || *o < *best))
      best = o;
  }
  return best;
}

/// Coefficient pool {0, 1, -1, 2, -2, ..., h, -h}.
inline std::vector<Rational> height_pool(int h)
{
  if (h < 1)
    throw std::invalid_argument("coefficient height must be at least 1");
  std::vector<Rational> pool{Rational(0)};
  for (int k = 1; k <= h; ++k) {
    pool.emplace_back(k);
    pool.emplace_back(-k);
  }
  return pool;
}

/// Calls fn(index, coefficient digits) for every nonzero n-tuple of
/// polynomials of degree <= d without constant term, coefficients from the
/// pool. Digit slot i*d + (k-1) holds the pool index of the t^k coefficient
/// of component i; the first slot varies slowest.
inline void for_each_curve_digits(int n, int d, std::size_t pool_size,
                                  const std::function<void(std::uint64_t, const std::vector<int>&)>& fn)
{
  if (n < 1 || d < 1)
    throw std::invalid_argument("curve enumeration needs n >= 1 and degree >= 1");
  if (pool_size < 2)
    throw std::invalid_argument("coefficient pool needs at least two values");
  std::size_t slots = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<int> digits(slots, 0);
  std::uint64_t index = 0;
  while (true) {
    std::size_t pos = slots;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(++digits[pos]) < pool_size)
        break;
      digits[pos] = 0;
      if (pos == 0)
        return;
    }
    fn(index++, digits);
  }
}

inline CurveGerm curve_from_digits(int n, int d, const std::vector<Rational>& pool, const std::vector<int>& digits)
{
  std::vector<std::vector<Rational>> comps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& v = comps[static_cast<std::size_t>(i)];
    v.assign(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int k = 1; k <= d; ++k)
      v[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(digits[static_cast<std::size_t>(i * d + k - 1)])];
  }
  return polynomial_curve(comps);
}

inline std::vector<CurveGerm> enumerate_curves(int n, int d, const std::vector<Rational>& pool)
{
  if (std::find(pool.begin(), pool.end(), Rational(0)) == pool.end() ||
      std::find(pool.begin(), pool.end(), Rational(1)) == pool.end())
    throw std::invalid_argument("coefficient pool must contain 0 and 1");
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (pool[i] == pool[j])
        throw std::invalid_argument("coefficient pool has duplicate values");
  std::vector<CurveGerm> out;
  for_each_curve_digits(n, d, pool.size(), [&](std::uint64_t, const std::vector<int>& digits) {
    out.push_back(curve_from_digits(n, d, pool, digits));
  });
  return out;
}

struct SearchParams {
  int max_degree = 2;
  int height = 1;
};

struct SearchResult {
  ExtendedRational ratio;  // infinite when a curve inside V(I) was found
  CurveGerm witness;
  std::uint64_t witness_index = 0;
  std::uint64_t curves_examined = 0;
  bool found = false;
};

/// Certified lower bound for the 1-type: the best ratio v(I o c)/v(c) over
/// the enumerated polynomial curves. A fast pass modulo a large prime ranks
/// curves (the modular order is never below the exact one); exact arithmetic
/// then confirms candidates in that order until no remaining curve can win.
/// Reparameterizations t -> t^k leave every ratio unchanged and are not
/// enumerated separately.
inline SearchResult type1_search_lower_bound(const IdealPresentation& ideal, const SearchParams& params)
{
  int n = ideal.nvars();
  int d = params.max_degree;
  std::vector<Rational> pool = height_pool(params.height);
  PrimeField fp((std::uint64_t{1} << 61) - 1);

  bool modular_ok = true;
  for (const auto& g : ideal.generators())
    for (const auto& [e, c] : g.terms())
      if (fp.from_integer(c.get_den()) == 0)
        modular_ok = false;

  std::vector<std::uint64_t> pool_mod;
  for (const auto& r : pool)
    pool_mod.push_back(fp.from_rational(r));

  struct Ranked {
    bool infinite;
    Rational ratio;
    std::uint64_t index;
    std::vector<int> digits;
  };
  std::vector<Ranked> ranked;
  std::uint64_t examined = 0;

  for_each_curve_digits(n, d, pool.size(), [&](std::uint64_t index, const std::vector<int>& digits) {
    ++examined;
    CurveGermT<PrimeField> c{fp, {}, 0, true};
    int ord = -1;
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> v(static_cast<std::size_t>(d) + 1, 0);
      for (int k = 1; k <= d; ++k)
        v[static_cast<std::size_t>(k)] = pool_mod[static_cast<std::size_t>(digits[static_cast<std::size_t>(i * d + k - 1)])];
      c.components.emplace_back(fp, std::move(v));
      int o = c.components.back().order();
      if (o >= 0 && (ord < 0 || o < ord))
        ord = o;
    }
    c.truncation = c.max_degree() + 1;
    if (!modular_ok) {
      ranked.push_back({true, Rational(0), index, digits});
      return;
    }
    std::optional<int> best;
    for (const auto& g : ideal.generators()) {
      auto o = pullback_order(g, c);
      if (o && (!best || *o < *best))
        best = o;
    }
    if (!best)
      ranked.push_back({true, Rational(0), index, digits});
    else
      ranked.push_back({false, make_rational(*best, ord), index, digits});
  });

  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.infinite != b.infinite)
      return a.infinite;
    if (!a.infinite && a.ratio != b.ratio)
      return a.ratio > b.ratio;
    return a.index < b.index;
  });

  SearchResult result;
  result.curves_examined = examined;
  for (const auto& cand : ranked) {
    if (result.found) {
      if (result.ratio.is_infinite())
        break;
      if (!cand.infinite) {
        if (cand.ratio < result.ratio.value())
          break;
        if (cand.ratio == result.ratio.value() && cand.index > result.witness_index)
          continue;
      }
    }
    CurveGerm c = curve_from_digits(n, d, pool, cand.digits);
    auto o = ideal_order_on_curve(ideal, c);
    ExtendedRational r = o ? ExtendedRational(make_rational(*o, curve_order(c))) : ExtendedRational::infinity();
    if (!result.found || r > result.ratio || (r == result.ratio && cand.index < result.witness_index)) {
      result.found = true;
      result.ratio = r;
      result.witness = c;
      result.witness_index = cand.index;
    }
  }
  return result;
}

}  // namespace germ_contact

#endif
