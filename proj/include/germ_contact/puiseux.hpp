#ifndef GERM_CONTACT_PUISEUX_HPP
#define GERM_CONTACT_PUISEUX_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bivariate.hpp"
#include "curve.hpp"
#include "number_field.hpp"

namespace germ_contact {

/// One irreducible branch at the origin of a plane curve f(x, y) = 0, given
/// by t -> (x(t), y(t)) with x(t) = A t^e exactly and y(t) known modulo
/// t^truncation (exactly when y_exact). Coefficients live in `field`; the
/// branch stands for `conjugates` Galois-conjugate branches.
struct PuiseuxBranch {
  NumberField field;
  KPoly x;
  KPoly y;
  int ramification = 1;
  int truncation = 0;
  bool y_exact = false;
  int conjugates = 1;
  int multiplicity = 1;
  std::optional<Rational> initial_slope;  // y ~ x^slope; none for the coordinate axes
  bool swapped = false;                   // the branch x = 0, parameterized (0, t)

  int y_order() const
  {
    int o = y.truncated(truncation).order();
    return o;  // -1 when y vanishes to the truncation
  }

  /// v(b): order of vanishing of the parameterization.
  int order() const
  {
    int ox = x.order();
    int oy = y_order();
    if (ox < 0)
      return oy;
    if (oy < 0)
      return ox;
    return std::min(ox, oy);
  }

  AlgebraicCurveGerm curve() const
  {
    AlgebraicCurveGerm c;
    c.field = field;
    c.components = {x, y_exact ? y : y.truncated(truncation)};
    c.exact = y_exact;
    c.truncation = y_exact ? std::max(x.degree(), y.degree()) + 1 : truncation;
    return c;
  }
};

namespace detail {

/// Polynomial in (u, v) over a number field: c[j] is the coefficient of v^j.
struct BiPoly {
  NumberField k;
  std::vector<KPoly> c;

  void trim()
  {
    while (!c.empty() && c.back().is_zero())
      c.pop_back();
  }
  int vdeg() const { return static_cast<int>(c.size()) - 1; }
};

struct PuiseuxStep {
  NumberField::Elem alpha, beta;
  int q, m;
};

struct Edge {
  int i1, j1, i2, j2;  // from (i1, j1) to (i2, j2), j1 > j2
  int m, q;            // slope m/q in lowest terms
};

inline BiPoly embed(const BiPoly& g, const FieldExtension& ext)
{
  BiPoly out{ext.field, {}};
  for (const auto& x : g.c)
    out.c.push_back(ext.embed(x));
  return out;
}

inline BiPoly bipoly_from_rec(const RecPoly& f)
{
  NumberField q;
  BiPoly out{q, {}};
  for (const auto& x : f)
    out.c.push_back(lift_to_kpoly(q, x));
  out.trim();
  return out;
}

/// Lower-left Newton polygon edges from (0, j0) to (i0, 0).
inline std::vector<Edge> newton_edges(const BiPoly& g, int j0)
{
  std::vector<Edge> edges;
  int ci = 0, cj = j0;
  while (cj > 0) {
    int bi = -1, bj = -1;
    Rational best;
    for (int j = cj - 1; j >= 0; --j) {
      const KPoly& p = g.c[static_cast<std::size_t>(j)];
      int i = p.order();
      if (i < 0)
        continue;
      Rational slope = make_rational(i - ci, cj - j);
      if (bi < 0 || slope < best || (slope == best && j < bj)) {
        best = slope;
        bi = i;
        bj = j;
      }
    }
    if (bi < 0)
      throw std::logic_error("Newton polygon does not reach the u-axis");
    Integer num = best.get_num(), den = best.get_den();
    edges.push_back({ci, cj, bi, bj, static_cast<int>(num.get_si()), static_cast<int>(den.get_si())});
    ci = bi;
    cj = bj;
  }
  return edges;
}

/// E(w) = sum_k c(i2 - k m, j2 + k q) w^k for the lattice points of the edge.
inline KPoly edge_polynomial(const BiPoly& g, const Edge& e)
{
  std::vector<NumberField::Elem> coeffs;
  for (int k = 0; e.j2 + k * e.q <= e.j1; ++k) {
    int i = e.i2 - k * e.m;
    coeffs.push_back(g.c[static_cast<std::size_t>(e.j2 + k * e.q)].coeff(i));
  }
  return KPoly(g.k, std::move(coeffs));
}

inline NumberField::Elem field_pow(const NumberField& k, const NumberField::Elem& a, int e)
{
  NumberField::Elem r = k.one();
  NumberField::Elem b = a;
  while (e > 0) {
    if (e & 1)
      r = k.mul(r, b);
    e >>= 1;
    if (e)
      b = k.mul(b, b);
  }
  return r;
}

/// G(alpha u^q, u^m (beta + v)) / u^ell.
inline BiPoly transform(const BiPoly& g, const NumberField::Elem& alpha, const NumberField::Elem& beta, int q, int m,
                        int ell)
{
  const NumberField& k = g.k;
  int maxj = g.vdeg();
  int maxu = 0;
  for (int j = 0; j <= maxj; ++j)
    if (!g.c[static_cast<std::size_t>(j)].is_zero())
      maxu = std::max(maxu, q * g.c[static_cast<std::size_t>(j)].degree() + m * j - ell);
  std::vector<std::vector<NumberField::Elem>> out(static_cast<std::size_t>(maxj) + 1,
                                                  std::vector<NumberField::Elem>(static_cast<std::size_t>(maxu) + 1, k.zero()));
  std::vector<NumberField::Elem> beta_pow{k.one()};
  for (int j = 1; j <= maxj; ++j)
    beta_pow.push_back(k.mul(beta_pow.back(), beta));
  std::vector<NumberField::Elem> alpha_pow{k.one()};
  std::vector<Integer> binom{1};
  for (int j = 0; j <= maxj; ++j) {
    if (j > 0) {
      std::vector<Integer> next(static_cast<std::size_t>(j) + 1, Integer(1));
      for (int r = 1; r < j; ++r)
        next[static_cast<std::size_t>(r)] = binom[static_cast<std::size_t>(r - 1)] + binom[static_cast<std::size_t>(r)];
      binom = std::move(next);
    }
    const KPoly& p = g.c[static_cast<std::size_t>(j)];
    for (int i = 0; i <= p.degree(); ++i) {
      const auto& cij = p.coeffs()[static_cast<std::size_t>(i)];
      if (k.is_zero(cij))
        continue;
      while (static_cast<int>(alpha_pow.size()) <= i)
        alpha_pow.push_back(k.mul(alpha_pow.back(), alpha));
      int ue = q * i + m * j - ell;
      if (ue < 0)
        throw std::logic_error("Newton polygon transform produced a negative exponent");
      NumberField::Elem base = k.mul(cij, alpha_pow[static_cast<std::size_t>(i)]);
      for (int r = 0; r <= j; ++r) {
        NumberField::Elem term =
            k.mul(base, k.mul(k.from_rational(Rational(binom[static_cast<std::size_t>(r)])), beta_pow[static_cast<std::size_t>(j - r)]));
        auto& slot = out[static_cast<std::size_t>(r)][static_cast<std::size_t>(ue)];
        slot = k.add(slot, term);
      }
    }
  }
  BiPoly res{k, {}};
  for (auto& row : out)
    res.c.emplace_back(k, std::move(row));
  res.trim();
  return res;
}

/// G(u, phi(u)) modulo u^n.
inline KPoly evaluate_at_series(const BiPoly& g, const KPoly& phi, int n)
{
  KPoly acc(g.k);
  for (int j = g.vdeg(); j >= 0; --j)
    acc = mul_trunc(acc, phi, n) + g.c[static_cast<std::size_t>(j)].truncated(n);
  return acc.truncated(n);
}

inline BiPoly derivative_v(const BiPoly& g)
{
  BiPoly out{g.k, {}};
  for (int j = 1; j <= g.vdeg(); ++j)
    out.c.push_back(g.c[static_cast<std::size_t>(j)].scaled(g.k.from_int(j)));
  out.trim();
  return out;
}

/// The power series root v = phi(u), phi(0) = 0, of G when dG/dv(0,0) != 0.
inline KPoly regular_root(const BiPoly& g, int n)
{
  const NumberField& k = g.k;
  BiPoly dg = derivative_v(g);
  KPoly phi(k);
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    KPoly val = evaluate_at_series(g, phi, prec);
    KPoly der = evaluate_at_series(dg, phi, prec);
    phi = (phi - mul_trunc(val, inverse_series(der, prec), prec)).truncated(prec);
  }
  if (!evaluate_at_series(g, phi, n).is_zero())
    throw std::logic_error("Newton iteration failed to produce a root");
  return phi;
}

struct BranchContext {
  int truncation;
  int multiplicity;
  std::vector<PuiseuxBranch>* out;
};

inline void emit_branch(const NumberField& k, const std::vector<PuiseuxStep>& chain, const KPoly& tail, bool exact,
                        int conjugates, const BranchContext& ctx)
{
  int n = ctx.truncation;
  NumberField::Elem c = k.one();
  int e = 1;
  KPoly v = tail;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    // (u, v) -> (alpha u^q, u^m (beta + v)) with u = c t^e
    KPoly shifted = v + KPoly::constant(k, it->beta);
    NumberField::Elem cm = field_pow(k, c, it->m);
    v = shifted.scaled(cm).shifted(it->m * e);
    if (!exact)
      v = v.truncated(n);
    c = k.mul(it->alpha, field_pow(k, c, it->q));
    e *= it->q;
  }
  PuiseuxBranch b;
  b.field = k;
  b.x = KPoly::monomial(k, c, e);
  b.y = exact ? v : v.truncated(n);
  b.ramification = e;
  b.truncation = n;
  b.y_exact = exact;
  b.conjugates = conjugates;
  b.multiplicity = ctx.multiplicity;
  if (!chain.empty())
    b.initial_slope = make_rational(chain.front().m, chain.front().q);
  ctx.out->push_back(std::move(b));
}

inline void expand(BiPoly g, std::vector<PuiseuxStep> chain, int conjugates, const BranchContext& ctx)
{
  g.trim();
  if (g.c.empty())
    throw std::logic_error("Puiseux expansion reached the zero polynomial");
  if (g.c[0].is_zero()) {
    emit_branch(g.k, chain, KPoly(g.k), true, conjugates, ctx);
    g.c.erase(g.c.begin());
  }
  int j0 = -1;
  for (int j = 0; j <= g.vdeg(); ++j)
    if (!g.k.is_zero(g.c[static_cast<std::size_t>(j)].coeff(0))) {
      j0 = j;
      break;
    }
  if (j0 < 0)
    throw std::logic_error("curve contains the line u = 0 inside the expansion");
  if (j0 == 0)
    return;
  for (const Edge& e : newton_edges(g, j0)) {
    KPoly ep = edge_polynomial(g, e);
    for (const auto& [factor, r] : factor_over(g.k, ep)) {
      BiPoly gl = g;
      std::vector<PuiseuxStep> cl = chain;
      NumberField::Elem w0;
      if (factor.degree() == 1) {
        w0 = g.k.neg(factor.coeff(0));
      } else {
        FieldExtension ext = extend(g.k, factor);
        gl = embed(g, ext);
        for (auto& s : cl) {
          s.alpha = ext.embed(s.alpha);
          s.beta = ext.embed(s.beta);
        }
        w0 = ext.root;
      }
      const NumberField& l = gl.k;
      // alpha = w0^a, beta = w0^b with q b - m a = 1, so beta^q / alpha^m = w0
      int a = 0;
      while ((e.m * a + 1) % e.q != 0)
        ++a;
      int b = (1 + e.m * a) / e.q;
      NumberField::Elem alpha = field_pow(l, w0, a);
      NumberField::Elem beta = field_pow(l, w0, b);
      int ell = e.q * e.i1 + e.m * e.j1;
      BiPoly g1 = transform(gl, alpha, beta, e.q, e.m, ell);
      cl.push_back({alpha, beta, e.q, e.m});
      int conj = conjugates * factor.degree();
      if (r == 1)
        emit_branch(l, cl, regular_root(g1, ctx.truncation), false, conj, ctx);
      else
        expand(std::move(g1), std::move(cl), conj, ctx);
    }
  }
}

}  // namespace detail

/// Default truncation order for a plane curve of the given total degree.
inline int default_puiseux_truncation(int degree) { return 3 * degree + 8; }

/// All branches at the origin of f(x, y) = 0 (x = first variable). Repeated
/// factors are expanded once and reported through `multiplicity`; the branch
/// x = 0 is reported as the swapped branch (0, t).
inline std::vector<PuiseuxBranch> branch_decompose(const Polynomial& f, int truncation)
{
  if (f.nvars() != 2)
    throw std::invalid_argument("branch decomposition needs a polynomial in two variables");
  if (f.is_zero())
    throw std::invalid_argument("branch decomposition of the zero polynomial");
  std::vector<PuiseuxBranch> out;
  if (sgn(f.constant_term()) != 0)
    return out;
  RecPoly rec = to_rec(f);
  QPoly content = rec_content(rec);
  int x_power = content.order();
  if (x_power > 0) {
    NumberField q;
    PuiseuxBranch b;
    b.field = q;
    b.x = KPoly(q);
    b.y = KPoly::x(q);
    b.truncation = std::max(truncation, 2);
    b.y_exact = true;
    b.multiplicity = x_power;
    b.swapped = true;
    out.push_back(std::move(b));
  }
  RecPoly prim = rec_primitive(rec);
  for (const auto& [part, mult] : rec_squarefree(prim)) {
    detail::BiPoly g = detail::bipoly_from_rec(part);
    int n = truncation;
    if (!g.c.empty() && !g.c[0].is_zero())
      n = std::max(n, g.c[0].order() + 1);
    detail::BranchContext ctx{n, mult, &out};
    detail::expand(std::move(g), {}, 1, ctx);
  }
  // a truncated expansion that satisfies f identically is an exact parameterization
  for (auto& b : out) {
    if (b.y_exact)
      continue;
    AlgebraicCurveGerm c = b.curve();
    c.exact = true;
    c.truncation = std::max(c.max_degree(), 1) + 1;
    if (pullback_series(f, c, pullback_precision(f, c)).is_zero()) {
      b.y = c.components[1];
      b.y_exact = true;
    }
  }
  return out;
}

inline std::vector<PuiseuxBranch> branch_decompose(const Polynomial& f)
{
  return branch_decompose(f, default_puiseux_truncation(f.total_degree()));
}

/// v(g o b) / v(b); nullopt when g o b vanishes to the branch truncation.
inline std::optional<Rational> branch_ratio(const Polynomial& g, const PuiseuxBranch& b)
{
  if (g.nvars() != 2)
    throw std::invalid_argument("branch_ratio needs a polynomial in two variables");
  auto o = pullback_order(g, b.curve());
  if (!o)
    return std::nullopt;
  return make_rational(*o, b.order());
}

}  // namespace germ_contact

#endif
