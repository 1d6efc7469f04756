#ifndef GERM_CONTACT_NUMBER_FIELD_HPP
#define GERM_CONTACT_NUMBER_FIELD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "upoly.hpp"

namespace germ_contact {

/// Writes a rational polynomial in the variable `var`, highest degree first,
/// e.g. "a^2 - 1/2*a + 3".
inline std::string format_rational_poly(const QPoly& p, const std::string& var)
{
  if (p.is_zero())
    return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (sgn(c) == 0)
      continue;
    bool negative = sgn(c) < 0;
    Rational a = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

/// Q(a) for a root a of a monic irreducible rational polynomial. Q itself is
/// represented with minimal polynomial x (so a = 0). Elements are rational
/// polynomials in a reduced modulo the minimal polynomial. Fields built by
/// successive extensions are flattened to a single primitive element; the
/// minimal polynomials adjoined along the way are kept for reporting.
class NumberField {
public:
  using Elem = QPoly;

  NumberField() : data_(rationals_data()) {}

  static NumberField rationals() { return NumberField(); }

  /// Q(a) with a a root of `minpoly`, which must be irreducible over Q.
  static NumberField from_minpoly(const QPoly& minpoly)
  {
    if (!is_irreducible_rational(minpoly))
      throw std::invalid_argument("number field minimal polynomial must be irreducible: " +
                                  format_rational_poly(minpoly, "x"));
    auto d = std::make_shared<Data>();
    d->minpoly = minpoly.monic();
    d->tower.push_back(format_rational_poly(d->minpoly, "x"));
    return NumberField(std::move(d));
  }

  /// Trusted constructor: `minpoly` is already known to be irreducible.
  static NumberField with_tower(const QPoly& minpoly, std::vector<std::string> tower)
  {
    auto d = std::make_shared<Data>();
    d->minpoly = minpoly.monic();
    d->tower = std::move(tower);
    return NumberField(std::move(d));
  }

  int degree() const { return data_->minpoly.degree(); }
  bool is_rationals() const { return degree() == 1; }
  const QPoly& minpoly() const { return data_->minpoly; }
  const std::vector<std::string>& tower() const { return data_->tower; }

  Elem zero() const { return QPoly(RationalField{}); }
  Elem one() const { return QPoly::constant(RationalField{}, Rational(1)); }
  Elem from_rational(const Rational& r) const { return QPoly::constant(RationalField{}, r); }
  Elem from_int(long v) const { return from_rational(Rational(v)); }
  Elem generator() const { return QPoly::x(RationalField{}) % data_->minpoly; }
  Elem reduce(const QPoly& p) const { return p % data_->minpoly; }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_rational(const Elem& a) const { return a.degree() <= 0; }
  Rational to_rational(const Elem& a) const
  {
    if (!is_rational(a))
      throw std::domain_error("number field element is not rational");
    return a.coeff(0);
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const
  {
    if (a.degree() <= 0 || b.degree() <= 0)
      return a * b;
    return (a * b) % data_->minpoly;
  }
  Elem inv(const Elem& a) const
  {
    if (a.is_zero())
      throw std::domain_error("division by zero in number field");
    if (a.degree() == 0)
      return from_rational(1 / a.coeff(0));
    auto [g, s, t] = xgcd(a, data_->minpoly);
    if (g.degree() != 0)
      throw std::logic_error("non-invertible element: minimal polynomial not irreducible");
    return s % data_->minpoly;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const { return format_rational_poly(a, "a"); }

  friend bool operator==(const NumberField& x, const NumberField& y)
  {
    return x.data_ == y.data_ || x.data_->minpoly == y.data_->minpoly;
  }

private:
  struct Data {
    QPoly minpoly;
    std::vector<std::string> tower;
  };

  explicit NumberField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  static std::shared_ptr<const Data> rationals_data()
  {
    static const std::shared_ptr<const Data> q = [] {
      auto d = std::make_shared<Data>();
      d->minpoly = QPoly::x(RationalField{});
      return d;
    }();
    return q;
  }

  std::shared_ptr<const Data> data_;
};

using KPoly = UPoly<NumberField>;

/// L = K(alpha), with the image of K's generator and alpha expressed in L.
struct FieldExtension {
  NumberField field;
  NumberField::Elem old_generator;
  NumberField::Elem root;

  /// Image in L of an element of K.
  NumberField::Elem embed(const NumberField::Elem& a) const
  {
    NumberField::Elem r = field.zero();
    for (int i = a.degree(); i >= 0; --i)
      r = field.add(field.mul(r, old_generator), field.from_rational(a.coeff(i)));
    return r;
  }

  KPoly embed(const KPoly& p) const
  {
    std::vector<NumberField::Elem> c;
    for (const auto& x : p.coeffs())
      c.push_back(embed(x));
    return KPoly(field, std::move(c));
  }
};

namespace detail {

/// Res_y(m(y), P~(x0 - s*y, y)) for a rational x0, where P~ replaces the
/// generator of K by y in the coefficients of P.
inline Rational shifted_norm_at(const NumberField& k, const KPoly& p, const Rational& x0, const Rational& s)
{
  RationalField q;
  const QPoly& m = k.minpoly();
  QPoly lin(q, {x0, Rational(-s)});
  QPoly acc(q);
  QPoly power = QPoly::constant(q, 1);
  for (int i = 0; i <= p.degree(); ++i) {
    acc = acc + p.coeff(i) * power;
    power = (power * lin) % m;
  }
  acc = acc % m;
  return resultant(m, acc);
}

/// Norm N_s(x) = Res_y(m(y), P~(x - s*y, y)), a rational polynomial of
/// degree deg(m)*deg(P), by evaluation and interpolation.
inline QPoly shifted_norm(const NumberField& k, const KPoly& p, const Rational& s)
{
  RationalField q;
  int n = k.degree() * p.degree();
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= n; ++i) {
    xs.emplace_back(i);
    ys.push_back(shifted_norm_at(k, p, Rational(i), s));
  }
  return interpolate(q, xs, ys);
}

inline Rational shift_candidate(int i)
{
  // 0, 1, -1, 2, -2, ...
  if (i == 0)
    return 0;
  return (i % 2 == 1) ? Rational((i + 1) / 2) : Rational(-(i / 2));
}

inline KPoly lift_to_kpoly(const NumberField& k, const QPoly& p)
{
  std::vector<NumberField::Elem> c;
  for (const auto& x : p.coeffs())
    c.push_back(k.from_rational(x));
  return KPoly(k, std::move(c));
}

}  // namespace detail

/// Adjoin a root of p, irreducible over k, of degree >= 1.
inline FieldExtension extend(const NumberField& k, const KPoly& p)
{
  if (p.degree() < 1)
    throw std::invalid_argument("extension polynomial must have positive degree");
  KPoly pm = p.monic();
  if (pm.degree() == 1) {
    return FieldExtension{k, k.generator(), k.neg(pm.coeff(0))};
  }
  RationalField q;
  if (k.is_rationals()) {
    std::vector<Rational> c;
    for (const auto& x : pm.coeffs())
      c.push_back(k.to_rational(x));
    QPoly mp(q, std::move(c));
    NumberField l = NumberField::from_minpoly(mp);
    return FieldExtension{l, l.zero(), l.generator()};
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational s = detail::shift_candidate(attempt);
    QPoly norm = detail::shifted_norm(k, pm, s);
    if (gcd(norm, norm.derivative()).degree() != 0)
      continue;
    // a square-free norm of an irreducible polynomial is irreducible, and
    // gamma = alpha + s*theta is then a primitive element of K(alpha)
    std::vector<std::string> tower = k.tower();
    tower.push_back(format_rational_poly(norm.monic(), "x"));
    NumberField l = NumberField::with_tower(norm, std::move(tower));
    NumberField::Elem gamma = l.generator();

    // theta is the unique common root of m(Y) and P~(gamma - s*Y, Y)
    KPoly mY = detail::lift_to_kpoly(l, k.minpoly());
    KPoly lin(l, {gamma, l.from_rational(-s)});
    KPoly acc(l);
    KPoly power = KPoly::constant(l, l.one());
    for (int i = 0; i <= pm.degree(); ++i) {
      KPoly ci = detail::lift_to_kpoly(l, pm.coeff(i));
      acc = acc + ci * power;
      power = power * lin;
    }
    KPoly g = gcd(mY, acc);
    if (g.degree() != 1)
      throw std::logic_error("primitive element construction failed");
    NumberField::Elem theta = l.neg(g.coeff(0));
    NumberField::Elem alpha = l.sub(gamma, l.mul(l.from_rational(s), theta));
    return FieldExtension{l, theta, alpha};
  }
  throw std::runtime_error("no suitable shift found for primitive element");
}

/// Monic irreducible factors over k of a square-free polynomial (Trager).
inline std::vector<KPoly> factor_squarefree_over(const NumberField& k, const KPoly& f)
{
  if (f.degree() <= 0)
    return {};
  if (f.degree() == 1)
    return {f.monic()};
  RationalField q;
  if (k.is_rationals()) {
    std::vector<Rational> c;
    for (const auto& x : f.coeffs())
      c.push_back(k.to_rational(x));
    std::vector<KPoly> out;
    for (const auto& g : factor_squarefree_rational(QPoly(q, std::move(c))))
      out.push_back(detail::lift_to_kpoly(k, g));
    return out;
  }
  KPoly fm = f.monic();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational s = detail::shift_candidate(attempt);
    QPoly norm = detail::shifted_norm(k, fm, s);
    if (gcd(norm, norm.derivative()).degree() != 0)
      continue;
    auto pieces = factor_squarefree_rational(norm);
    if (pieces.size() == 1)
      return {fm};
    std::vector<KPoly> out;
    KPoly rest = fm;
    // N_i(x + s*theta) as a polynomial over k
    KPoly shift(k, {k.mul(k.from_rational(s), k.generator()), k.one()});
    for (const auto& piece : pieces) {
      KPoly composed(k);
      for (int i = piece.degree(); i >= 0; --i)
        composed = composed * shift + KPoly::constant(k, k.from_rational(piece.coeff(i)));
      KPoly g = gcd(rest, composed);
      if (g.degree() > 0) {
        out.push_back(g);
        rest = rest / g;
      }
    }
    if (rest.degree() > 0)
      throw std::logic_error("factorization over number field lost a factor");
    return out;
  }
  throw std::runtime_error("no suitable shift found for norm factorization");
}

/// Monic irreducible factors with multiplicities.
inline std::vector<std::pair<KPoly, int>> factor_over(const NumberField& k, const KPoly& f)
{
  std::vector<std::pair<KPoly, int>> out;
  for (const auto& [s, mult] : squarefree_decomposition(f))
    for (const auto& g : factor_squarefree_over(k, s))
      out.emplace_back(g, mult);
  return out;
}

}  // namespace germ_contact

#endif
