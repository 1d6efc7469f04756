#ifndef GERM_CONTACT_UPOLY_HPP
#define GERM_CONTACT_UPOLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace germ_contact {

/// Dense univariate polynomial over a field object. Coefficients are stored
/// low degree first and trimmed, so the zero polynomial has no coefficients.
/// Also used for truncated power series in t (see mul_trunc / inverse_series).
template <class Field>
class UPoly {
public:
  using Elem = typename Field::Elem;

  UPoly() = default;
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

  static UPoly constant(const Field& f, const Elem& c) { return UPoly(f, {c}); }
  static UPoly monomial(const Field& f, const Elem& c, int k)
  {
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1, f.zero());
    v[static_cast<std::size_t>(k)] = c;
    return UPoly(f, std::move(v));
  }
  static UPoly x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Elem& lead() const
  {
    if (coeffs_.empty())
      throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  Elem coeff(int i) const
  {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
      return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }

  // Lowest exponent with a nonzero coefficient, -1 for zero.
  int order() const
  {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!field_.is_zero(coeffs_[i]))
        return static_cast<int>(i);
    return -1;
  }

  UPoly truncated(int n) const
  {
    if (n >= static_cast<int>(coeffs_.size()))
      return *this;
    std::vector<Elem> c(coeffs_.begin(), coeffs_.begin() + std::max(n, 0));
    return UPoly(field_, std::move(c));
  }

  UPoly shifted(int k) const
  {
    if (is_zero() || k == 0)
      return *this;
    std::vector<Elem> c(static_cast<std::size_t>(k), field_.zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return UPoly(field_, std::move(c));
  }

  UPoly scaled(const Elem& s) const
  {
    std::vector<Elem> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
      c.push_back(field_.mul(a, s));
    return UPoly(field_, std::move(c));
  }

  UPoly monic() const
  {
    if (is_zero())
      return *this;
    return scaled(field_.inv(lead()));
  }

  UPoly derivative() const
  {
    std::vector<Elem> c;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      c.push_back(field_.mul(coeffs_[i], field_.from_int(static_cast<long>(i))));
    return UPoly(field_, std::move(c));
  }

  Elem eval(const Elem& x) const
  {
    Elem r = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      r = field_.add(field_.mul(r, x), *it);
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b)
  {
    const Field& f = a.is_zero() ? b.field_ : a.field_;
    std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      c[i] = f.add(c[i], b.coeffs_[i]);
    return UPoly(f, std::move(c));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b)
  {
    const Field& f = a.is_zero() ? b.field_ : a.field_;
    std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      c[i] = f.sub(c[i], b.coeffs_[i]);
    return UPoly(f, std::move(c));
  }

  friend UPoly operator-(const UPoly& a)
  {
    std::vector<Elem> c;
    for (const auto& x : a.coeffs_)
      c.push_back(a.field_.neg(x));
    return UPoly(a.field_, std::move(c));
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b)
  {
    if (a.is_zero() || b.is_zero())
      return UPoly(a.field_);
    const Field& f = a.field_;
    std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i]))
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return UPoly(f, std::move(c));
  }

  friend bool operator==(const UPoly& a, const UPoly& b)
  {
    if (a.coeffs_.size() != b.coeffs_.size())
      return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!a.field_.equal(a.coeffs_[i], b.coeffs_[i]))
        return false;
    return true;
  }

  std::string to_string(const std::string& var = "x") const
  {
    if (is_zero())
      return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Elem& c = coeffs_[static_cast<std::size_t>(i)];
      if (field_.is_zero(c))
        continue;
      if (!out.empty())
        out += " + ";
      std::string cs = field_.to_string(c);
      if (i == 0)
        out += cs;
      else {
        if (!field_.equal(c, field_.one()))
          out += "(" + cs + ")*";
        out += var;
        if (i > 1)
          out += "^" + std::to_string(i);
      }
    }
    return out;
  }

private:
  void trim()
  {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  Field field_{};
  std::vector<Elem> coeffs_;
};

using QPoly = UPoly<RationalField>;

template <class Field>
std::pair<UPoly<Field>, UPoly<Field>> divmod(const UPoly<Field>& a, const UPoly<Field>& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  using Elem = typename Field::Elem;
  if (a.degree() < b.degree())
    return {UPoly<Field>(f), a};
  std::vector<Elem> r = a.coeffs();
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
  Elem lead_inv = f.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Elem c = r[static_cast<std::size_t>(i)];
    if (f.is_zero(c))
      continue;
    c = f.mul(c, lead_inv);
    int shift = i - b.degree();
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[static_cast<std::size_t>(shift) + j] = f.sub(r[static_cast<std::size_t>(shift) + j], f.mul(c, bc[j]));
  }
  return {UPoly<Field>(f, std::move(q)), UPoly<Field>(f, std::move(r))};
}

template <class Field>
UPoly<Field> operator%(const UPoly<Field>& a, const UPoly<Field>& b)
{
  return divmod(a, b).second;
}

template <class Field>
UPoly<Field> operator/(const UPoly<Field>& a, const UPoly<Field>& b)
{
  return divmod(a, b).first;
}

/// Monic gcd (zero if both are zero).
template <class Field>
UPoly<Field> gcd(UPoly<Field> a, UPoly<Field> b)
{
  while (!b.is_zero()) {
    UPoly<Field> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class Field>
std::tuple<UPoly<Field>, UPoly<Field>, UPoly<Field>> xgcd(const UPoly<Field>& a, const UPoly<Field>& b)
{
  const Field& f = a.field();
  UPoly<Field> r0 = a, r1 = b;
  UPoly<Field> s0 = UPoly<Field>::constant(f, f.one()), s1(f);
  UPoly<Field> t0(f), t1 = UPoly<Field>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<Field> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<Field> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero())
    return {r0, s0, t0};
  auto li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

template <class Field>
UPoly<Field> mul_trunc(const UPoly<Field>& a, const UPoly<Field>& b, int n)
{
  const Field& f = a.field();
  using Elem = typename Field::Elem;
  if (a.is_zero() || b.is_zero() || n <= 0)
    return UPoly<Field>(f);
  std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(n), a.coeffs().size() + b.coeffs().size() - 1);
  std::vector<Elem> c(len, f.zero());
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
    if (f.is_zero(ac[i]))
      continue;
    for (std::size_t j = 0; j < bc.size() && i + j < len; ++j)
      c[i + j] = f.add(c[i + j], f.mul(ac[i], bc[j]));
  }
  return UPoly<Field>(f, std::move(c));
}

template <class Field>
UPoly<Field> pow_trunc(const UPoly<Field>& a, unsigned e, int n)
{
  const Field& f = a.field();
  UPoly<Field> r = UPoly<Field>::constant(f, f.one()).truncated(n);
  UPoly<Field> b = a.truncated(n);
  while (e) {
    if (e & 1)
      r = mul_trunc(r, b, n);
    e >>= 1;
    if (e)
      b = mul_trunc(b, b, n);
  }
  return r;
}

/// Power series inverse of a (a(0) != 0) modulo t^n, by Newton iteration.
template <class Field>
UPoly<Field> inverse_series(const UPoly<Field>& a, int n)
{
  const Field& f = a.field();
  if (f.is_zero(a.coeff(0)))
    throw std::domain_error("series with zero constant term is not invertible");
  UPoly<Field> inv = UPoly<Field>::constant(f, f.inv(a.coeff(0)));
  UPoly<Field> two = UPoly<Field>::constant(f, f.from_int(2));
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    UPoly<Field> e = mul_trunc(a.truncated(prec), inv, prec);
    inv = mul_trunc(inv, two - e, prec);
  }
  return inv.truncated(n);
}

template <class Field>
UPoly<Field> pow(const UPoly<Field>& a, unsigned e)
{
  const Field& f = a.field();
  UPoly<Field> r = UPoly<Field>::constant(f, f.one());
  UPoly<Field> b = a;
  while (e) {
    if (e & 1)
      r = r * b;
    e >>= 1;
    if (e)
      b = b * b;
  }
  return r;
}

template <class Field>
UPoly<Field> powmod(UPoly<Field> base, Integer e, const UPoly<Field>& m)
{
  const Field& f = base.field();
  UPoly<Field> r = UPoly<Field>::constant(f, f.one()) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      r = (r * base) % m;
    e >>= 1;
    if (e > 0)
      base = (base * base) % m;
  }
  return r;
}

/// Resultant over a field, by the Euclidean recurrence
/// Res(A,B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R), R = A mod B.
template <class Field>
typename Field::Elem resultant(UPoly<Field> a, UPoly<Field> b)
{
  const Field& f = a.field();
  using Elem = typename Field::Elem;
  if (a.is_zero() || b.is_zero())
    return f.zero();
  Elem acc = f.one();
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      Elem r = f.one();
      for (int i = 0; i < da; ++i)
        r = f.mul(r, b.lead());
      return f.mul(acc, r);
    }
    if (da == 0) {
      Elem r = f.one();
      for (int i = 0; i < db; ++i)
        r = f.mul(r, a.lead());
      return f.mul(acc, r);
    }
    UPoly<Field> r = a % b;
    if (r.is_zero())
      return f.zero();
    if ((da % 2 == 1) && (db % 2 == 1))
      acc = f.neg(acc);
    Elem lb = b.lead();
    for (int i = 0; i < da - r.degree(); ++i)
      acc = f.mul(acc, lb);
    a = std::move(b);
    b = std::move(r);
  }
}

/// Yun's square-free decomposition (characteristic zero): returns pairs
/// (s_i, i) with a = lc * prod s_i^i, each s_i monic, square-free, pairwise coprime.
template <class Field>
std::vector<std::pair<UPoly<Field>, int>> squarefree_decomposition(const UPoly<Field>& a)
{
  std::vector<std::pair<UPoly<Field>, int>> out;
  if (a.degree() <= 0)
    return out;
  UPoly<Field> p = a.monic();
  UPoly<Field> dp = p.derivative();
  UPoly<Field> g = gcd(p, dp);
  UPoly<Field> b = p / g;
  UPoly<Field> c = dp / g;
  UPoly<Field> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<Field> s = gcd(b, d);
    b = b / s;
    c = d / s;
    d = c - b.derivative();
    if (s.degree() > 0)
      out.emplace_back(s.monic(), i);
    ++i;
  }
  return out;
}

template <class Field>
UPoly<Field> squarefree_part(const UPoly<Field>& a)
{
  if (a.degree() <= 0)
    return a;
  return (a / gcd(a, a.derivative())).monic();
}

/// Newton interpolation over a field through (xs[i], ys[i]), distinct xs.
template <class Field>
UPoly<Field> interpolate(const Field& f, const std::vector<typename Field::Elem>& xs,
                         const std::vector<typename Field::Elem>& ys)
{
  using Elem = typename Field::Elem;
  std::size_t n = xs.size();
  std::vector<Elem> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = f.div(f.sub(dd[i], dd[i - 1]), f.sub(xs[i], xs[i - j]));
      if (i == j)
        break;
    }
  UPoly<Field> result(f);
  for (std::size_t k = n; k-- > 0;) {
    result = result * UPoly<Field>(f, {f.neg(xs[k]), f.one()}) + UPoly<Field>::constant(f, dd[k]);
  }
  return result;
}

}  // namespace germ_contact

#endif
