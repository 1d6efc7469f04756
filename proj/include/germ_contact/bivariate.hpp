#ifndef GERM_CONTACT_BIVARIATE_HPP
#define GERM_CONTACT_BIVARIATE_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "upoly.hpp"

// Polynomials in Q[x][y], stored as coefficients of y^j in Q[x]. Enough
// machinery (primitive gcd, exact division, Yun) to split a plane curve into
// its square-free parts before Puiseux expansion.

namespace germ_contact {

using RecPoly = std::vector<QPoly>;

namespace detail {

inline void trim(RecPoly& a)
{
  while (!a.empty() && a.back().is_zero())
    a.pop_back();
}

inline int ydeg(const RecPoly& a) { return static_cast<int>(a.size()) - 1; }

inline RecPoly sub(const RecPoly& a, const RecPoly& b)
{
  RecPoly c(std::max(a.size(), b.size()), QPoly(RationalField{}));
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] = c[i] - b[i];
  trim(c);
  return c;
}

inline RecPoly scale(const RecPoly& a, const QPoly& s)
{
  RecPoly c;
  for (const auto& x : a)
    c.push_back(x * s);
  trim(c);
  return c;
}

inline RecPoly shift_y(const RecPoly& a, int k)
{
  RecPoly c(static_cast<std::size_t>(k), QPoly(RationalField{}));
  c.insert(c.end(), a.begin(), a.end());
  return c;
}

}  // namespace detail

/// x = variable 0, y = variable 1.
inline RecPoly to_rec(const Polynomial& f)
{
  if (f.nvars() != 2)
    throw std::invalid_argument("plane curve polynomial must have two variables");
  RecPoly out(static_cast<std::size_t>(std::max(0, f.degree_in(1) + 1)), QPoly(RationalField{}));
  std::vector<std::vector<Rational>> c(out.size());
  for (const auto& [e, coef] : f.terms()) {
    auto& v = c[static_cast<std::size_t>(e[1])];
    if (v.size() <= static_cast<std::size_t>(e[0]))
      v.resize(static_cast<std::size_t>(e[0]) + 1, Rational(0));
    v[static_cast<std::size_t>(e[0])] = coef;
  }
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = QPoly(RationalField{}, c[j]);
  detail::trim(out);
  return out;
}

inline Polynomial from_rec(const RecPoly& a)
{
  Polynomial p(2);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (int i = 0; i <= a[j].degree(); ++i)
      if (sgn(a[j].coeff(i)) != 0)
        p.add_term({i, static_cast<int>(j)}, a[j].coeff(i));
  return p;
}

/// Monic gcd in Q[x] of the y-coefficients.
inline QPoly rec_content(const RecPoly& a)
{
  QPoly g(RationalField{});
  for (const auto& c : a)
    g = gcd(g, c);
  return g;
}

inline RecPoly rec_primitive(const RecPoly& a)
{
  if (a.empty())
    return a;
  QPoly c = rec_content(a);
  RecPoly out;
  for (const auto& x : a)
    out.push_back(x / c);
  return out;
}

inline RecPoly rec_derivative_y(const RecPoly& a)
{
  RecPoly out;
  for (std::size_t j = 1; j < a.size(); ++j)
    out.push_back(a[j].scaled(Rational(static_cast<long>(j))));
  detail::trim(out);
  return out;
}

/// Exact quotient a / b in Q[x][y], nullopt if b does not divide a.
inline std::optional<RecPoly> rec_divide(RecPoly a, const RecPoly& b)
{
  if (b.empty())
    throw std::domain_error("division by zero bivariate polynomial");
  int db = detail::ydeg(b);
  RecPoly q(static_cast<std::size_t>(std::max(0, detail::ydeg(a) - db + 1)), QPoly(RationalField{}));
  while (!a.empty() && detail::ydeg(a) >= db) {
    auto [qc, rem] = divmod(a.back(), b.back());
    if (!rem.is_zero())
      return std::nullopt;
    int k = detail::ydeg(a) - db;
    q[static_cast<std::size_t>(k)] = qc;
    a = detail::sub(a, detail::shift_y(detail::scale(b, qc), k));
  }
  if (!a.empty())
    return std::nullopt;
  detail::trim(q);
  return q;
}

/// gcd in Q[x][y], normalized to have monic content-free part times the
/// monic gcd of contents.
inline RecPoly rec_gcd(const RecPoly& a, const RecPoly& b)
{
  if (a.empty())
    return rec_primitive(b);
  if (b.empty())
    return rec_primitive(a);
  QPoly c = gcd(rec_content(a), rec_content(b));
  RecPoly p = rec_primitive(a), r = rec_primitive(b);
  if (detail::ydeg(p) < detail::ydeg(r))
    std::swap(p, r);
  while (!r.empty() && detail::ydeg(r) > 0) {
    // pseudo-remainder of p by r
    RecPoly rem = p;
    while (!rem.empty() && detail::ydeg(rem) >= detail::ydeg(r)) {
      int k = detail::ydeg(rem) - detail::ydeg(r);
      rem = detail::sub(detail::scale(rem, r.back()), detail::shift_y(detail::scale(r, rem.back()), k));
    }
    p = std::move(r);
    r = rec_primitive(rem);
  }
  RecPoly g;
  if (r.empty())
    g = rec_primitive(p);
  else
    g = RecPoly{QPoly::constant(RationalField{}, 1)};  // r is a nonzero element of Q[x]: coprime parts
  RecPoly out = detail::scale(g, c);
  // normalize the leading coefficient's leading coefficient to 1
  Rational lc = out.back().lead();
  for (auto& x : out)
    x = x.scaled(1 / lc);
  return out;
}

/// Square-free decomposition (Yun) of a polynomial primitive in y over Q[x]:
/// pairs (s_i, i) with a = unit * prod s_i^i.
inline std::vector<std::pair<RecPoly, int>> rec_squarefree(const RecPoly& a)
{
  std::vector<std::pair<RecPoly, int>> out;
  if (detail::ydeg(a) <= 0)
    return out;
  auto exact = [](const RecPoly& p, const RecPoly& q) {
    auto r = rec_divide(p, q);
    if (!r)
      throw std::logic_error("inexact division in square-free decomposition");
    return *r;
  };
  RecPoly da = rec_derivative_y(a);
  RecPoly g = rec_gcd(a, da);
  RecPoly b = exact(a, g);
  RecPoly c = exact(da, g);
  RecPoly d = detail::sub(c, rec_derivative_y(b));
  int i = 1;
  while (detail::ydeg(b) > 0) {
    RecPoly s = rec_gcd(b, d);
    b = exact(b, s);
    c = exact(d, s);
    d = detail::sub(c, rec_derivative_y(b));
    if (detail::ydeg(s) > 0)
      out.emplace_back(s, i);
    ++i;
  }
  return out;
}

}  // namespace germ_contact

#endif
