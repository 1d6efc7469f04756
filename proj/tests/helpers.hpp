#ifndef GERM_CONTACT_TESTS_HELPERS_HPP
#define GERM_CONTACT_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include <germ_contact/germ_contact.hpp>

namespace testing_helpers {

using namespace germ_contact;

inline Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

inline Polynomial poly(int n, const std::string& text)
{
  return parse_ideal("ring z1..z" + std::to_string(n) + "; ideal = " + text + ";")[0];
}

inline IdealPresentation ideal(int n, const std::string& gens)
{
  return parse_ideal("ring z1..z" + std::to_string(n) + "; ideal = " + gens + ";");
}

// Random polynomial without constant term, small integer coefficients.
inline Polynomial random_poly(int n, int max_degree, int terms, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_degree);
  Polynomial p(n);
  for (int k = 0; k < terms; ++k) {
    Exponent e(static_cast<std::size_t>(n), 0);
    int total = 0;
    for (int v = 0; v < n; ++v) {
      e[static_cast<std::size_t>(v)] = deg(rng) / n;
      total += e[static_cast<std::size_t>(v)];
    }
    if (total == 0)
      e[static_cast<std::size_t>(k % n)] = 1;
    int c = coef(rng);
    if (c != 0)
      p = p + Polynomial::monomial(n, e, Rational(c));
  }
  return p;
}

inline CurveGerm random_curve(int n, int max_degree, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> coef(-3, 3);
  while (true) {
    std::vector<std::vector<Rational>> comps(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (auto& c : comps) {
      c.assign(static_cast<std::size_t>(max_degree) + 1, Rational(0));
      for (int k = 1; k <= max_degree; ++k) {
        c[static_cast<std::size_t>(k)] = coef(rng);
        nonzero = nonzero || c[static_cast<std::size_t>(k)] != 0;
      }
    }
    if (nonzero)
      return polynomial_curve(comps);
  }
}

inline RationalMatrix random_invertible(int n, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> coef(-3, 3);
  while (true) {
    RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& x : row)
        x = coef(rng);
    if (determinant(m) != 0)
      return m;
  }
}

}  // namespace testing_helpers

#endif
