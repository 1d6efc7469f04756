#ifndef GERM_CONTACT_POLYNOMIAL_HPP
#define GERM_CONTACT_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace germ_contact {

/// Dense exponent vector, one entry per variable.
using Exponent = std::vector<int>;

inline std::vector<std::string> default_variable_names(int n, const std::string& prefix = "z")
{
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    names.push_back(prefix + std::to_string(i));
  return names;
}

class LinearForm;

/// Multivariate polynomial over Q in a fixed number of variables. Terms are
/// kept in a map keyed by exponent vector; zero coefficients are never stored.
class Polynomial {
public:
  explicit Polynomial(int nvars = 1) : n_(nvars)
  {
    if (nvars < 0)
      throw std::invalid_argument("negative variable count");
  }

  static Polynomial constant(int n, const Rational& c)
  {
    Polynomial p(n);
    p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return p;
  }

  static Polynomial variable(int n, int index)
  {
    if (index < 0 || index >= n)
      throw std::out_of_range("variable index out of range");
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(n, std::move(e), Rational(1));
  }

  static Polynomial monomial(int n, Exponent e, const Rational& c)
  {
    if (static_cast<int>(e.size()) != n)
      throw std::invalid_argument("exponent length does not match variable count");
    for (int a : e)
      if (a < 0)
        throw std::invalid_argument("negative exponent");
    Polynomial p(n);
    p.add_term(std::move(e), c);
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const
  {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, degree_of(e));
    return d;
  }

  /// Minimal total degree of a term; nullopt for the zero polynomial.
  std::optional<int> lowest_order() const
  {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int k = degree_of(e);
      if (!d || k < *d)
        d = k;
    }
    return d;
  }

  Rational coefficient(const Exponent& e) const
  {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponent(static_cast<std::size_t>(n_), 0)); }

  Polynomial homogeneous_part(int d) const
  {
    Polynomial p(n_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == d)
        p.terms_.emplace(e, c);
    return p;
  }

  LinearForm linear_part() const;

  int degree_in(int var) const
  {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
  }

  bool involves(int var) const
  {
    for (const auto& [e, c] : terms_)
      if (e[static_cast<std::size_t>(var)] > 0)
        return true;
    return false;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial derivative(int var) const
  {
    Polynomial p(n_);
    for (const auto& [e, c] : terms_) {
      int a = e[static_cast<std::size_t>(var)];
      if (a == 0)
        continue;
      Exponent f = e;
      f[static_cast<std::size_t>(var)] = a - 1;
      p.add_term(std::move(f), Rational(c * a));
    }
    return p;
  }

  Rational evaluate(std::span<const Rational> point) const
  {
    if (static_cast<int>(point.size()) != n_)
      throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (int i = 0; i < n_; ++i)
        if (e[static_cast<std::size_t>(i)] > 0)
          term *= rational_pow(point[static_cast<std::size_t>(i)], static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
      sum += term;
    }
    return sum;
  }

  Polynomial pow(unsigned k) const
  {
    Polynomial result = constant(n_, Rational(1));
    Polynomial base = *this;
    while (k) {
      if (k & 1)
        result = result * base;
      k >>= 1;
      if (k)
        base = base * base;
    }
    return result;
  }

  void add_term(Exponent e, const Rational& c)
  {
    if (static_cast<int>(e.size()) != n_)
      throw std::invalid_argument("exponent length does not match variable count");
    if (sgn(c) == 0)
      return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0)
        terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
  {
    check_same_arity(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_)
      r.add_term(e, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
  {
    check_same_arity(a, b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_)
      r.add_term(e, Rational(-c));
    return r;
  }

  friend Polynomial operator-(const Polynomial& a)
  {
    Polynomial r(a.n_);
    for (const auto& [e, c] : a.terms_)
      r.terms_.emplace(e, Rational(-c));
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    check_same_arity(a, b);
    Polynomial r(a.n_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ea[i] + eb[i];
        r.add_term(e, Rational(ca * cb));
      }
    return r;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a)
  {
    Polynomial r(a.n_);
    if (sgn(s) == 0)
      return r;
    for (const auto& [e, c] : a.terms_)
      r.terms_.emplace(e, Rational(s * c));
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b)
  {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Terms in descending total degree, ties broken lexicographically
  /// (z1 before z2). The output re-parses with the ideal grammar.
  std::string to_string(const std::vector<std::string>& names) const
  {
    if (static_cast<int>(names.size()) < n_)
      throw std::invalid_argument("not enough variable names");
    if (terms_.empty())
      return "0";
    std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      int dx = degree_of(x.first), dy = degree_of(y.first);
      if (dx != dy)
        return dx > dy;
      return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
      Rational mag = abs(c);
      if (first)
        out += sgn(c) < 0 ? "-" : "";
      else
        out += sgn(c) < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        int a = e[static_cast<std::size_t>(i)];
        if (a == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += names[static_cast<std::size_t>(i)];
        if (a > 1)
          mono += "^" + std::to_string(a);
      }
      if (mono.empty())
        out += mag.get_str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.get_str() + "*" + mono;
    }
    return out;
  }

  std::string to_string() const { return to_string(default_variable_names(n_)); }

  static int degree_of(const Exponent& e)
  {
    int d = 0;
    for (int a : e)
      d += a;
    return d;
  }

private:
  static void check_same_arity(const Polynomial& a, const Polynomial& b)
  {
    if (a.n_ != b.n_)
      throw std::invalid_argument("polynomials in different numbers of variables");
  }

  int n_;
  std::map<Exponent, Rational> terms_;
};

/// Linear function sum c_i z_i (no constant term).
class LinearForm {
public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

  static LinearForm coordinate(int n, int index)
  {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    c.at(static_cast<std::size_t>(index)) = 1;
    return LinearForm(std::move(c));
  }

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const
  {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
  }

  // Index of the single nonzero coefficient when this is a multiple of a coordinate.
  std::optional<int> coordinate_index() const
  {
    std::optional<int> idx;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) {
        if (idx)
          return std::nullopt;
        idx = static_cast<int>(i);
      }
    return idx;
  }

  Polynomial to_polynomial() const
  {
    int n = nvars();
    Polynomial p(n);
    for (int i = 0; i < n; ++i)
      p.add_term([&] {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return e;
      }(), coeffs_[static_cast<std::size_t>(i)]);
    return p;
  }

  std::string to_string(const std::vector<std::string>& names) const { return to_polynomial().to_string(names); }
  std::string to_string() const { return to_polynomial().to_string(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  friend bool operator<(const LinearForm& a, const LinearForm& b)
  {
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                                        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
  }

private:
  std::vector<Rational> coeffs_;
};

inline LinearForm Polynomial::linear_part() const
{
  std::vector<Rational> c(static_cast<std::size_t>(n_), Rational(0));
  for (const auto& [e, coef] : terms_)
    if (degree_of(e) == 1)
      for (int i = 0; i < n_; ++i)
        if (e[static_cast<std::size_t>(i)] == 1)
          c[static_cast<std::size_t>(i)] = coef;
  return LinearForm(std::move(c));
}

/// Lowest total degree of p; nullopt stands for an infinite order (p == 0).
inline std::optional<int> lowest_order(const Polynomial& p) { return p.lowest_order(); }

/// Ring homomorphism z_i -> images[i]. All images share one variable count,
/// which becomes the variable count of the result.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images)
{
  if (static_cast<int>(images.size()) != p.nvars())
    throw std::invalid_argument("substitution map arity does not match polynomial");
  if (images.empty())
    return p;
  int m = images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != m)
      throw std::invalid_argument("substitution images use different variable sets");

  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(Polynomial::constant(m, Rational(1)));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  Polynomial result(m);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0)
        term = term * power(i, e[i]);
    result = result + term;
  }
  return result;
}

/// Finite generator list of an ideal in O_n, every generator vanishing at 0.
class IdealPresentation {
public:
  IdealPresentation(int n, std::vector<Polynomial> generators) : n_(n), gens_(std::move(generators))
  {
    if (n < 1)
      throw std::invalid_argument("ideal needs at least one variable");
    if (gens_.empty())
      throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : gens_) {
      if (g.nvars() != n)
        throw std::invalid_argument("generator variable count does not match ideal");
      if (sgn(g.constant_term()) != 0)
        throw std::invalid_argument("generator has nonzero constant term: " + g.to_string());
    }
  }

  int nvars() const { return n_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const Polynomial& operator[](std::size_t i) const { return gens_[i]; }
  std::size_t size() const { return gens_.size(); }

  std::vector<std::string> generator_strings() const
  {
    std::vector<std::string> out;
    for (const auto& g : gens_)
      out.push_back(g.to_string());
    return out;
  }

  std::string to_string() const
  {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i)
        out += ", ";
      out += gens_[i].to_string();
    }
    return out + ")";
  }

  friend bool operator==(const IdealPresentation&, const IdealPresentation&) = default;

private:
  int n_;
  std::vector<Polynomial> gens_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix identity_matrix(int n)
{
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

/// Row echelon form in place; returns the rank and the determinant factor
/// (product of pivots times sign of row swaps).
inline std::pair<int, Rational> row_reduce(RationalMatrix& a)
{
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  Rational det = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
      det = -det;
    }
    auto& prow = a[static_cast<std::size_t>(rank)];
    Rational pv = prow[static_cast<std::size_t>(c)];
    det *= pv;
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      if (sgn(row[static_cast<std::size_t>(c)]) == 0)
        continue;
      Rational f = row[static_cast<std::size_t>(c)] / pv;
      for (int k = c; k < cols; ++k)
        row[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
    }
    ++rank;
  }
  if (rank < rows || rows != cols)
    det = 0;
  return {rank, det};
}

inline int matrix_rank(RationalMatrix a) { return row_reduce(a).first; }

inline Rational determinant(RationalMatrix a)
{
  if (!a.empty() && a.size() != a[0].size())
    throw std::invalid_argument("determinant of a non-square matrix");
  return row_reduce(a).second;
}

inline RationalMatrix inverse(const RationalMatrix& m)
{
  std::size_t n = m.size();
  RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw std::invalid_argument("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (sgn(aug[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv == n)
      throw std::domain_error("singular matrix");
    std::swap(aug[piv], aug[c]);
    Rational pv = aug[c][c];
    for (auto& x : aug[c])
      x /= pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(aug[r][c]) == 0)
        continue;
      Rational f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k)
        aug[r][k] -= f * aug[c][k];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = aug[i][n + j];
  return inv;
}

/// Generators composed with the linear map z -> M z.
inline IdealPresentation change_coordinates(const IdealPresentation& ideal, const RationalMatrix& m)
{
  int n = ideal.nvars();
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("coordinate change matrix has wrong size");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("coordinate change matrix has wrong size");
  if (sgn(determinant(m)) == 0)
    throw std::domain_error("coordinate change matrix is singular");
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i)
    images.push_back(LinearForm(m[static_cast<std::size_t>(i)]).to_polynomial());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(substitute(g, images));
  return IdealPresentation(n, std::move(gens));
}

/// (I, w_1, ..., w_k): generator list extended by the given linear forms.
inline IdealPresentation adjoin(const IdealPresentation& ideal, const std::vector<LinearForm>& forms)
{
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& w : forms) {
    if (w.nvars() != ideal.nvars())
      throw std::invalid_argument("linear form has wrong number of variables");
    if (w.is_zero())
      throw std::invalid_argument("cannot adjoin the zero linear form");
    gens.push_back(w.to_polynomial());
  }
  return IdealPresentation(ideal.nvars(), std::move(gens));
}

/// Rank of the linear parts of the generators.
inline int linear_rank(const IdealPresentation& ideal)
{
  RationalMatrix rows;
  for (const auto& g : ideal.generators()) {
    LinearForm l = g.linear_part();
    if (!l.is_zero())
      rows.push_back(l.coefficients());
  }
  return rows.empty() ? 0 : matrix_rank(rows);
}

}  // namespace germ_contact

#endif
