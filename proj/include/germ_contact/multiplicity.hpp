#ifndef GERM_CONTACT_MULTIPLICITY_HPP
#define GERM_CONTACT_MULTIPLICITY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace germ_contact {

struct MultiplicityResult {
  std::optional<long> value;   // nullopt: NOT_FINITE
  int stabilization_degree = 0;
  bool proven_infinite = false;  // a coordinate axis lies in the zero set
  std::string diagnostic;

  bool finite() const { return value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "NOT_FINITE"; }
};

namespace detail {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

inline void enumerate_monomials(int n, int max_degree, std::vector<Exponent>& out)
{
  // graded order: degree 0, 1, ..., max_degree; within a degree, lexicographic descending
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int d = 0; d <= max_degree; ++d) {
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == n - 1) {
        e[static_cast<std::size_t>(var)] = left;
        out.push_back(e);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[static_cast<std::size_t>(var)] = a;
        rec(var + 1, left - a);
      }
    };
    if (n == 0)
      return;
    rec(0, d);
  }
}

class Echelon {
public:
  // Inserts a row, reducing by existing pivots (pivot = lowest column).
  void insert(SparseRow row)
  {
    while (!row.empty()) {
      int c = row.front().first;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        Rational inv = 1 / row.front().second;
        for (auto& [col, v] : row)
          v *= inv;
        pivots_.emplace(c, std::move(row));
        return;
      }
      row = subtract(row, it->second, row.front().second);
    }
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  static SparseRow subtract(const SparseRow& a, const SparseRow& b, const Rational& s)
  {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, Rational(-s * b[j].second));
        ++j;
      } else {
        Rational v = a[i].second - s * b[j].second;
        if (sgn(v) != 0)
          out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<int, SparseRow> pivots_;
};

/// dim of O_n / (I + m^k), via the span of truncations of m*g below degree k.
inline long truncated_colength(const IdealPresentation& ideal, int k)
{
  int n = ideal.nvars();
  std::vector<Exponent> monos;
  enumerate_monomials(n, k - 1, monos);
  std::map<Exponent, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i)
    index.emplace(monos[i], static_cast<int>(i));
  Echelon ech;
  for (const auto& g : ideal.generators()) {
    auto lo = g.lowest_order();
    if (!lo || *lo >= k)
      continue;
    for (const auto& m : monos) {
      int dm = Polynomial::degree_of(m);
      if (dm + *lo >= k)
        break;  // graded order: all later monomials are at least as large
      SparseRow row;
      for (const auto& [e, c] : g.terms()) {
        Exponent prod = e;
        for (int v = 0; v < n; ++v)
          prod[static_cast<std::size_t>(v)] += m[static_cast<std::size_t>(v)];
        auto it = index.find(prod);
        if (it != index.end())
          row.emplace_back(it->second, c);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(std::move(row));
    }
  }
  return static_cast<long>(monos.size()) - static_cast<long>(ech.rank());
}

}  // namespace detail

/// Index of a coordinate axis contained in V(I), if any.
inline std::optional<int> axis_in_zero_set(const IdealPresentation& ideal)
{
  int n = ideal.nvars();
  for (int v = 0; v < n; ++v) {
    bool all_vanish = true;
    for (const auto& g : ideal.generators()) {
      for (const auto& [e, c] : g.terms()) {
        bool pure = true;
        for (int w = 0; w < n; ++w)
          if (w != v && e[static_cast<std::size_t>(w)] != 0)
            pure = false;
        if (pure) {
          all_vanish = false;
          break;
        }
      }
      if (!all_vanish)
        break;
    }
    if (all_vanish)
      return v;
  }
  return std::nullopt;
}

/// Colength dim O_n / I of the ideal in the local ring at the origin.
/// d_K = dim O/(I + m^K) is computed for K = 1, 2, ...; once d_K = d_{K+1},
/// Nakayama's lemma gives m^K in I, so d_K is the colength.
inline MultiplicityResult mult(const IdealPresentation& ideal, int cap = 24)
{
  MultiplicityResult res;
  if (auto axis = axis_in_zero_set(ideal)) {
    res.proven_infinite = true;
    res.diagnostic = "the z" + std::to_string(*axis + 1) + "-axis lies in the zero set";
    return res;
  }
  long prev = detail::truncated_colength(ideal, 1);
  for (int k = 1; k <= cap; ++k) {
    long next = detail::truncated_colength(ideal, k + 1);
    if (next == prev) {
      res.value = prev;
      res.stabilization_degree = k;
      return res;
    }
    prev = next;
  }
  res.diagnostic = "no stabilization up to K = " + std::to_string(cap + 1);
  res.stabilization_degree = cap + 1;
  return res;
}

/// Staircase count for monomial ideals.
inline MultiplicityResult mult_monomial(const IdealPresentation& ideal)
{
  int n = ideal.nvars();
  std::vector<Exponent> gens;
  for (const auto& g : ideal.generators()) {
    if (g.term_count() != 1)
      throw std::invalid_argument("mult_monomial needs monomial generators: " + g.to_string());
    gens.push_back(g.terms().begin()->first);
  }
  std::vector<int> bound(static_cast<std::size_t>(n), -1);
  for (const auto& e : gens) {
    int nonzero = -1, count = 0;
    for (int v = 0; v < n; ++v)
      if (e[static_cast<std::size_t>(v)] > 0) {
        nonzero = v;
        ++count;
      }
    if (count == 1) {
      int& b = bound[static_cast<std::size_t>(nonzero)];
      int a = e[static_cast<std::size_t>(nonzero)];
      if (b < 0 || a < b)
        b = a;
    }
  }
  MultiplicityResult res;
  for (int v = 0; v < n; ++v)
    if (bound[static_cast<std::size_t>(v)] < 0) {
      res.proven_infinite = true;
      res.diagnostic = "the z" + std::to_string(v + 1) + "-axis lies in the zero set";
      return res;
    }
  long count = 0;
  Exponent e(static_cast<std::size_t>(n), 0);
  while (true) {
    bool inside = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (int v = 0; v < n; ++v)
        if (g[static_cast<std::size_t>(v)] > e[static_cast<std::size_t>(v)]) {
          divides = false;
          break;
        }
      if (divides) {
        inside = true;
        break;
      }
    }
    if (!inside)
      ++count;
    int v = n - 1;
    while (v >= 0) {
      if (++e[static_cast<std::size_t>(v)] < bound[static_cast<std::size_t>(v)])
        break;
      e[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0)
      break;
  }
  res.value = count;
  return res;
}

}  // namespace germ_contact

#endif
