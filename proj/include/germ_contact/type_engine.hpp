#ifndef GERM_CONTACT_TYPE_ENGINE_HPP
#define GERM_CONTACT_TYPE_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "multiplicity.hpp"
#include "polynomial.hpp"
#include "puiseux.hpp"

namespace germ_contact {

enum class Status { Exact, UpperBound, LowerBound, Bracket, TruncationLimited };

inline std::string to_string(Status s)
{
  switch (s) {
  case Status::Exact: return "EXACT";
  case Status::UpperBound: return "UPPER_BOUND";
  case Status::LowerBound: return "LOWER_BOUND";
  case Status::Bracket: return "BRACKET";
  case Status::TruncationLimited: return "TRUNCATION_LIMITED";
  }
  return "?";
}

enum class Invariant { T1, Tq, BetaQ, Dq, Delta1, DeltaQ, DeltaQGeneric, DqHyper };

inline std::string to_string(Invariant i)
{
  switch (i) {
  case Invariant::T1: return "T1";
  case Invariant::Tq: return "Tq";
  case Invariant::BetaQ: return "BETAq";
  case Invariant::Dq: return "Dq";
  case Invariant::Delta1: return "Delta1";
  case Invariant::DeltaQ: return "Deltaq";
  case Invariant::DeltaQGeneric: return "Deltaq-generic";
  case Invariant::DqHyper: return "Dq(M)";
  }
  return "?";
}

enum class Verdict { Pass, Fail, Inconclusive };

inline std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Pass: return "PASS";
  case Verdict::Fail: return "FAIL";
  case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// A curve supporting a bound, with the orders it was claimed to produce.
struct CurveWitness {
  std::string role;
  IdealPresentation ideal;
  AlgebraicCurveGerm curve;
  std::vector<std::optional<int>> generator_orders;  // nullopt: zero to truncation
  int curve_order = 0;
  ExtendedRational ratio;
};

/// One linear-form tuple (or slicing plane) and the value computed for it.
struct TupleRecord {
  std::vector<LinearForm> forms;
  ExtendedRational lower, upper;
  Status status = Status::Exact;
  std::string label;
};

struct InvariantReport {
  InvariantReport(Invariant n, IdealPresentation i) : name(n), ideal(std::move(i)) {}

  Invariant name;
  IdealPresentation ideal;
  int q = 1;
  ExtendedRational lower, upper;
  Status status = Status::Exact;
  std::vector<CurveWitness> witnesses;
  std::vector<TupleRecord> samples;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  std::vector<InvariantReport> related;

  bool is_exact() const { return status == Status::Exact; }

  // The number a caller should quote for this report.
  ExtendedRational value() const
  {
    switch (status) {
    case Status::Exact:
    case Status::UpperBound: return upper;
    default: return lower;
    }
  }

  std::string value_string() const
  {
    switch (status) {
    case Status::Exact: return upper.to_string();
    case Status::UpperBound: return "<= " + upper.to_string();
    case Status::LowerBound: return ">= " + lower.to_string();
    default: return "[" + lower.to_string() + ", " + upper.to_string() + "]";
    }
  }

  void set_exact(const ExtendedRational& v)
  {
    lower = upper = v;
    status = Status::Exact;
  }
};

struct SamplePlan {
  int samples = 5;
  long height = 10000;
  std::uint64_t seed = 1;

  void validate() const
  {
    if (samples < 2)
      throw std::invalid_argument("sample count must be at least 2");
    if (height < 1)
      throw std::invalid_argument("coefficient height must be positive");
  }
};

struct EngineOptions {
  int truncation_cap = 512;
  int min_truncation = 16;
  SearchParams search{};
  int mult_cap = 24;
};

// ---------------------------------------------------------------------------
// Linear elimination

/// Result of solving generators of the form c*z_p + r (r free of z_p) for z_p
/// and substituting. Variables keep their original indices in `substitutions`;
/// `generators` are written in the kept variables only.
struct LinearElimination {
  int original_nvars = 0;
  std::vector<int> kept;                                  // original indices, increasing
  std::vector<std::pair<int, Polynomial>> substitutions;  // z_p = expr (original numbering, kept variables only)
  std::vector<Polynomial> generators;                     // nonzero, in kept variables

  int nvars() const { return static_cast<int>(kept.size()); }

  std::optional<IdealPresentation> reduced_ideal() const
  {
    if (kept.empty() || generators.empty())
      return std::nullopt;
    return IdealPresentation(nvars(), generators);
  }

  /// Curve in the kept variables -> curve in all variables.
  template <class Field>
  CurveGermT<Field> lift(const CurveGermT<Field>& c) const
  {
    if (c.nvars() != nvars())
      throw std::invalid_argument("curve arity does not match the reduced variables");
    CurveGermT<Field> out;
    out.field = c.field;
    out.truncation = c.truncation;
    out.exact = c.exact;
    out.components.assign(static_cast<std::size_t>(original_nvars), UPoly<Field>(c.field));
    for (std::size_t i = 0; i < kept.size(); ++i)
      out.components[static_cast<std::size_t>(kept[i])] = c.components[i];
    CurveGermT<Field> base = out;
    for (const auto& [p, expr] : substitutions) {
      int prec = pullback_precision(expr, base);
      out.components[static_cast<std::size_t>(p)] = pullback_series(expr, base, prec);
    }
    if (out.exact)
      out.truncation = out.max_degree() + 1;
    return out;
  }
};

namespace detail {

// Variable that occurs in g only through a single degree-one term.
inline std::optional<int> linear_pivot(const Polynomial& g)
{
  int n = g.nvars();
  for (int p = n - 1; p >= 0; --p) {
    bool linear_term = false, elsewhere = false;
    for (const auto& [e, c] : g.terms()) {
      if (e[static_cast<std::size_t>(p)] == 0)
        continue;
      if (Polynomial::degree_of(e) == 1)
        linear_term = true;
      else
        elsewhere = true;
    }
    if (linear_term && !elsewhere)
      return p;
  }
  return std::nullopt;
}

inline Polynomial compress(const Polynomial& g, const std::vector<int>& kept)
{
  Polynomial out(static_cast<int>(kept.size()));
  for (const auto& [e, c] : g.terms()) {
    Exponent f;
    for (int k : kept)
      f.push_back(e[static_cast<std::size_t>(k)]);
    out.add_term(std::move(f), c);
  }
  return out;
}

}  // namespace detail

inline bool has_linear_pivot(const IdealPresentation& ideal)
{
  for (const auto& g : ideal.generators())
    if (!g.is_zero() && detail::linear_pivot(g))
      return true;
  return false;
}

/// Repeatedly solves a generator c*z_p + r = 0 (z_p absent from r) for z_p and
/// substitutes into the remaining generators. The pivot is the highest-index
/// variable occurring only linearly in the first eligible generator.
inline LinearElimination eliminate_linear(const IdealPresentation& ideal)
{
  if (!has_linear_pivot(ideal))
    throw std::invalid_argument("no generator with an eliminable linear term");
  int n = ideal.nvars();
  std::vector<Polynomial> gens = ideal.generators();
  std::vector<std::pair<int, Polynomial>> subs;
  std::vector<bool> eliminated(static_cast<std::size_t>(n), false);
  while (true) {
    std::optional<std::size_t> which;
    int pivot = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero())
        continue;
      if (auto p = detail::linear_pivot(gens[i])) {
        which = i;
        pivot = *p;
        break;
      }
    }
    if (!which)
      break;
    const Polynomial& g = gens[*which];
    Exponent unit(static_cast<std::size_t>(n), 0);
    unit[static_cast<std::size_t>(pivot)] = 1;
    Rational c = g.coefficient(unit);
    Polynomial expr = Rational(-1 / c) * (g - Polynomial::monomial(n, unit, c));
    std::vector<Polynomial> images;
    for (int v = 0; v < n; ++v)
      images.push_back(v == pivot ? expr : Polynomial::variable(n, v));
    for (auto& h : gens)
      h = substitute(h, images);
    for (auto& [p, e] : subs)
      e = substitute(e, images);
    subs.emplace_back(pivot, expr);
    eliminated[static_cast<std::size_t>(pivot)] = true;
  }
  LinearElimination out;
  out.original_nvars = n;
  for (int v = 0; v < n; ++v)
    if (!eliminated[static_cast<std::size_t>(v)])
      out.kept.push_back(v);
  out.substitutions = std::move(subs);
  for (const auto& h : gens)
    if (!h.is_zero())
      out.generators.push_back(detail::compress(h, out.kept));
  return out;
}

// ---------------------------------------------------------------------------
// Branch evaluation in two variables

/// Orders of a list of generators along one branch of a plane curve.
struct BranchEvaluation {
  PuiseuxBranch branch;
  std::vector<std::optional<int>> orders;  // nullopt: vanishes to the truncation
  std::vector<bool> certified_zero;        // vanishing proven (Bezout bound below truncation)
  bool limited = false;                    // some vanishing is not proven
  ExtendedRational min_ratio;              // min over generators; unproven zeros count as the truncation
};

/// Truncation for the branches of f that decides vanishing of every g: a
/// nonzero g has order at most deg f * deg g along any branch of f.
inline int certifying_truncation(const Polynomial& f, const std::vector<Polynomial>& gens, const EngineOptions& opt,
                                 bool& limited)
{
  int dg = 0;
  for (const auto& g : gens)
    dg = std::max(dg, g.total_degree());
  int need = std::max({opt.min_truncation, default_puiseux_truncation(f.total_degree()), f.total_degree() * dg + 1});
  limited = need > opt.truncation_cap;
  return std::min(need, opt.truncation_cap);
}

inline std::vector<BranchEvaluation> evaluate_branches(const Polynomial& f, const std::vector<Polynomial>& gens,
                                                       const EngineOptions& opt)
{
  bool capped = false;
  int n = certifying_truncation(f, gens, opt, capped);
  std::vector<BranchEvaluation> out;
  for (auto& b : branch_decompose(f, n)) {
    BranchEvaluation ev;
    ev.branch = std::move(b);
    AlgebraicCurveGerm c = ev.branch.curve();
    int vb = ev.branch.order();
    int tn = c.exact ? 0 : c.truncation;
    ExtendedRational best = ExtendedRational::infinity();
    for (const auto& g : gens) {
      auto o = pullback_order(g, c);
      ev.orders.push_back(o);
      bool proven = !o && (c.exact || tn > f.total_degree() * g.total_degree());
      ev.certified_zero.push_back(proven);
      if (o)
        best = min(best, ExtendedRational(make_rational(*o, vb)));
      else if (!proven) {
        ev.limited = true;
        best = min(best, ExtendedRational(make_rational(tn, vb)));
      }
    }
    (void)capped;
    ev.min_ratio = best;
    out.push_back(std::move(ev));
  }
  return out;
}

namespace detail {

inline CurveWitness make_witness(const std::string& role, const IdealPresentation& ideal, const AlgebraicCurveGerm& c)
{
  CurveWitness w{role, ideal, c, {}, 0, ExtendedRational::infinity()};
  w.curve_order = curve_order(c);
  ExtendedRational best = ExtendedRational::infinity();
  for (const auto& g : ideal.generators()) {
    auto o = pullback_order(g, c);
    w.generator_orders.push_back(o);
    if (o)
      best = min(best, ExtendedRational(make_rational(*o, w.curve_order)));
  }
  w.ratio = best;
  return w;
}

inline AlgebraicCurveGerm coordinate_curve(int n, int index)
{
  std::vector<std::vector<Rational>> comps(static_cast<std::size_t>(n));
  comps[static_cast<std::size_t>(index)] = {Rational(0), Rational(1)};
  return to_algebraic(polynomial_curve(comps));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// T1

/// 1-type of the reduced ideal in two variables: the maximum over branches
/// of all generators of min_i v(g_i o b)/v(b).
inline void type1_two_variables(const LinearElimination& elim, InvariantReport& rep, const EngineOptions& opt)
{
  const auto& gens = elim.generators;
  ExtendedRational best_lower(0);
  bool limited = false;
  std::optional<AlgebraicCurveGerm> best_curve;
  bool have = false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto& ev : evaluate_branches(gens[i], gens, opt)) {
      limited = limited || ev.limited;
      if (!have || ev.min_ratio > best_lower) {
        have = true;
        best_lower = ev.min_ratio;
        best_curve = ev.branch.curve();
      }
    }
  }
  if (!have) {
    // no generator vanishes along any curve: impossible for generators without constant term
    throw std::logic_error("no branches found for a two-variable ideal");
  }
  AlgebraicCurveGerm lifted = elim.lift(*best_curve);
  std::string role = best_lower.is_infinite() ? "common branch of all generators" : "maximizing branch";
  rep.witnesses.push_back(detail::make_witness(role, rep.ideal, lifted));
  if (limited) {
    rep.lower = best_lower;
    rep.upper = ExtendedRational::infinity();
    rep.status = Status::TruncationLimited;
    rep.notes.push_back("truncation cap " + std::to_string(opt.truncation_cap) +
                        " is below the order needed to certify vanishing along some branch");
  } else {
    rep.set_exact(best_lower);
  }
}

inline void type1_search_bracket(const LinearElimination& elim, InvariantReport& rep, const EngineOptions& opt)
{
  IdealPresentation reduced = *elim.reduced_ideal();
  SearchResult s = type1_search_lower_bound(reduced, opt.search);
  AlgebraicCurveGerm lifted = elim.lift(to_algebraic(s.witness));
  if (s.ratio.is_infinite()) {
    rep.witnesses.push_back(detail::make_witness("polynomial curve inside the zero set", rep.ideal, lifted));
    rep.set_exact(ExtendedRational::infinity());
    return;
  }
  rep.witnesses.push_back(detail::make_witness("best searched curve", rep.ideal, lifted));
  MultiplicityResult m = mult(reduced, opt.mult_cap);
  if (m.proven_infinite) {
    auto axis = axis_in_zero_set(reduced);
    AlgebraicCurveGerm ac = elim.lift(detail::coordinate_curve(reduced.nvars(), *axis));
    rep.witnesses.push_back(detail::make_witness("coordinate axis inside the zero set", rep.ideal, ac));
    rep.set_exact(ExtendedRational::infinity());
    return;
  }
  rep.lower = s.ratio;
  if (m.finite()) {
    rep.upper = ExtendedRational(Rational(*m.value));
    rep.notes.push_back("upper bound from multiplicity " + m.to_string());
  } else {
    rep.upper = ExtendedRational::infinity();
    rep.notes.push_back("multiplicity: " + m.diagnostic);
  }
  if (rep.lower == rep.upper)
    rep.status = Status::Exact;
  else
    rep.status = Status::Bracket;
}

inline InvariantReport type1(const IdealPresentation& ideal, const EngineOptions& opt = {})
{
  InvariantReport rep(Invariant::T1, ideal);
  LinearElimination elim;
  if (has_linear_pivot(ideal)) {
    elim = eliminate_linear(ideal);
  } else {
    elim.original_nvars = ideal.nvars();
    for (int v = 0; v < ideal.nvars(); ++v)
      elim.kept.push_back(v);
    elim.generators.clear();
    for (const auto& g : ideal.generators())
      if (!g.is_zero())
        elim.generators.push_back(g);
  }
  int m = elim.nvars();
  if (m < ideal.nvars())
    rep.notes.push_back("eliminated " + std::to_string(ideal.nvars() - m) + " variable(s) through linear generators");

  if (m == 0) {
    rep.witnesses.push_back(detail::make_witness("any curve", ideal, detail::coordinate_curve(ideal.nvars(), 0)));
    rep.set_exact(ExtendedRational(1));
    return rep;
  }
  if (elim.generators.empty()) {
    // the ideal defines a smooth germ of positive dimension
    AlgebraicCurveGerm c = elim.lift(detail::coordinate_curve(m, 0));
    rep.witnesses.push_back(detail::make_witness("curve inside the smooth zero set", ideal, c));
    rep.set_exact(ExtendedRational::infinity());
    return rep;
  }
  if (m == 1) {
    int best = -1;
    for (const auto& g : elim.generators) {
      int o = *g.lowest_order();
      if (best < 0 || o < best)
        best = o;
    }
    AlgebraicCurveGerm c = elim.lift(detail::coordinate_curve(1, 0));
    rep.witnesses.push_back(detail::make_witness("coordinate line", ideal, c));
    rep.set_exact(ExtendedRational(best));
    return rep;
  }
  if (m == 2) {
    type1_two_variables(elim, rep, opt);
    return rep;
  }
  type1_search_bracket(elim, rep, opt);
  return rep;
}

// ---------------------------------------------------------------------------
// Linear-form tuples

namespace detail {

inline std::vector<std::vector<LinearForm>> coordinate_tuples(int n, int size)
{
  std::vector<std::vector<LinearForm>> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<LinearForm> t;
    for (int i : idx)
      t.push_back(LinearForm::coordinate(n, i));
    out.push_back(std::move(t));
    int k = size - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - size + k)
      --k;
    if (k < 0)
      break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < size; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline LinearForm random_form(int n, long height, std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> dist(-height, height);
  while (true) {
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i)
      c.emplace_back(dist(rng));
    LinearForm w(std::move(c));
    if (!w.is_zero())
      return w;
  }
}

inline std::vector<std::vector<LinearForm>> random_tuples(int n, int size, int count, long height, std::mt19937_64& rng)
{
  std::vector<std::vector<LinearForm>> out;
  for (int s = 0; s < count; ++s) {
    std::vector<LinearForm> t;
    for (int i = 0; i < size; ++i)
      t.push_back(random_form(n, height, rng));
    out.push_back(std::move(t));
  }
  return out;
}

inline TupleRecord record(const std::vector<LinearForm>& forms, const InvariantReport& r, const std::string& label)
{
  return TupleRecord{forms, r.lower, r.upper, r.status, label};
}

inline void check_q(const IdealPresentation& ideal, int q)
{
  if (q < 1 || q > ideal.nvars())
    throw std::invalid_argument("q = " + std::to_string(q) + " out of range 1.." + std::to_string(ideal.nvars()));
}

inline InvariantReport relabel(InvariantReport r, Invariant name, int q)
{
  r.name = name;
  r.q = q;
  return r;
}

}  // namespace detail

/// q-type: minimum of T1(I, w_1..w_{q-1}) over coordinate tuples, the plan's
/// random tuples and caller-supplied extras. Exact only when a coordinate
/// tuple attains the minimum with an exact value no other candidate can undercut.
inline InvariantReport typeq(const IdealPresentation& ideal, int q, const SamplePlan& plan,
                             const std::vector<std::vector<LinearForm>>& extras = {}, const EngineOptions& opt = {})
{
  detail::check_q(ideal, q);
  plan.validate();
  if (q == 1)
    return detail::relabel(type1(ideal, opt), Invariant::Tq, 1);
  int n = ideal.nvars();
  struct Candidate {
    std::vector<LinearForm> forms;
    std::string label;
    bool coordinate;
  };
  std::vector<Candidate> cands;
  for (auto& t : detail::coordinate_tuples(n, q - 1))
    cands.push_back({std::move(t), "coordinate", true});
  std::mt19937_64 rng(plan.seed);
  for (auto& t : detail::random_tuples(n, q - 1, plan.samples, plan.height, rng))
    cands.push_back({std::move(t), "random", false});
  for (const auto& t : extras) {
    if (static_cast<int>(t.size()) != q - 1)
      throw std::invalid_argument("extra candidate tuple must have q - 1 forms");
    cands.push_back({t, "extra", false});
  }

  InvariantReport rep(Invariant::Tq, ideal);
  rep.q = q;
  rep.seed = plan.seed;
  std::vector<InvariantReport> results;
  for (const auto& c : cands) {
    results.push_back(type1(adjoin(ideal, c.forms), opt));
    rep.samples.push_back(detail::record(c.forms, results.back(), c.label));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const auto& a = results[i].upper;
    const auto& b = results[best].upper;
    if (a < b)
      best = i;
    else if (a == b) {
      bool better = cands[i].coordinate && !cands[best].coordinate;
      if (cands[i].coordinate == cands[best].coordinate)
        better = std::lexicographical_compare(cands[i].forms.begin(), cands[i].forms.end(), cands[best].forms.begin(),
                                              cands[best].forms.end());
      if (better)
        best = i;
    }
  }
  const InvariantReport& r = results[best];
  rep.witnesses = r.witnesses;
  rep.upper = r.upper;
  rep.lower = r.upper;
  bool undercut = false;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (i != best && results[i].lower < r.upper)
      undercut = true;
  std::string tuple_text;
  for (const auto& w : cands[best].forms)
    tuple_text += (tuple_text.empty() ? "" : ", ") + w.to_string();
  rep.notes.push_back("minimizing tuple (" + tuple_text + "), " + cands[best].label);
  if (r.status == Status::TruncationLimited) {
    rep.status = Status::TruncationLimited;
    rep.lower = r.lower;
  } else if (cands[best].coordinate && r.is_exact() && !undercut) {
    rep.status = Status::Exact;
  } else {
    rep.status = Status::UpperBound;
  }
  return rep;
}

/// Generic value of T1(I, w_1..w_{q-1}) for random tuples. Agreement of all
/// samples gives an exact generic value; otherwise the height is doubled
/// twice before the maximum is reported as a diagnostic upper bound.
inline InvariantReport betaq(const IdealPresentation& ideal, int q, const SamplePlan& plan, const EngineOptions& opt = {})
{
  detail::check_q(ideal, q);
  plan.validate();
  if (q == 1)
    return detail::relabel(type1(ideal, opt), Invariant::BetaQ, 1);
  int n = ideal.nvars();
  InvariantReport rep(Invariant::BetaQ, ideal);
  rep.q = q;
  rep.seed = plan.seed;
  std::mt19937_64 rng(plan.seed);
  long height = plan.height;
  for (int stage = 0; stage < 3; ++stage, height *= 2) {
    std::vector<InvariantReport> results;
    auto tuples = detail::random_tuples(n, q - 1, plan.samples, height, rng);
    for (const auto& t : tuples) {
      results.push_back(type1(adjoin(ideal, t), opt));
      rep.samples.push_back(detail::record(t, results.back(), "height " + std::to_string(height)));
    }
    bool agree = std::all_of(results.begin(), results.end(),
                             [&](const InvariantReport& r) { return r.is_exact() && r.upper == results.front().upper; });
    if (agree) {
      rep.set_exact(results.front().upper);
      rep.witnesses = results.front().witnesses;
      rep.notes.push_back(std::to_string(plan.samples) + "/" + std::to_string(plan.samples) +
                          " samples agree at height " + std::to_string(height));
      return rep;
    }
    if (stage == 2) {
      std::size_t arg = 0;
      bool limited = false;
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].upper > results[arg].upper)
          arg = i;
        limited = limited || results[i].status == Status::TruncationLimited;
      }
      rep.upper = results[arg].upper;
      rep.lower = results[arg].lower;
      rep.witnesses = results[arg].witnesses;
      rep.status = limited ? Status::TruncationLimited : Status::UpperBound;
      rep.notes.push_back("samples disagree after doubling the height twice; reporting the maximum");
    } else {
      rep.notes.push_back("samples disagree at height " + std::to_string(height) + "; resampling");
    }
  }
  return rep;
}

/// Lower bound for the Catlin q-type by slicing candidate hypersurfaces with
/// random planes z3 = -a z1 - b z2 and taking branch ratios (q = 2, n = 3).
inline InvariantReport catlin_q_slicing_bound(const IdealPresentation& ideal, int q,
                                              const std::optional<std::vector<Polynomial>>& varieties,
                                              const SamplePlan& plan, const EngineOptions& opt = {})
{
  if (q != 2 || ideal.nvars() != 3)
    throw std::invalid_argument("slicing bound is implemented for q = 2 and n = 3 only");
  plan.validate();
  std::vector<Polynomial> vars = varieties ? *varieties : ideal.generators();
  if (vars.empty())
    throw std::invalid_argument("no candidate varieties");
  for (const auto& h : vars) {
    if (h.nvars() != 3)
      throw std::invalid_argument("candidate variety must be a polynomial in 3 variables");
    if (h.is_zero() || sgn(h.constant_term()) != 0)
      throw std::invalid_argument("candidate variety must be nonzero and pass through the origin: " + h.to_string());
  }
  InvariantReport rep(Invariant::Dq, ideal);
  rep.q = q;
  rep.seed = plan.seed;
  std::mt19937_64 rng(plan.seed);
  std::uniform_int_distribution<long> dist(-plan.height, plan.height);
  auto nonzero = [&] {
    long v = 0;
    while (v == 0)
      v = dist(rng);
    return v;
  };

  bool have_certified = false;
  ExtendedRational best_certified(0), best_any(0);
  std::optional<CurveWitness> best_witness;
  bool any_limited = false;
  for (std::size_t vi = 0; vi < vars.size(); ++vi) {
    const Polynomial& h = vars[vi];
    bool tight_all = true, agree = true, limited = false;
    std::optional<ExtendedRational> first;
    ExtendedRational worst = ExtendedRational::infinity();
    std::optional<CurveWitness> witness;
    int used = 0;
    for (int s = 0; s < plan.samples; ++s) {
      Rational a(nonzero()), b(nonzero());
      std::vector<Polynomial> images{Polynomial::variable(2, 0), Polynomial::variable(2, 1),
                                     Rational(-a) * Polynomial::variable(2, 0) - b * Polynomial::variable(2, 1)};
      Polynomial hs = substitute(h, images);
      LinearForm plane({a, b, Rational(1)});
      if (hs.is_zero()) {
        rep.notes.push_back("variety " + std::to_string(vi + 1) + ": plane contained in the variety, sample skipped");
        continue;
      }
      std::vector<Polynomial> gs;
      for (const auto& g : ideal.generators())
        gs.push_back(substitute(g, images));
      auto evs = evaluate_branches(hs, gs, opt);
      if (evs.empty()) {
        rep.notes.push_back("variety " + std::to_string(vi + 1) + ": slice has no branches at the origin");
        continue;
      }
      ++used;
      // lo = max_k min_i, hi = min_i max_k
      ExtendedRational lo(0);
      std::size_t arg = 0;
      for (std::size_t k = 0; k < evs.size(); ++k) {
        limited = limited || evs[k].limited;
        if (k == 0 || evs[k].min_ratio > lo) {
          lo = evs[k].min_ratio;
          arg = k;
        }
      }
      ExtendedRational hi = ExtendedRational::infinity();
      for (std::size_t i = 0; i < gs.size(); ++i) {
        ExtendedRational mx(0);
        for (const auto& ev : evs) {
          int vb = ev.branch.order();
          ExtendedRational r = ev.orders[i] ? ExtendedRational(make_rational(*ev.orders[i], vb))
                                            : ExtendedRational::infinity();
          mx = max(mx, r);
        }
        hi = min(hi, mx);
      }
      Status st = lo == hi ? Status::Exact : Status::Bracket;
      rep.samples.push_back(TupleRecord{{plane}, lo, hi, st, "variety " + std::to_string(vi + 1)});
      if (lo != hi)
        tight_all = false;
      if (!first)
        first = lo;
      else if (!(lo == *first))
        agree = false;
      worst = min(worst, lo);
      if (!witness) {
        const auto& br = evs[arg].branch;
        AlgebraicCurveGerm c2 = br.curve();
        AlgebraicCurveGerm c3;
        c3.field = c2.field;
        c3.truncation = c2.truncation;
        c3.exact = c2.exact;
        KPoly z3 = c2.components[0].scaled(c2.field.from_rational(Rational(-a))) -
                   c2.components[1].scaled(c2.field.from_rational(b));
        c3.components = {c2.components[0], c2.components[1], z3};
        witness = detail::make_witness("slice branch of variety " + std::to_string(vi + 1), ideal, c3);
      }
    }
    if (used == 0)
      continue;
    any_limited = any_limited || limited;
    if (tight_all && agree && !limited) {
      if (!have_certified || *first > best_certified) {
        best_certified = *first;
        best_witness = witness;
      }
      have_certified = true;
    }
    if (worst > best_any)
      best_any = worst;
    if (!have_certified && !best_witness)
      best_witness = witness;
  }
  if (best_witness)
    rep.witnesses.push_back(*best_witness);
  if (have_certified) {
    rep.lower = best_certified;
    rep.upper = ExtendedRational::infinity();
    rep.status = any_limited ? Status::TruncationLimited : Status::LowerBound;
    rep.notes.push_back("tight bracket agreeing on all samples");
    if (any_limited)
      rep.notes.push_back("another variety could not be certified below the truncation cap");
  } else {
    rep.lower = best_any;
    rep.upper = ExtendedRational::infinity();
    rep.status = any_limited ? Status::TruncationLimited : Status::Bracket;
    rep.notes.push_back("no variety gave a tight, sample-stable bracket");
  }
  return rep;
}

/// Catlin q-type through the identity D_q = beta_q, cross-checked against the
/// slicing lower bound when (q, n) = (2, 3).
inline InvariantReport catlin_q(const IdealPresentation& ideal, int q, const SamplePlan& plan,
                                const EngineOptions& opt = {})
{
  detail::check_q(ideal, q);
  if (q == 1) {
    auto r = detail::relabel(type1(ideal, opt), Invariant::Dq, 1);
    r.notes.push_back("D_1 = T_1");
    return r;
  }
  InvariantReport rep = detail::relabel(betaq(ideal, q, plan, opt), Invariant::Dq, q);
  rep.notes.push_back("value from the identity D_q = beta_q");
  if (q == 2 && ideal.nvars() == 3) {
    InvariantReport s = catlin_q_slicing_bound(ideal, q, std::nullopt, plan, opt);
    if (s.status == Status::LowerBound && s.lower > rep.upper)
      rep.notes.push_back("CONSISTENCY FAILURE: slicing lower bound " + s.lower.to_string() + " exceeds " +
                          rep.upper.to_string());
    rep.related.push_back(std::move(s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Inequality checks

struct InequalityCheck {
  std::string description;
  Verdict verdict = Verdict::Inconclusive;
};

struct ChainReport {
  InvariantReport tq, dq;
  InequalityCheck left, right;
  Verdict overall() const
  {
    if (left.verdict == Verdict::Fail || right.verdict == Verdict::Fail)
      return Verdict::Fail;
    if (left.verdict == Verdict::Pass && right.verdict == Verdict::Pass)
      return Verdict::Pass;
    return Verdict::Inconclusive;
  }
};

namespace detail {

// a <= b where a is known within [a_lo, a_hi] and b within [b_lo, b_hi].
inline Verdict compare_le(const ExtendedRational& a_lo, const ExtendedRational& a_hi, const ExtendedRational& b_lo,
                          const ExtendedRational& b_hi)
{
  if (a_hi.is_infinite() && a_lo.is_infinite())
    return Verdict::Inconclusive;
  if (a_hi <= b_lo && !a_hi.is_infinite())
    return Verdict::Pass;
  if (a_lo > b_hi)
    return Verdict::Fail;
  return Verdict::Inconclusive;
}

inline std::pair<ExtendedRational, ExtendedRational> interval(const InvariantReport& r)
{
  switch (r.status) {
  case Status::Exact: return {r.upper, r.upper};
  case Status::UpperBound: return {ExtendedRational(0), r.upper};
  case Status::LowerBound: return {r.lower, ExtendedRational::infinity()};
  default: return {r.lower, r.upper};
  }
}

}  // namespace detail

/// T_q <= D_q <= T_q^(n-q+1).
inline ChainReport check_chain(const IdealPresentation& ideal, int q, const SamplePlan& plan,
                               const EngineOptions& opt = {})
{
  ChainReport rep{typeq(ideal, q, plan, {}, opt), catlin_q(ideal, q, plan, opt), {}, {}};
  auto [t_lo, t_hi] = detail::interval(rep.tq);
  auto [d_lo, d_hi] = detail::interval(rep.dq);
  unsigned e = static_cast<unsigned>(ideal.nvars() - q + 1);
  rep.left.description = "T_q " + rep.tq.value_string() + " <= D_q " + rep.dq.value_string();
  rep.left.verdict = detail::compare_le(t_lo, t_hi, d_lo, d_hi);
  // the power bound needs T_q from below; an upper bound for T_q does not suffice
  ExtendedRational p_lo = pow(t_lo, e), p_hi = pow(t_hi, e);
  rep.right.description = "D_q " + rep.dq.value_string() + " <= T_q^" + std::to_string(e) + " = " +
                          (rep.tq.is_exact() ? p_hi.to_string() : "[" + p_lo.to_string() + ", " + p_hi.to_string() + "]");
  if (d_hi.is_infinite() && d_lo.is_infinite())
    rep.right.verdict = Verdict::Inconclusive;
  else
    rep.right.verdict = detail::compare_le(d_lo, d_hi, p_lo, p_hi);
  return rep;
}

struct MultBoundsReport {
  InvariantReport t1;
  MultiplicityResult multiplicity;
  int q = 0;
  InequalityCheck left, right;
  Verdict overall() const
  {
    if (left.verdict == Verdict::Fail || right.verdict == Verdict::Fail)
      return Verdict::Fail;
    if (left.verdict == Verdict::Pass && right.verdict == Verdict::Pass)
      return Verdict::Pass;
    return Verdict::Inconclusive;
  }
};

/// T1 <= mult <= T1^(n-q) for an ideal containing q independent linear parts.
inline MultBoundsReport check_mult_bounds(const IdealPresentation& ideal, int q, const EngineOptions& opt = {})
{
  if (q < 0 || q > ideal.nvars())
    throw std::invalid_argument("q out of range");
  int rank = linear_rank(ideal);
  if (rank < q)
    throw std::invalid_argument("linear parts of the generators have rank " + std::to_string(rank) + " < q = " +
                                std::to_string(q));
  MultBoundsReport rep{type1(ideal, opt), mult(ideal, opt.mult_cap), q, {}, {}};
  auto [t_lo, t_hi] = detail::interval(rep.t1);
  unsigned e = static_cast<unsigned>(ideal.nvars() - q);
  rep.left.description = "T1 " + rep.t1.value_string() + " <= mult " + rep.multiplicity.to_string();
  rep.right.description = "mult " + rep.multiplicity.to_string() + " <= T1^" + std::to_string(e);
  if (!rep.multiplicity.finite()) {
    rep.left.verdict = Verdict::Inconclusive;
    rep.right.verdict = Verdict::Inconclusive;
    return rep;
  }
  ExtendedRational m(Rational(*rep.multiplicity.value));
  rep.left.verdict = detail::compare_le(t_lo, t_hi, m, m);
  rep.right.verdict = detail::compare_le(m, m, pow(t_lo, e), pow(t_hi, e));
  return rep;
}

// ---------------------------------------------------------------------------
// Re-validation

/// Recomputes every witness's orders; returns the mismatches (empty when the
/// report is self-consistent).
inline std::vector<std::string> revalidate(const InvariantReport& rep)
{
  std::vector<std::string> problems;
  for (std::size_t w = 0; w < rep.witnesses.size(); ++w) {
    const auto& wit = rep.witnesses[w];
    CurveWitness again = detail::make_witness(wit.role, wit.ideal, wit.curve);
    if (again.generator_orders != wit.generator_orders || again.curve_order != wit.curve_order ||
        !(again.ratio == wit.ratio))
      problems.push_back(to_string(rep.name) + " witness " + std::to_string(w + 1) + " (" + wit.role +
                         ") does not reproduce its orders");
  }
  for (const auto& r : rep.related)
    for (auto& p : revalidate(r))
      problems.push_back(p);
  return problems;
}

}  // namespace germ_contact

#endif
