#ifndef GERM_CONTACT_HYPERSURFACE_HPP
#define GERM_CONTACT_HYPERSURFACE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "type_engine.hpp"

namespace germ_contact {

/// Real hypersurface Re(h) + sum |f_j|^2 with dh(0) != 0.
class RigidHypersurface {
public:
  RigidHypersurface(int n, Polynomial h, std::vector<Polynomial> fs) : n_(n), h_(std::move(h)), fs_(std::move(fs))
  {
    if (n < 1)
      throw std::invalid_argument("hypersurface needs at least one variable");
    if (h_.nvars() != n)
      throw std::invalid_argument("pure term has the wrong number of variables");
    if (sgn(h_.constant_term()) != 0)
      throw std::invalid_argument("pure term must vanish at the origin");
    if (h_.linear_part().is_zero())
      throw std::invalid_argument("pure term has zero linear part");
    for (const auto& f : fs_) {
      if (f.nvars() != n)
        throw std::invalid_argument("squared term has the wrong number of variables");
      if (sgn(f.constant_term()) != 0)
        throw std::invalid_argument("squared term must vanish at the origin: " + f.to_string());
    }
  }

  int nvars() const { return n_; }
  const Polynomial& pure_term() const { return h_; }
  const std::vector<Polynomial>& squared_terms() const { return fs_; }

  std::string to_string() const
  {
    std::string s = "Re(" + h_.to_string() + ")";
    for (const auto& f : fs_)
      s += " + abs2(" + f.to_string() + ")";
    return s;
  }

private:
  int n_;
  Polynomial h_;
  std::vector<Polynomial> fs_;
};

/// (h, f_1, ..., f_t)
inline IdealPresentation associated_ideal(const RigidHypersurface& m)
{
  std::vector<Polynomial> gens{m.pure_term()};
  for (const auto& f : m.squared_terms())
    gens.push_back(f);
  return IdealPresentation(m.nvars(), std::move(gens));
}

namespace detail {

inline InvariantReport doubled(InvariantReport r, Invariant name)
{
  r.name = name;
  r.lower = r.lower * Rational(2);
  r.upper = r.upper * Rational(2);
  r.notes.push_back("hypersurface value is twice the ideal value");
  return r;
}

}  // namespace detail

inline InvariantReport delta1(const RigidHypersurface& m, const EngineOptions& opt = {})
{
  return detail::doubled(type1(associated_ideal(m), opt), Invariant::Delta1);
}

inline InvariantReport deltaq(const RigidHypersurface& m, int q, const SamplePlan& plan, const EngineOptions& opt = {})
{
  if (q == 1)
    return delta1(m, opt);
  return detail::doubled(typeq(associated_ideal(m), q, plan, {}, opt), Invariant::DeltaQ);
}

/// Generic value of Delta_1(M cut by a generic plane of codimension q - 1).
inline InvariantReport deltaq_generic(const RigidHypersurface& m, int q, const SamplePlan& plan,
                                      const EngineOptions& opt = {})
{
  if (q == 1)
    return detail::relabel(delta1(m, opt), Invariant::DeltaQGeneric, 1);
  return detail::doubled(betaq(associated_ideal(m), q, plan, opt), Invariant::DeltaQGeneric);
}

/// Twice the Catlin q-type of the associated ideal, with the slicing lower
/// bound computed inside h = 0 when that hyperplane leaves three variables.
inline InvariantReport catlinq_hyper(const RigidHypersurface& m, int q, const SamplePlan& plan,
                                     const EngineOptions& opt = {})
{
  IdealPresentation ideal = associated_ideal(m);
  detail::check_q(ideal, q);
  if (q == 1) {
    auto r = detail::doubled(type1(ideal, opt), Invariant::DqHyper);
    r.notes.push_back("for q = 1 all notions of type agree");
    return r;
  }
  InvariantReport base = betaq(ideal, q, plan, opt);
  base.related.clear();
  InvariantReport rep = detail::doubled(std::move(base), Invariant::DqHyper);
  rep.q = q;
  rep.notes.push_back("reported as twice the generic value; the hypersurface identity is taken from the literature, "
                      "not checked here");

  // the slicing bound lives inside {h = 0}, parameterized by the remaining variables
  std::vector<Polynomial> pure{m.pure_term()};
  IdealPresentation just_h(m.nvars(), pure);
  if (q == 2 && has_linear_pivot(just_h)) {
    LinearElimination e = eliminate_linear(just_h);
    if (e.nvars() == 3) {
      std::vector<Polynomial> reduced;
      for (const auto& f : m.squared_terms()) {
        std::vector<Polynomial> images;
        for (int v = 0; v < m.nvars(); ++v)
          images.push_back(Polynomial::variable(m.nvars(), v));
        for (const auto& [p, expr] : e.substitutions)
          images[static_cast<std::size_t>(p)] = expr;
        Polynomial g = detail::compress(substitute(f, images), e.kept);
        if (!g.is_zero())
          reduced.push_back(std::move(g));
      }
      if (!reduced.empty()) {
        InvariantReport s = catlin_q_slicing_bound(IdealPresentation(3, reduced), 2, std::nullopt, plan, opt);
        s = detail::doubled(std::move(s), Invariant::DqHyper);
        s.notes.push_back("slicing bound computed inside the hyperplane h = 0");
        if (s.status == Status::LowerBound && s.lower > rep.upper)
          rep.notes.push_back("CONSISTENCY FAILURE: slicing lower bound " + s.lower.to_string() + " exceeds " +
                              rep.upper.to_string());
        rep.related.push_back(std::move(s));
        return rep;
      }
    }
  }
  rep.notes.push_back("slicing bound needs q = 2 and three variables inside h = 0");
  return rep;
}

}  // namespace germ_contact

#endif
