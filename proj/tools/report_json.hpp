#ifndef GERM_CONTACT_TOOLS_REPORT_JSON_HPP
#define GERM_CONTACT_TOOLS_REPORT_JSON_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <germ_contact/germ_contact.hpp>
#include "json.hpp"

namespace germ_contact::json {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json rationals(const QPoly& p)
{
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i)
    a.push_back(p.coeff(i).get_str());
  return a;
}

inline QPoly qpoly_from(const json& a)
{
  std::vector<Rational> c;
  for (const auto& x : a)
    c.push_back(parse_rational(x.get<std::string>()));
  return QPoly(RationalField{}, c);
}

inline json ideal_to_json(const IdealPresentation& ideal)
{
  return json{{"nvars", ideal.nvars()}, {"generators", ideal.generator_strings()}};
}

inline IdealPresentation ideal_from_json(const json& j)
{
  int n = j.at("nvars").get<int>();
  std::string src = "ring z1..z" + std::to_string(n) + "; ideal = ";
  const auto& gens = j.at("generators");
  for (std::size_t i = 0; i < gens.size(); ++i)
    src += (i ? ", " : "") + gens[i].get<std::string>();
  return parse_ideal(src + ";");
}

inline json curve_to_json(const AlgebraicCurveGerm& c)
{
  json comps = json::array();
  for (const auto& comp : c.components) {
    json coeffs = json::array();
    for (int i = 0; i <= comp.degree(); ++i)
      coeffs.push_back(rationals(comp.coeff(i)));
    comps.push_back(coeffs);
  }
  return json{{"field", {{"minpoly", rationals(c.field.minpoly())}, {"tower", c.field.tower()}}},
              {"truncation", c.truncation},
              {"exact", c.exact},
              {"components", comps},
              {"display", c.to_string()}};
}

inline AlgebraicCurveGerm curve_from_json(const json& j)
{
  AlgebraicCurveGerm c;
  QPoly m = qpoly_from(j.at("field").at("minpoly"));
  if (m.degree() < 1 || !is_irreducible_rational(m))
    throw std::invalid_argument("curve field polynomial is not irreducible");
  c.field = m.degree() == 1 ? NumberField::rationals()
                            : NumberField::with_tower(m, j.at("field").at("tower").get<std::vector<std::string>>());
  c.truncation = j.at("truncation").get<int>();
  c.exact = j.at("exact").get<bool>();
  for (const auto& comp : j.at("components")) {
    std::vector<NumberField::Elem> coeffs;
    for (const auto& x : comp)
      coeffs.push_back(c.field.reduce(qpoly_from(x)));
    c.components.emplace_back(c.field, coeffs);
  }
  return c;
}

inline json orders_to_json(const std::vector<std::optional<int>>& orders)
{
  json a = json::array();
  for (const auto& o : orders)
    a.push_back(o ? json(*o) : json(nullptr));
  return a;
}

inline json witness_to_json(const CurveWitness& w)
{
  return json{{"role", w.role},
              {"ideal", ideal_to_json(w.ideal)},
              {"curve", curve_to_json(w.curve)},
              {"generator_orders", orders_to_json(w.generator_orders)},
              {"curve_order", w.curve_order},
              {"ratio", w.ratio.to_string()}};
}

inline CurveWitness witness_from_json(const json& j)
{
  CurveWitness w{j.at("role").get<std::string>(), ideal_from_json(j.at("ideal")), curve_from_json(j.at("curve")),
                 {}, j.at("curve_order").get<int>(), ExtendedRational::parse(j.at("ratio").get<std::string>())};
  for (const auto& o : j.at("generator_orders"))
    w.generator_orders.push_back(o.is_null() ? std::nullopt : std::optional<int>(o.get<int>()));
  return w;
}

inline json form_to_json(const LinearForm& w)
{
  json c = json::array();
  for (const auto& x : w.coefficients())
    c.push_back(x.get_str());
  return c;
}

inline json report_to_json(const InvariantReport& r)
{
  json j;
  j["invariant"] = to_string(r.name);
  j["q"] = r.q;
  j["ideal"] = ideal_to_json(r.ideal);
  j["value"] = r.value_string();
  j["lower"] = r.lower.to_string();
  j["upper"] = r.upper.to_string();
  j["status"] = to_string(r.status);
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back(witness_to_json(w));
  j["witnesses"] = ws;
  json ss = json::array();
  for (const auto& s : r.samples) {
    json forms = json::array();
    json shown = json::array();
    for (const auto& w : s.forms) {
      forms.push_back(form_to_json(w));
      shown.push_back(w.to_string());
    }
    ss.push_back(json{{"label", s.label},
                      {"forms", forms},
                      {"display", shown},
                      {"lower", s.lower.to_string()},
                      {"upper", s.upper.to_string()},
                      {"status", to_string(s.status)}});
  }
  j["samples"] = ss;
  j["seed"] = r.seed ? json(std::to_string(*r.seed)) : json(nullptr);
  j["notes"] = r.notes;
  json rel = json::array();
  for (const auto& x : r.related)
    rel.push_back(report_to_json(x));
  j["related"] = rel;
  return j;
}

inline Invariant invariant_from_string(const std::string& s)
{
  for (Invariant i : {Invariant::T1, Invariant::Tq, Invariant::BetaQ, Invariant::Dq, Invariant::Delta1,
                      Invariant::DeltaQ, Invariant::DeltaQGeneric, Invariant::DqHyper})
    if (to_string(i) == s)
      return i;
  throw std::invalid_argument("unknown invariant name " + s);
}

inline Status status_from_string(const std::string& s)
{
  for (Status x : {Status::Exact, Status::UpperBound, Status::LowerBound, Status::Bracket, Status::TruncationLimited})
    if (to_string(x) == s)
      return x;
  throw std::invalid_argument("unknown status " + s);
}

inline InvariantReport report_from_json(const json& j)
{
  InvariantReport r(invariant_from_string(j.at("invariant").get<std::string>()), ideal_from_json(j.at("ideal")));
  r.q = j.at("q").get<int>();
  r.lower = ExtendedRational::parse(j.at("lower").get<std::string>());
  r.upper = ExtendedRational::parse(j.at("upper").get<std::string>());
  r.status = status_from_string(j.at("status").get<std::string>());
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back(witness_from_json(w));
  for (const auto& s : j.at("samples")) {
    TupleRecord t;
    for (const auto& f : s.at("forms")) {
      std::vector<Rational> c;
      for (const auto& x : f)
        c.push_back(parse_rational(x.get<std::string>()));
      t.forms.emplace_back(std::move(c));
    }
    t.lower = ExtendedRational::parse(s.at("lower").get<std::string>());
    t.upper = ExtendedRational::parse(s.at("upper").get<std::string>());
    t.status = status_from_string(s.at("status").get<std::string>());
    t.label = s.at("label").get<std::string>();
    r.samples.push_back(std::move(t));
  }
  if (!j.at("seed").is_null())
    r.seed = std::stoull(j.at("seed").get<std::string>());
  r.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& x : j.at("related"))
    r.related.push_back(report_from_json(x));
  return r;
}

inline json multiplicity_to_json(const MultiplicityResult& m)
{
  return json{{"value", m.to_string()},
              {"stabilization_degree", m.stabilization_degree},
              {"proven_infinite", m.proven_infinite},
              {"diagnostic", m.diagnostic}};
}

}  // namespace germ_contact::json

#endif
