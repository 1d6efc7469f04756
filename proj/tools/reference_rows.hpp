#ifndef GERM_CONTACT_TOOLS_REFERENCE_ROWS_HPP
#define GERM_CONTACT_TOOLS_REFERENCE_ROWS_HPP

#include <functional>
#include <string>
#include <vector>

#include <germ_contact/germ_contact.hpp>

// Known values checked by `germ-contact verify-paper`.

namespace germ_contact::reference {

struct RowConfig {
  SamplePlan plan;
  EngineOptions options;
};

struct RowResult {
  std::string computed;
  bool limited = false;
};

struct Row {
  std::string id;
  std::string quantity;
  std::string expected;
  std::function<RowResult(const RowConfig&)> run;
};

inline RowResult from_report(const InvariantReport& r)
{
  return {r.value_string(), r.status == Status::TruncationLimited};
}

inline IdealPresentation family_ideal(int a, int b)
{
  return parse_ideal("ring z1..z3; ideal = z1^" + std::to_string(a) + " - z2*z3, z2^" + std::to_string(b) + ";");
}

inline std::vector<Row> rows()
{
  std::vector<Row> out;
  const IdealPresentation base = family_ideal(3, 2);
  const std::string base_name = "(z1^3 - z2*z3, z2^2)";

  out.push_back({"1.1", "T2" + base_name, "3", [=](const RowConfig& c) {
                   return from_report(typeq(base, 2, c.plan, {}, c.options));
                 }});
  out.push_back({"1.2", "beta2" + base_name, "4", [=](const RowConfig& c) {
                   return from_report(betaq(base, 2, c.plan, c.options));
                 }});
  struct Slice {
    std::string name, expected;
    std::vector<Rational> form;
  };
  for (const Slice& s : {Slice{"z1 + z2 + z3", "4", {1, 1, 1}}, Slice{"z2 + z3", "3", {0, 1, 1}},
                         Slice{"z1 + z2", "inf", {1, 1, 0}}}) {
    out.push_back({"1.3", "T1" + base_name.substr(0, base_name.size() - 1) + ", " + s.name + ")", s.expected,
                   [=](const RowConfig& c) {
                     return from_report(type1(adjoin(base, {LinearForm(s.form)}), c.options));
                   }});
  }
  out.push_back({"2.1", "slicing bound for D2" + base_name + " on z1^3 - z2*z3", ">= 4", [=](const RowConfig& c) {
                   std::vector<Polynomial> v{base[0]};
                   return from_report(catlin_q_slicing_bound(base, 2, v, c.plan, c.options));
                 }});

  for (int m = 3; m <= 6; ++m) {
    IdealPresentation ideal = family_ideal(m, m);
    std::string name = "(z1^" + std::to_string(m) + " - z2*z3, z2^" + std::to_string(m) + ")";
    std::string id = "3.m" + std::to_string(m);
    out.push_back({id, "T1" + name.substr(0, name.size() - 1) + ", z3)", std::to_string(m), [=](const RowConfig& c) {
                     return from_report(type1(adjoin(ideal, {LinearForm::coordinate(3, 2)}), c.options));
                   }});
    out.push_back({id, "beta2" + name, std::to_string(m * (m - 1)), [=](const RowConfig& c) {
                     return from_report(betaq(ideal, 2, c.plan, c.options));
                   }});
    out.push_back({id, "slicing bound for D2" + name, ">= " + std::to_string(m * (m - 1)), [=](const RowConfig& c) {
                     return from_report(catlin_q_slicing_bound(ideal, 2, std::nullopt, c.plan, c.options));
                   }});
  }

  struct Pair {
    int vf, vg;
  };
  for (Pair p : {Pair{3, 2}, Pair{4, 3}, Pair{5, 2}}) {
    IdealPresentation ideal = family_ideal(p.vf, p.vg);
    std::string name = "(z1^" + std::to_string(p.vf) + " - z2*z3, z2^" + std::to_string(p.vg) + ")";
    std::string id = "4." + std::to_string(p.vf) + std::to_string(p.vg);
    out.push_back({id, "beta2" + name, std::to_string(p.vg * (p.vf - 1)), [=](const RowConfig& c) {
                     return from_report(betaq(ideal, 2, c.plan, c.options));
                   }});
    out.push_back({id, "T2" + name, std::to_string(std::max(p.vf, p.vg)), [=](const RowConfig& c) {
                     return from_report(typeq(ideal, 2, c.plan, {}, c.options));
                   }});
  }

  const RigidHypersurface hyper =
      parse_hypersurface("ring z1..z4; hyper = Re(z4) + abs2(z1^3 - z3*z2) + abs2(z2^2);").to_rigid();
  out.push_back({"5.1", "Delta2 of Re(z4) + abs2(z1^3 - z3*z2) + abs2(z2^2)", "6", [=](const RowConfig& c) {
                   return from_report(deltaq(hyper, 2, c.plan, c.options));
                 }});
  out.push_back({"5.2", "generic Delta1 of the same hypersurface cut by a hyperplane", "8", [=](const RowConfig& c) {
                   return from_report(deltaq_generic(hyper, 2, c.plan, c.options));
                 }});
  out.push_back({"5.3", "slicing bound for D2 of the same hypersurface", ">= 8", [=](const RowConfig& c) {
                   InvariantReport r = catlinq_hyper(hyper, 2, c.plan, c.options);
                   if (r.related.empty())
                     return RowResult{"unavailable", false};
                   return from_report(r.related.front());
                 }});

  out.push_back({"6.1", "mult(z1^3, z2^2)", "6", [](const RowConfig& c) {
                   return RowResult{mult(parse_ideal("ring z1..z2; ideal = z1^3, z2^2;"), c.options.mult_cap).to_string(),
                                    false};
                 }});
  out.push_back({"6.2", "T1 <= mult <= T1^2 for (z1^3 - z2*z3, z2^2, z3)", "3 <= 6 <= 9", [](const RowConfig& c) {
                   auto r = check_mult_bounds(parse_ideal("ring z1..z3; ideal = z1^3 - z2*z3, z2^2, z3;"), 1, c.options);
                   std::string t = r.t1.value_string();
                   std::string m = r.multiplicity.to_string();
                   std::string p = pow(r.t1.upper, 2).to_string();
                   std::string shown = t + " <= " + m + " <= " + p;
                   if (r.overall() != Verdict::Pass)
                     shown += " " + to_string(r.overall());
                   return RowResult{shown,
                                    r.t1.status == Status::TruncationLimited};
                 }});

  std::vector<std::pair<std::string, IdealPresentation>> chain_ideals{{base_name, base}};
  for (int m = 3; m <= 6; ++m)
    chain_ideals.emplace_back("(z1^" + std::to_string(m) + " - z2*z3, z2^" + std::to_string(m) + ")",
                              family_ideal(m, m));
  for (Pair p : {Pair{4, 3}, Pair{5, 2}})
    chain_ideals.emplace_back("(z1^" + std::to_string(p.vf) + " - z2*z3, z2^" + std::to_string(p.vg) + ")",
                              family_ideal(p.vf, p.vg));
  for (const auto& [name, ideal] : chain_ideals) {
    IdealPresentation id = ideal;
    out.push_back({"7", "T2 <= D2 <= T2^2 for " + name, "PASS", [=](const RowConfig& c) {
                     ChainReport r = check_chain(id, 2, c.plan, c.options);
                     bool limited = r.tq.status == Status::TruncationLimited || r.dq.status == Status::TruncationLimited;
                     return RowResult{to_string(r.overall()), limited};
                   }});
  }
  return out;
}

}  // namespace germ_contact::reference

#endif
