// germ-contact: order-of-contact invariants of polynomial ideals at the origin.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "reference_rows.hpp"
#include "report_json.hpp"

namespace gc = germ_contact;
using gc::json::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_input = 2;
constexpr int exit_truncation = 3;
constexpr int exit_inconclusive = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string command;
  std::string input;
  int q = 2;
  int samples = 5;
  std::uint64_t seed = 1;
  long height = 10000;
  int trunc = 512;
  int max_degree = 2;
  std::string format = "table";
  bool revalidate = false;

  gc::SamplePlan plan() const { return {samples, height, seed}; }

  gc::EngineOptions options() const
  {
    gc::EngineOptions o;
    o.truncation_cap = trunc;
    o.min_truncation = std::min(o.min_truncation, trunc);
    o.search.max_degree = max_degree;
    return o;
  }
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read input file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::variant<gc::ParsedIdeal, gc::ParsedHypersurface> load(const JobConfig& cfg)
{
  std::string text = read_file(cfg.input);
  try {
    return gc::parse_document(text);
  } catch (const gc::ParseError& e) {
    throw InputError(cfg.input + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.message());
  } catch (const std::invalid_argument& e) {
    throw InputError(cfg.input + ": " + e.what());
  }
}

gc::IdealPresentation load_ideal(const JobConfig& cfg)
{
  auto doc = load(cfg);
  if (!std::holds_alternative<gc::ParsedIdeal>(doc))
    throw InputError(cfg.input + ": expected an ideal, found a hypersurface");
  return std::get<gc::ParsedIdeal>(doc).ideal;
}

gc::RigidHypersurface load_hypersurface(const JobConfig& cfg)
{
  auto doc = load(cfg);
  if (!std::holds_alternative<gc::ParsedHypersurface>(doc))
    throw InputError(cfg.input + ": expected a hypersurface, found an ideal");
  return std::get<gc::ParsedHypersurface>(doc).to_rigid();
}

int exit_code_for(const gc::InvariantReport& r)
{
  int code = exit_ok;
  if (r.status == gc::Status::TruncationLimited)
    return exit_truncation;
  if (r.status == gc::Status::Bracket)
    code = exit_inconclusive;
  for (const auto& x : r.related)
    if (x.status == gc::Status::TruncationLimited)
      return exit_truncation;
  return code;
}

std::string orders_text(const std::vector<std::optional<int>>& orders)
{
  std::string s = "[";
  for (std::size_t i = 0; i < orders.size(); ++i)
    s += (i ? ", " : "") + (orders[i] ? std::to_string(*orders[i]) : std::string("vanishes"));
  return s + "]";
}

void print_table(std::ostream& out, const gc::InvariantReport& r, const std::string& indent = "")
{
  out << indent << gc::to_string(r.name);
  if (r.q > 1)
    out << " (q = " << r.q << ")";
  out << " of " << r.ideal.to_string() << "\n";
  out << indent << "  value   " << r.value_string() << "\n";
  out << indent << "  status  " << gc::to_string(r.status) << "\n";
  if (r.seed)
    out << indent << "  seed    " << *r.seed << "\n";
  for (const auto& w : r.witnesses) {
    out << indent << "  witness " << w.role << "\n";
    out << indent << "    curve  " << w.curve.to_string() << "\n";
    if (!w.curve.field.is_rationals())
      out << indent << "    field  Q(a), " << w.curve.field.tower().back() << "\n";
    out << indent << "    orders " << orders_text(w.generator_orders) << ", curve order " << w.curve_order
        << ", ratio " << w.ratio.to_string() << "\n";
  }
  if (!r.samples.empty()) {
    out << indent << "  samples\n";
    for (const auto& s : r.samples) {
      std::string forms;
      for (const auto& f : s.forms)
        forms += (forms.empty() ? "" : ", ") + f.to_string();
      std::string value = s.lower == s.upper ? s.lower.to_string()
                                             : "[" + s.lower.to_string() + ", " + s.upper.to_string() + "]";
      out << indent << "    " << s.label << "  (" << forms << ")  " << value << "  " << gc::to_string(s.status)
          << "\n";
    }
  }
  for (const auto& n : r.notes)
    out << indent << "  note    " << n << "\n";
  for (const auto& x : r.related) {
    out << indent << "  related\n";
    print_table(out, x, indent + "    ");
  }
}

// Serializes, reads back and recomputes every witness order.
bool revalidate_report(const gc::InvariantReport& r)
{
  json j = gc::json::report_to_json(r);
  gc::InvariantReport back = gc::json::report_from_json(j);
  bool ok = true;
  if (gc::json::report_to_json(back) != j) {
    std::cerr << "revalidation: JSON round trip changed the report\n";
    ok = false;
  }
  for (const auto& p : gc::revalidate(back)) {
    std::cerr << "revalidation: " << p << "\n";
    ok = false;
  }
  return ok;
}

int emit_reports(const JobConfig& cfg, const std::vector<gc::InvariantReport>& reports)
{
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back(gc::json::report_to_json(r));
    json top{{"schema_version", gc::json::schema_version},
             {"command", cfg.command},
             {"input", cfg.input},
             {"reports", arr},
             {"timing", nullptr}};
    std::cout << top.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i)
        std::cout << "\n";
      print_table(std::cout, reports[i]);
    }
  }
  int code = exit_ok;
  for (const auto& r : reports) {
    int c = exit_code_for(r);
    if (c == exit_truncation || (c == exit_inconclusive && code == exit_ok))
      code = c;
  }
  if (cfg.revalidate) {
    bool ok = true;
    for (const auto& r : reports)
      ok = revalidate_report(r) && ok;
    if (!ok)
      return exit_failure;
    std::cerr << "revalidation: all witness orders reproduced\n";
  }
  return code;
}

int run_mult(const JobConfig& cfg)
{
  gc::IdealPresentation ideal = load_ideal(cfg);
  gc::MultiplicityResult m = gc::mult(ideal, cfg.options().mult_cap);
  if (cfg.format == "json") {
    json top{{"schema_version", gc::json::schema_version},
             {"command", cfg.command},
             {"input", cfg.input},
             {"ideal", gc::json::ideal_to_json(ideal)},
             {"multiplicity", gc::json::multiplicity_to_json(m)},
             {"timing", nullptr}};
    std::cout << top.dump(2) << "\n";
  } else {
    std::cout << "mult of " << ideal.to_string() << "\n";
    std::cout << "  value   " << m.to_string() << "\n";
    if (m.finite())
      std::cout << "  stable  from degree " << m.stabilization_degree << "\n";
    if (!m.diagnostic.empty())
      std::cout << "  note    " << m.diagnostic << "\n";
  }
  return m.finite() || m.proven_infinite ? exit_ok : exit_inconclusive;
}

int run_verify(const JobConfig& cfg)
{
  gc::reference::RowConfig rc{cfg.plan(), cfg.options()};
  bool all_match = true, any_limited = false;
  json rows = json::array();
  if (cfg.format == "table")
    std::cout << "row    result              expected       computed       quantity\n";
  for (const auto& row : gc::reference::rows()) {
    gc::reference::RowResult res;
    try {
      res = row.run(rc);
    } catch (const gc::TruncationError& e) {
      res = {std::string("truncation: ") + e.what(), true};
    }
    bool match = !res.limited && res.computed == row.expected;
    std::string verdict = match ? "PASS" : res.limited ? "TRUNCATION_LIMITED" : "FAIL";
    all_match = all_match && match;
    any_limited = any_limited || res.limited;
    if (cfg.format == "table") {
      std::cout << std::left << std::setw(7) << row.id << std::setw(20) << verdict << std::setw(14) << row.expected << " "
                << std::setw(14) << res.computed << " " << row.quantity << "\n";
    } else {
      rows.push_back(json{{"id", row.id},
                          {"quantity", row.quantity},
                          {"expected", row.expected},
                          {"computed", res.computed},
                          {"result", verdict}});
    }
  }
  if (cfg.format == "json") {
    json top{{"schema_version", gc::json::schema_version},
             {"command", cfg.command},
             {"seed", std::to_string(cfg.seed)},
             {"rows", rows},
             {"all_match", all_match},
             {"timing", nullptr}};
    std::cout << top.dump(2) << "\n";
  } else {
    std::cout << (all_match ? "all rows match\n" : "some rows do not match\n");
  }
  if (any_limited)
    return exit_truncation;
  return all_match ? exit_ok : exit_failure;
}

int run(const JobConfig& cfg)
{
  const auto plan = cfg.plan();
  const auto opt = cfg.options();
  if (cfg.command == "verify-paper")
    return run_verify(cfg);
  if (cfg.command == "mult")
    return run_mult(cfg);
  if (cfg.command == "hyper") {
    gc::RigidHypersurface m = load_hypersurface(cfg);
    std::vector<gc::InvariantReport> reports{gc::delta1(m, opt)};
    if (cfg.q > 1) {
      reports.push_back(gc::deltaq(m, cfg.q, plan, opt));
      reports.push_back(gc::deltaq_generic(m, cfg.q, plan, opt));
    }
    reports.push_back(gc::catlinq_hyper(m, cfg.q, plan, opt));
    return emit_reports(cfg, reports);
  }
  gc::IdealPresentation ideal = load_ideal(cfg);
  if (cfg.command == "type1")
    return emit_reports(cfg, {gc::type1(ideal, opt)});
  if (cfg.command == "typeq")
    return emit_reports(cfg, {gc::typeq(ideal, cfg.q, plan, {}, opt)});
  if (cfg.command == "betaq")
    return emit_reports(cfg, {gc::betaq(ideal, cfg.q, plan, opt)});
  if (cfg.command == "catlinq")
    return emit_reports(cfg, {gc::catlin_q(ideal, cfg.q, plan, opt)});
  throw InputError("unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Order-of-contact invariants of polynomial ideals and rigid hypersurfaces at the origin"};
  app.require_subcommand(1);
  JobConfig cfg;

  struct SubcommandInfo {
    const char* name;
    const char* help;
    bool needs_input;
  };
  const SubcommandInfo subcommands[] = {
      {"type1", "1-type T1 of an ideal", true},
      {"typeq", "q-type Tq of an ideal", true},
      {"betaq", "generic value of T1 after adjoining q - 1 random linear forms", true},
      {"catlinq", "Catlin q-type Dq with the slicing lower bound", true},
      {"mult", "multiplicity (colength) of an ideal", true},
      {"hyper", "Delta invariants of a rigid hypersurface", true},
      {"verify-paper", "recompute the built-in table of known values", false},
  };
  for (const SubcommandInfo& s : subcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.needs_input)
      sub->add_option("input", cfg.input, ".germ input file")->required();
    sub->add_option("--q", cfg.q, "q (number of adjoined forms plus one)")->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.samples, "random samples per stage")->check(CLI::Range(2, 1000));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--height", cfg.height, "coefficient height of random forms")->check(CLI::PositiveNumber);
    sub->add_option("--trunc", cfg.trunc, "truncation cap for power series")->check(CLI::Range(1, 100000));
    sub->add_option("--max-degree", cfg.max_degree, "degree of searched polynomial curves")->check(CLI::Range(1, 8));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--revalidate", cfg.revalidate, "serialize, reload and recompute every witness order");
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    return run(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const gc::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_truncation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_failure;
  }
}
