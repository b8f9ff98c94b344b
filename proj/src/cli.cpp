#include "neu/cli.hpp"

#include "neu/concepts.hpp"
#include "neu/connectors.hpp"
#include "neu/error.hpp"
#include "neu/expr.hpp"
#include "neu/nprob.hpp"
#include "neu/nset.hpp"
#include "neu/orientation.hpp"
#include "neu/sweep.hpp"
#include "neu/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace neu::cli {

namespace {

using nlohmann::json;

constexpr const char* kGrammarHelp = R"(Expression grammar (loosest to tightest):
  a <-> b      equivalence            (IFF, left-assoc)
  a -> b       implication            (IMPLIES, right-assoc)
  a |w b       weak disjunction       (OR)     a !| b  Peirce (NOR)
  a |s b       strong disjunction     (XOR)
  a & b        conjunction            (AND)    a !& b  Sheffer (NAND)
  !a           negation               (NOT)
Atoms are identifiers bound with --bind NAME=t,i,f. Literals (t,i,f) may
appear anywhere an atom can; (t,i,f)% reads the components as percents.)";

/// Invalid command-line syntax that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed6(double x)
{
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string triple_text(const Triple& v)
{
  return "(" + fixed6(v.t()) + "," + fixed6(v.i()) + "," + fixed6(v.f()) + ")";
}

json triple_json(const Triple& v) { return json{{"t", v.t()}, {"i", v.i()}, {"f", v.f()}}; }

double parse_number(const std::string& text, const std::string& what)
{
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != last) {
    throw UsageError("malformed number '" + text + "' in " + what);
  }
  return value;
}

bool is_identifier(const std::string& s)
{
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

void parse_binding(const std::string& spec, bool percent, Environment& env)
{
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw UsageError("binding '" + spec + "' must look like NAME=t,i,f");
  const std::string name = spec.substr(0, eq);
  if (!is_identifier(name)) throw UsageError("binding name '" + name + "' is not an identifier");
  std::vector<double> values;
  std::string rest = spec.substr(eq + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    values.push_back(parse_number(rest.substr(start, comma - start), "binding '" + spec + "'"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 3) throw UsageError("binding '" + spec + "' needs exactly three components");
  const Triple v = percent ? from_percent(values[0], values[1], values[2])
                           : make_triple(values[0], values[1], values[2]);
  env.insert_or_assign(name, v);
}

ConnectorKind parse_kind(const std::string& s)
{
  struct Alias {
    const char* name;
    ConnectorKind kind;
  };
  static constexpr Alias aliases[] = {
      {"not", ConnectorKind::Negation},           {"negation", ConnectorKind::Negation},
      {"and", ConnectorKind::Conjunction},        {"conjunction", ConnectorKind::Conjunction},
      {"or", ConnectorKind::WeakDisjunction},     {"weak-disjunction", ConnectorKind::WeakDisjunction},
      {"xor", ConnectorKind::StrongDisjunction},  {"strong-disjunction", ConnectorKind::StrongDisjunction},
      {"implies", ConnectorKind::Implication},    {"implication", ConnectorKind::Implication},
      {"iff", ConnectorKind::Equivalence},        {"equivalence", ConnectorKind::Equivalence},
      {"nand", ConnectorKind::Sheffer},           {"sheffer", ConnectorKind::Sheffer},
      {"nor", ConnectorKind::Peirce},             {"peirce", ConnectorKind::Peirce},
  };
  for (const auto& a : aliases) {
    if (s == a.name) return a.kind;
  }
  for (ConnectorKind k : kAllConnectors) {
    if (s == connector_symbol(k)) return k;
  }
  throw UsageError("unknown connector '" + s + "'");
}

TopoSet parse_topo(const std::string& s)
{
  if (s == "empty") return TopoSet::empty();
  if (s == "whole") return TopoSet::whole();
  const double p = parse_number(s, "topology operand");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::OutOfRange, "operand " + s + " is outside [0,1]");
  return TopoSet::interval(p);
}

std::string topo_text(const TopoSet& s)
{
  std::string out = fixed6(s.parameter());
  switch (s.kind()) {
    case TopoSet::Kind::Empty: return out + " empty";
    case TopoSet::Kind::Whole: return out + " whole";
    case TopoSet::Kind::Open: break;
  }
  return s.closed() ? out + " closed" : out;
}

void print_set(const NeutrosophicSet& s, bool as_json, std::ostream& out)
{
  if (as_json) {
    out << set_to_json(s) << "\n";
    return;
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    out << s.universe()[k] << " " << triple_text(s[k]) << "\n";
  }
}

std::string join(const AttributeSet& s)
{
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += x;
    first = false;
  }
  return out + "}";
}

struct Options {
  // eval
  std::string expression;
  std::vector<std::string> bindings;
  bool percent = false;
  bool as_json = false;
  // classify
  double s = 0, i = 0, u = 0;
  std::string table_path;
  // set
  std::string set_a, set_b;
  // prob
  std::string events_path, event_a, event_b, kind;
  double pool_a = 0, pool_r = 0, pool_p = 0, theta = 0;
  // topo
  std::string topo_a, topo_b;
  // concepts
  std::string concepts_path;
  // props
  double step = 0.01;
  std::uint64_t seed = 0;
  bool serial = false;
  std::size_t closure_cases = 100000;
};

int cmd_eval(const Options& o, std::ostream& out)
{
  Environment env;
  for (const auto& b : o.bindings) parse_binding(b, o.percent, env);
  const ExprPtr e = parse_expression(o.expression, o.percent ? LiteralScale::Percent : LiteralScale::Unit);
  const Triple v = evaluate(*e, env);
  if (o.as_json) {
    out << triple_json(v).dump() << "\n";
  } else {
    out << triple_text(v) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out)
{
  const OrientationTable table = o.table_path.empty() ? builtin_table() : load_table(o.table_path);
  const Classification c = classify(SystemAssessment(o.s, o.i, o.u), table);
  if (o.as_json) {
    out << json{{"model", c.model},
                {"distance", c.distance},
                {"interval", {c.stability.lo, c.stability.hi}}}
               .dump()
        << "\n";
  } else {
    out << c.model << " distance=" << shortest_decimal(c.distance) << " interval=["
        << shortest_decimal(c.stability.lo) << "," << shortest_decimal(c.stability.hi) << "]\n";
  }
  return kExitOk;
}

int cmd_set(const std::string& op, const Options& o, std::ostream& out, std::ostream& err)
{
  const NeutrosophicSet a = load_set(o.set_a, &err);
  if (op == "complement") {
    print_set(set_complement(a), o.as_json, out);
    return kExitOk;
  }
  const NeutrosophicSet b = load_set(o.set_b, &err);
  if (op == "product") {
    const auto pairs = set_product(a, b);
    if (o.as_json) {
      json arr = json::array();
      for (const auto& [x, y] : pairs) {
        arr.push_back({{{"element", x.element}, {"membership", {x.membership.t(), x.membership.i(), x.membership.f()}}},
                       {{"element", y.element}, {"membership", {y.membership.t(), y.membership.i(), y.membership.f()}}}});
      }
      out << arr.dump(2) << "\n";
    } else {
      for (const auto& [x, y] : pairs) {
        out << "(" << x.element << " " << triple_text(x.membership) << ", " << y.element << " "
            << triple_text(y.membership) << ")\n";
      }
    }
    return kExitOk;
  }
  NeutrosophicSet r = op == "intersect" ? set_intersect(a, b)
                      : op == "union"   ? set_union(a, b)
                                        : set_difference(a, b);
  print_set(r, o.as_json, out);
  return kExitOk;
}

int cmd_prob(const std::string& op, const Options& o, std::ostream& out)
{
  if (op == "resolve") {
    const PendingPool pool(o.pool_a, o.pool_r, o.pool_p);
    const Resolution r = resolve_pending(pool, o.theta);
    const Interval bound = true_bound(pool.as_triple());
    if (o.as_json) {
      out << json{{"accepted", r.accepted}, {"rejected", r.rejected}, {"bound", {bound.lo, bound.hi}}}.dump()
          << "\n";
    } else {
      out << "accepted=" << fixed6(r.accepted) << " rejected=" << fixed6(r.rejected) << " bound=["
          << fixed6(bound.lo) << "," << fixed6(bound.hi) << "]\n";
    }
    return kExitOk;
  }

  const EventSpace space = load_events(o.events_path);
  if (op == "chance") {
    const Triple v = event_chance(space, o.event_a);
    out << (o.as_json ? triple_json(v).dump() : triple_text(v)) << "\n";
    return kExitOk;
  }
  if (op == "combine") {
    const ConnectorKind kind = parse_kind(o.kind);
    if (!is_unary(kind) && o.event_b.empty()) throw UsageError("combine " + o.kind + " needs two events");
    const Triple v = combine_events(space, kind, o.event_a, o.event_b);
    if (o.as_json) {
      json j = triple_json(v);
      j["connector"] = std::string(connector_name(kind));
      j["combination"] = "independence-style";
      out << j.dump() << "\n";
    } else {
      const std::string args = is_unary(kind) ? o.event_a : o.event_a + ", " + o.event_b;
      out << connector_name(kind) << "(" << args << ") = " << triple_text(v)
          << " [independence-style combination]\n";
    }
    return kExitOk;
  }
  const EventSummary s = summarize(space);
  if (o.as_json) {
    out << json{{"count", s.count},
                {"mean", triple_json(s.mean)},
                {"min", {s.min.t, s.min.i, s.min.f}},
                {"max", {s.max.t, s.max.i, s.max.f}}}
               .dump()
        << "\n";
  } else {
    out << "count=" << s.count << " mean=" << triple_text(s.mean) << " min=(" << fixed6(s.min.t) << ","
        << fixed6(s.min.i) << "," << fixed6(s.min.f) << ") max=(" << fixed6(s.max.t) << ","
        << fixed6(s.max.i) << "," << fixed6(s.max.f) << ")\n";
  }
  return kExitOk;
}

int cmd_topo(const std::string& op, const Options& o, std::ostream& out)
{
  const TopoSet a = parse_topo(o.topo_a);
  TopoSet r = TopoSet::empty();
  if (op == "complement") {
    r = topo_complement(a);
  } else {
    if (o.topo_b.empty()) throw UsageError("topo " + op + " needs two operands");
    const TopoSet b = parse_topo(o.topo_b);
    r = op == "union" ? topo_union(a, b) : topo_intersect(a, b);
  }
  out << topo_text(r) << "\n";
  return kExitOk;
}

int cmd_concepts(const Options& o, std::ostream& out)
{
  const ConceptUniverse u = load_concepts(o.concepts_path);
  const LawReport report = verify_laws(u);
  if (o.as_json) {
    json laws = json::array();
    for (const auto& l : report.laws) laws.push_back({{"law", l.name}, {"passed", l.passed}});
    out << json{{"non_a", non_of(u)}, {"neut_a", neut_of(u)}, {"laws", laws}, {"all_passed", report.all_passed()}}
               .dump(2)
        << "\n";
  } else {
    out << "Non-A = " << join(non_of(u)) << "\n";
    out << "Neut-A = " << join(neut_of(u)) << "\n";
    for (const auto& l : report.laws) out << (l.passed ? "PASS " : "FAIL ") << l.name << "\n";
  }
  return report.all_passed() ? kExitOk : kExitDomain;
}

int cmd_props(const Options& o, std::ostream& out)
{
  SweepOptions opt;
  opt.step = o.step;
  opt.seed = o.seed;
  opt.exec = o.serial ? Execution::Serial : Execution::Parallel;
  opt.closure_cases = o.closure_cases;
  const SweepReport report = run_sweep(opt);
  out << (o.as_json ? report_json(report) + "\n" : report_text(report));
  return report.all_passed() ? kExitOk : kExitDomain;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"neu: neutrosophic logic, sets, probability, topology and orientation tables", "neu"};
  app.require_subcommand(1);
  app.footer(kGrammarHelp);

  Options o;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a propositional expression");
  eval->add_option("expression", o.expression, "Expression to evaluate")->required();
  eval->add_option("-b,--bind", o.bindings, "Bind an atom: NAME=t,i,f (repeatable)");
  eval->add_flag("--percent", o.percent, "Read bindings and bare literals on the [0,100] scale")
      ->envname("NEU_PERCENT");
  eval->add_flag("--json", o.as_json, "Print {\"t\":..,\"i\":..,\"f\":..} at full precision");
  eval->footer(kGrammarHelp);

  CLI::App* cls = app.add_subcommand("classify", "Place a system on the orientation table");
  cls->add_option("--s", o.s, "Stable percent")->required();
  cls->add_option("--i", o.i, "Indeterminate percent")->required();
  cls->add_option("--u", o.u, "Unstable percent")->required();
  cls->add_option("--table", o.table_path, "Custom table JSON file");
  cls->add_flag("--json", o.as_json, "JSON output");

  CLI::App* set = app.add_subcommand("set", "Neutrosophic set operations on JSON set files");
  set->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> set_ops;
  for (const char* op : {"complement", "intersect", "union", "difference", "product"}) {
    CLI::App* sub = set->add_subcommand(op, std::string("Set ") + op);
    sub->add_option("first", o.set_a, "Set file")->required();
    if (std::string(op) != "complement") sub->add_option("second", o.set_b, "Set file")->required();
    sub->add_flag("--json", o.as_json, "JSON output");
    set_ops.emplace_back(op, sub);
  }

  CLI::App* prob = app.add_subcommand("prob", "Neutrosophic probability over named events");
  prob->require_subcommand(1);
  CLI::App* chance = prob->add_subcommand("chance", "Chance of one event");
  chance->add_option("events", o.events_path, "Events JSON file")->required();
  chance->add_option("event", o.event_a, "Event name")->required();
  chance->add_flag("--json", o.as_json, "JSON output");
  CLI::App* combine = prob->add_subcommand("combine", "Combine events with a connector (independence reading)");
  combine->add_option("events", o.events_path, "Events JSON file")->required();
  combine->add_option("connector", o.kind, "and|or|xor|implies|iff|nand|nor|not")->required();
  combine->add_option("a", o.event_a, "First event")->required();
  combine->add_option("b", o.event_b, "Second event (not for 'not')");
  combine->add_flag("--json", o.as_json, "JSON output");
  CLI::App* resolve = prob->add_subcommand("resolve", "Resolve pending mass into accepted/rejected");
  resolve->add_option("--a", o.pool_a, "Accepted fraction")->required();
  resolve->add_option("--r", o.pool_r, "Rejected fraction")->required();
  resolve->add_option("--p", o.pool_p, "Pending fraction")->required();
  resolve->add_option("--theta", o.theta, "Share of pending that ends up accepted")->required();
  resolve->add_flag("--json", o.as_json, "JSON output");
  CLI::App* summary = prob->add_subcommand("summary", "Mean, min and max over all events");
  summary->add_option("events", o.events_path, "Events JSON file")->required();
  summary->add_flag("--json", o.as_json, "JSON output");

  CLI::App* topo = app.add_subcommand("topo", "Interval topology on [0,1]");
  topo->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> topo_ops;
  for (const char* op : {"union", "intersect", "complement"}) {
    CLI::App* sub = topo->add_subcommand(op, std::string("Topology ") + op + " of (0,p) [and (0,q)]");
    sub->add_option("p", o.topo_a, "Parameter in [0,1], or 'empty' / 'whole'")->required();
    if (std::string(op) != "complement") sub->add_option("q", o.topo_b, "Second parameter")->required();
    topo_ops.emplace_back(op, sub);
  }

  CLI::App* concepts = app.add_subcommand("concepts", "A / Anti-A / Neut-A / Non-A algebra");
  concepts->require_subcommand(1);
  CLI::App* check = concepts->add_subcommand("check", "Verify the neutrality laws for a universe file");
  check->add_option("file", o.concepts_path, "Concept universe JSON file")->required();
  check->add_flag("--json", o.as_json, "JSON output");

  CLI::App* props = app.add_subcommand("props", "Sweep every connector, set and topology law");
  props->add_option("--step", o.step, "Grid step in (0, 0.5]")
      ->default_val(0.01)
      ->check([](const std::string& s) -> std::string {
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || !(v > 0.0 && v <= 0.5)) return "step must lie in (0, 0.5]";
        return {};
      });
  props->add_option("--seed", o.seed, "Seed for the randomized cases")->default_val(0);
  props->add_option("--closure-cases", o.closure_cases, "Random connector applications")
      ->default_val(100000)
      ->check(CLI::PositiveNumber);
  props->add_flag("--serial", o.serial, "Use the serial reference instead of OpenMP");
  props->add_flag("--json", o.as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0) err << app.help();
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    for (const auto& [op, sub] : set_ops) {
      if (sub->parsed()) return cmd_set(op, o, out, err);
    }
    if (chance->parsed()) return cmd_prob("chance", o, out);
    if (combine->parsed()) return cmd_prob("combine", o, out);
    if (resolve->parsed()) return cmd_prob("resolve", o, out);
    if (summary->parsed()) return cmd_prob("summary", o, out);
    for (const auto& [op, sub] : topo_ops) {
      if (sub->parsed()) return cmd_topo(op, o, out);
    }
    if (check->parsed()) return cmd_concepts(o, out);
    if (props->parsed()) return cmd_props(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (eval->parsed() && e.position() && *e.position() <= o.expression.size()) {
      err << "  " << o.expression << "\n  " << std::string(*e.position(), ' ') << "^\n";
    }
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace neu::cli
