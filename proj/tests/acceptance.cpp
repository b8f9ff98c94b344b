// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "neu/concepts.hpp"
#include "neu/connectors.hpp"
#include "neu/error.hpp"
#include "neu/expr.hpp"
#include "neu/nprob.hpp"
#include "neu/nset.hpp"
#include "neu/orientation.hpp"
#include "neu/random.hpp"
#include "neu/sweep.hpp"
#include "neu/topology.hpp"
#include "oracle/concept_oracle.hpp"
#include "oracle/rational_oracle.hpp"
#include "support/random_ast.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

using namespace neu;

namespace {

const std::string kData = NEU_TEST_DATA_DIR;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, auto... args)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double dev(const Triple& a, const Triple& b)
{
  return std::max({std::abs(a.t() - b.t()), std::abs(a.i() - b.i()), std::abs(a.f() - b.f())});
}

double dev(const Triple& a, const oracle::Tri& b)
{
  return std::max({std::abs(a.t() - oracle::to_double(b.t)), std::abs(a.i() - oracle::to_double(b.i)),
                   std::abs(a.f() - oracle::to_double(b.f))});
}

const std::vector<double>& grid()
{
  static const std::vector<double> g = sweep_grid(0.01);
  return g;
}

/// A triple with truth p and the rest split unevenly, so i and f differ.
Triple with_truth(double p) { return renormalize({p, 0.3, 0.7}); }

Outcome worked_values()
{
  const Triple election = make_triple(0.25, 0.40, 0.35);
  const Triple rain = make_triple(0.50, 0.20, 0.30);
  bool ok = true;

  const EventSpace space = load_events(kData + "/events.json");
  ok &= event_chance(space, "election") == election;
  ok &= event_chance(space, "rain") == rain;

  const Environment env{{"election", election}, {"rain", rain}};
  ok &= evaluate(*parse_expression("election"), env) == election;
  ok &= evaluate(*parse_expression("rain"), env) == rain;
  ok &= evaluate(*parse_expression("(0.25,0.40,0.35)"), {}) == election;

  const Triple x = from_percent(50, 20, 30);
  const Triple lit = parse_expression("(50,20,30)", LiteralScale::Percent)->value();
  const Triple lit2 = parse_expression("(50,20,30)%")->value();
  ok &= x == make_triple(0.5, 0.2, 0.3) && lit == x && lit2 == x;
  return {ok, "election/rain bit-exact; x(50,20,30) -> (0.5,0.2,0.3)"};
}

Outcome normalization_closure()
{
  constexpr std::size_t kCases = 100000;
  std::size_t failures = 0;
  double worst = 0.0;
  for (std::size_t k = 0; k < kCases; ++k) {
    SeededRng rng = SeededRng::for_case(2718, 1, k);
    const ConnectorKind kind = kAllConnectors[k % kAllConnectors.size()];
    const Triple a = rng.triple();
    const Triple b = rng.triple();
    const Triple r = is_unary(kind) ? negate(a) : apply_binary(kind, a, b);
    const double e = normalization_error(r);
    worst = std::max(worst, e);
    const bool in_range = r.t() >= 0 && r.t() <= 1 && r.i() >= 0 && r.i() <= 1 && r.f() >= 0 && r.f() <= 1;
    if (!in_range || e > kEpsNorm) ++failures;
  }
  return {failures == 0, fmt("cases=%zu failures=%zu max_sum_error=%.3e", kCases, failures, worst)};
}

Outcome conj_disj_bounds()
{
  std::size_t violations = 0;
  for (double p : grid()) {
    for (double q : grid()) {
      const Triple a = with_truth(p);
      const Triple b = with_truth(q);
      if (apply_binary(ConnectorKind::Conjunction, a, b).t() > std::min(a.t(), b.t())) ++violations;
      if (apply_binary(ConnectorKind::WeakDisjunction, a, b).t() < std::max(a.t(), b.t())) ++violations;
    }
  }
  return {violations == 0, fmt("grid=%zux%zu violations=%zu", grid().size(), grid().size(), violations)};
}

Outcome iterated_limits()
{
  const std::vector<Triple> hi(200, make_triple(0.9, 0.05, 0.05));
  const std::vector<Triple> lo(200, make_triple(0.1, 0.45, 0.45));
  const double c = apply_nary(ConnectorKind::Conjunction, hi).t();
  const double d = apply_nary(ConnectorKind::WeakDisjunction, lo).t();
  Triple cs = hi[0], ds = lo[0];
  for (int k = 1; k < 200; ++k) {
    cs = apply_binary(ConnectorKind::Conjunction, cs, hi[k]);
    ds = apply_binary(ConnectorKind::WeakDisjunction, ds, lo[k]);
  }
  const bool ok = c < 1e-9 && d > 1 - 1e-9 && cs.t() < 1e-9 && ds.t() > 1 - 1e-9;
  return {ok, fmt("C^200(0.9)=%.3e D1^200(0.1)=1-%.3e", c, 1 - d)};
}

Outcome implication_limits()
{
  double worst = 0.0;
  for (double v : grid()) {
    worst = std::max({worst, std::abs(kernel::implication(0, v) - 1), std::abs(kernel::implication(v, 1) - 1),
                      std::abs(kernel::implication(1, v) - v), std::abs(kernel::implication(v, 0) - (1 - v))});
  }
  return {worst < 1e-12, fmt("max_dev=%.3e", worst)};
}

Outcome equivalence_laws()
{
  double sym = 0.0, poly = 0.0;
  for (double p : grid()) {
    for (double q : grid()) {
      const double e = kernel::equivalence(p, q);
      sym = std::max({sym, std::abs(e - kernel::equivalence(q, p)), std::abs(e - kernel::equivalence(1 - p, 1 - q))});
      if (q > 0 && q < 1) poly = std::max(poly, std::abs(e - parabola_analysis(q).value(p)));
    }
  }
  double argmax_err = 0.0;
  for (int j = 1; j <= 9; ++j) {
    const double q = j / 10.0;
    double best_p = 0.0, best = -1.0;
    for (int k = 0; k <= 10000; ++k) {
      const double p = k / 10000.0;
      const double e = kernel::equivalence(p, q);
      if (e > best) {
        best = e;
        best_p = p;
      }
    }
    argmax_err = std::max(argmax_err, std::abs(best_p - parabola_analysis(q).p_max_clamped));
  }
  const bool ok = sym < 1e-12 && poly < 1e-12 && argmax_err < 1e-3;
  return {ok, fmt("symmetry_dev=%.3e parabola_dev=%.3e argmax_err=%.3e", sym, poly, argmax_err)};
}

Outcome set_identity()
{
  const Universe u({"a", "b", "c", "d", "e", "f", "g", "h"});
  double worst = 0.0;
  for (std::size_t k = 0; k < 1000; ++k) {
    SeededRng rng = SeededRng::for_case(31415, 7, k);
    std::vector<Triple> m, n;
    for (std::size_t e = 0; e < u.size(); ++e) {
      m.push_back(rng.triple());
      n.push_back(rng.triple());
    }
    const NeutrosophicSet sm(u, m), sn(u, n);
    const NeutrosophicSet lhs = set_difference(sm, sn);
    const NeutrosophicSet rhs = set_intersect(sm, set_complement(sn));
    for (std::size_t e = 0; e < u.size(); ++e) worst = std::max(worst, dev(lhs[e], rhs[e]));
  }
  return {worst < 1e-12, fmt("sets=1000 size=8 max_dev=%.3e", worst)};
}

Outcome sheffer_peirce()
{
  double worst = 0.0;
  for (double p : grid()) {
    for (double q : grid()) {
      worst = std::max({worst,
                        std::abs(kernel::sheffer(p, q) - kernel::weak_disjunction(1 - p, 1 - q)),
                        std::abs(kernel::peirce(p, q) - kernel::conjunction(1 - p, 1 - q))});
    }
  }
  return {worst < 1e-12, fmt("max_dev=%.3e", worst)};
}

Outcome topology()
{
  double worst = 0.0;
  bool closed = true;
  for (double p : grid()) {
    for (double q : grid()) {
      const IsoReport r = iso_check(p, q);
      for (const auto& id : r.identities) {
        if (id.name != "complement=N") worst = std::max(worst, id.deviation);
        closed &= id.topo_value >= 0.0 && id.topo_value <= 1.0;
      }
    }
  }
  return {worst < 1e-12 && closed, fmt("max_dev=%.3e closure=%s", worst, closed ? "yes" : "no")};
}

Outcome orientation()
{
  const OrientationTable& t = builtin_table();
  bool ok = t.size() == 7;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Classification c = classify(SystemAssessment(t[k].stable, 0, t[k].unstable), t);
    ok &= c.model == t[k].name && c.distance == 0.0;
  }
  const Classification c = classify(SystemAssessment(55, 10, 35), t);
  ok &= c.model == "M4" && c.stability.lo == 55.0 && c.stability.hi == 65.0;

  const auto path = std::filesystem::temp_directory_path() / "neu_acceptance_table.json";
  {
    std::ofstream f(path);
    f << table_to_json(t);
  }
  ok &= load_table(path.string()) == t;
  std::filesystem::remove(path);
  ok &= load_table(kData + "/orientation_builtin.json") == t;
  return {ok, fmt("(55,10,35) -> %s interval=[%g,%g]", c.model.c_str(), c.stability.lo, c.stability.hi)};
}

Outcome concepts()
{
  bool ok = verify_laws(load_concepts(kData + "/colors.json")).all_passed();
  std::size_t agree = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    SeededRng rng = SeededRng::for_case(1618, 11, k);
    const std::size_t n = 1 + rng.below(40);
    std::vector<std::string> attrs;
    AttributeSet a, anti;
    oracle::ConceptMasks m{0, 0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      attrs.push_back("c" + std::to_string(j));
      const std::uint64_t bit = std::uint64_t{1} << j;
      m.all |= bit;
      const auto r = rng.below(3);
      if (r == 0) {
        a.insert(attrs.back());
        m.a |= bit;
      } else if (r == 1) {
        anti.insert(attrs.back());
        m.anti |= bit;
      }
    }
    const bool engine = verify_laws(ConceptUniverse(attrs, a, anti)).all_passed();
    if (engine && oracle::concept_laws_hold(m)) ++agree;
  }
  ok &= agree == 1000;
  return {ok, fmt("white/black passes; random universes passing both=%zu/1000", agree)};
}

Outcome parser()
{
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    SeededRng rng = SeededRng::for_case(4242, 13, k);
    const ExprPtr e = support::random_ast(rng, 1 + static_cast<int>(rng.below(8)));
    try {
      if (!(*parse_expression(format(*e)) == *e)) ++mismatches;
    } catch (const Error&) {
      ++mismatches;
    }
  }
  const std::string base = "!P & (0.5, 0.2, 0.3) |w rain -> Q <-> R !& P !| Q |s R";
  std::size_t bad_offsets = 0;
  for (std::size_t k = 0; k <= base.size(); ++k) {
    std::string src = base;
    src.insert(k, 1, '?');
    try {
      parse_expression(src);
      ++bad_offsets;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::LexError || err.position() != k) ++bad_offsets;
    }
  }
  return {mismatches == 0 && bad_offsets == 0,
          fmt("round-trip mismatches=%zu/1000 wrong offsets=%zu/%zu", mismatches, bad_offsets, base.size() + 1)};
}

// Every worked value, computed by the engine and by the exact-rational oracle.
Outcome oracle_equivalence()
{
  using oracle::Op;
  using oracle::Q;
  using oracle::tri;
  struct Case {
    std::string name;
    double value;
    Q expect;
  };
  std::vector<Case> cases;
  auto add_triple = [&](const std::string& name, const Triple& got, const oracle::Tri& ref) {
    cases.push_back({name + ".t", got.t(), ref.t});
    cases.push_back({name + ".i", got.i(), ref.i});
    cases.push_back({name + ".f", got.f(), ref.f});
  };
  auto T = [](double t, double i, double f) { return make_triple(t, i, f); };
  auto X = [](const Triple& v) {
    return oracle::Tri{oracle::exact(v.t()), oracle::exact(v.i()), oracle::exact(v.f())};
  };

  add_triple("renorm(0.2,0.12,0.04)", renormalize({0.2, 0.12, 0.04}), oracle::renorm(tri("0.2", "0.12", "0.04")));
  add_triple("renorm(0.25,0,0)", renormalize({0.25, 0, 0}), oracle::renorm(tri("0.25", "0", "0")));
  {
    const Interval b = true_bound(T(0.25, 0.40, 0.35));
    cases.push_back({"bound.lo", b.lo, oracle::dec("0.25")});
    cases.push_back({"bound.hi", b.hi, oracle::dec("0.25") + oracle::dec("0.40")});
  }
  add_triple("N(1,0,0)", negate(T(1, 0, 0)), oracle::negate(tri("1", "0", "0")));
  add_triple("N(0,.5,.5)", negate(T(0, 0.5, 0.5)), oracle::negate(tri("0", "0.5", "0.5")));
  add_triple("N(election)", negate(T(0.25, 0.40, 0.35)), oracle::negate(tri("0.25", "0.40", "0.35")));
  add_triple("C example", apply_binary(ConnectorKind::Conjunction, T(0.5, 0.3, 0.2), T(0.4, 0.4, 0.2)),
             oracle::binary(Op::C, tri("0.5", "0.3", "0.2"), tri("0.4", "0.4", "0.2")));
  add_triple("I example", apply_binary(ConnectorKind::Implication, T(1, 0, 0), T(0.5, 0.2, 0.3)),
             oracle::binary(Op::I, tri("1", "0", "0"), tri("0.5", "0.2", "0.3")));
  add_triple("C degenerate", apply_binary(ConnectorKind::Conjunction, T(0.5, 0.5, 0), T(0.5, 0, 0.5)),
             oracle::binary(Op::C, tri("0.5", "0.5", "0"), tri("0.5", "0", "0.5")));
  {
    const std::vector<Triple> xs(3, T(0.9, 0.05, 0.05));
    const std::vector<oracle::Tri> ex(3, tri("0.9", "0.05", "0.05"));
    add_triple("C^3(0.9)", apply_nary(ConnectorKind::Conjunction, xs), oracle::nary(Op::C, ex));
    const std::vector<Triple> ys{T(0.5, 0.25, 0.25), T(0, 0.5, 0.5), T(0, 0.5, 0.5)};
    const std::vector<oracle::Tri> ey{tri("0.5", "0.25", "0.25"), tri("0", "0.5", "0.5"), tri("0", "0.5", "0.5")};
    add_triple("D1 fold", apply_nary(ConnectorKind::WeakDisjunction, ys), oracle::nary(Op::D1, ey));
  }
  for (const char* qs : {"0.5", "0.2"}) {
    const ParabolaAnalysis pa = parabola_analysis(std::stod(qs));
    const oracle::Parabola ex = oracle::parabola(oracle::dec(qs));
    const Q clamped = ex.vertex < 0 ? Q(0) : (ex.vertex > 1 ? Q(1) : ex.vertex);
    const Q at = (ex.a * clamped + ex.b) * clamped + ex.c;
    cases.push_back({std::string("pMaxRaw q=") + qs, pa.p_max_raw, ex.vertex});
    cases.push_back({std::string("pMaxClamped q=") + qs, pa.p_max_clamped, clamped});
    cases.push_back({std::string("e_q(pMax) q=") + qs, pa.max_value(), at});
    cases.push_back({std::string("E(pMax,q) q=") + qs, kernel::equivalence(pa.p_max_clamped, std::stod(qs)),
                     oracle::kernel(Op::E, clamped, oracle::dec(qs))});
  }
  cases.push_back({"D2(0.5,0.5)", eval_kernel(ConnectorKind::StrongDisjunction, 0.5, 0.5),
                   oracle::kernel(Op::D2, oracle::dec("0.5"), oracle::dec("0.5"))});
  {
    const Environment env{{"P", T(1, 0, 0)}};
    add_triple("P !& P", evaluate(*parse_expression("P !& P"), env),
               oracle::binary(Op::S, tri("1", "0", "0"), tri("1", "0", "0")));
  }
  {
    const Universe u({"x"});
    auto S = [&](const Triple& v) { return NeutrosophicSet::uniform(u, v); };
    add_triple("complement(1,0,0)", set_complement(S(T(1, 0, 0)))[0], oracle::negate(tri("1", "0", "0")));
    add_triple("complement(0,1,0)", set_complement(S(T(0, 1, 0)))[0], oracle::negate(tri("0", "1", "0")));
    add_triple("intersect example", set_intersect(S(T(0.5, 0.3, 0.2)), S(T(0.4, 0.4, 0.2)))[0],
               oracle::binary(Op::C, tri("0.5", "0.3", "0.2"), tri("0.4", "0.4", "0.2")));
    add_triple("union example", set_union(S(T(0, 0.5, 0.5)), S(T(0, 0.5, 0.5)))[0],
               oracle::binary(Op::D1, tri("0", "0.5", "0.5"), tri("0", "0.5", "0.5")));
    add_triple("difference example", set_difference(S(T(0.5, 0.2, 0.3)), S(T(0.5, 0.2, 0.3)))[0],
               oracle::binary(Op::Diff, tri("0.5", "0.2", "0.3"), tri("0.5", "0.2", "0.3")));
    // Random-set claims: commutativity and the difference identity, against the oracle.
    for (std::size_t k = 0; k < 200; ++k) {
      SeededRng rng = SeededRng::for_case(99, 17, k);
      const Triple a = rng.triple(), b = rng.triple();
      const oracle::Tri ea = X(a), eb = X(b);
      add_triple("intersect comm " + std::to_string(k), set_intersect(S(b), S(a))[0], oracle::binary(Op::C, ea, eb));
      add_triple("union comm " + std::to_string(k), set_union(S(b), S(a))[0], oracle::binary(Op::D1, ea, eb));
      add_triple("diff identity " + std::to_string(k), set_intersect(S(a), set_complement(S(b)))[0],
                 oracle::binary(Op::Diff, ea, eb));
    }
  }
  {
    const EventSpace space = load_events(kData + "/events.json");
    const oracle::Tri el = tri("0.25", "0.40", "0.35"), ra = tri("0.50", "0.20", "0.30");
    add_triple("C(election,rain)", combine_events(space, ConnectorKind::Conjunction, "election", "rain"),
               oracle::binary(Op::C, el, ra));
    add_triple("D1(rain,rain)", combine_events(space, ConnectorKind::WeakDisjunction, "rain", "rain"),
               oracle::binary(Op::D1, ra, ra));
    add_triple("N(rain)", combine_events(space, ConnectorKind::Negation, "rain", ""), oracle::negate(ra));
    const Resolution r = resolve_pending(PendingPool(0.3, 0.5, 0.2), 0.5);
    cases.push_back({"resolve.accepted", r.accepted, oracle::dec("0.3") + oracle::dec("0.5") * oracle::dec("0.2")});
    cases.push_back({"resolve.rejected", r.rejected, oracle::dec("0.5") + oracle::dec("0.5") * oracle::dec("0.2")});
    const EventSummary s = summarize(space);
    add_triple("mean", s.mean, {(el.t + ra.t) / 2, (el.i + ra.i) / 2, (el.f + ra.f) / 2});
  }
  {
    auto I = [](double p) { return TopoSet::interval(p); };
    cases.push_back({"topo (0,.5)u(0,.5)", topo_union(I(0.5), I(0.5)).parameter(),
                     oracle::kernel(Op::D1, oracle::dec("0.5"), oracle::dec("0.5"))});
    cases.push_back({"topo (0,1)u(0,.3)", topo_union(I(1), I(0.3)).parameter(),
                     oracle::kernel(Op::D1, oracle::dec("1"), oracle::dec("0.3"))});
    cases.push_back({"topo (0,.5)n(0,.4)", topo_intersect(I(0.5), I(0.4)).parameter(),
                     oracle::kernel(Op::C, oracle::dec("0.5"), oracle::dec("0.4"))});
    cases.push_back({"topo C(0,.25)", topo_complement(I(0.25)).parameter(),
                     oracle::kernel(Op::N, oracle::dec("0.25"), 0)});
    cases.push_back({"iso(0.5,0.5) union", iso_check(0.5, 0.5).identities[0].logic_value,
                     oracle::kernel(Op::D1, oracle::dec("0.5"), oracle::dec("0.5"))});
    cases.push_back({"iso(0.5,0.5) dev", iso_check(0.5, 0.5).max_deviation, Q(0)});
    double grid_dev = 0.0;
    for (double p : grid()) {
      for (double q : grid()) {
        const double d1 = topo_union(I(p), I(q)).parameter();
        const double c = topo_intersect(I(p), I(q)).parameter();
        grid_dev = std::max({grid_dev,
                             std::abs(d1 - oracle::to_double(oracle::kernel(Op::D1, oracle::exact(p), oracle::exact(q)))),
                             std::abs(c - oracle::to_double(oracle::kernel(Op::C, oracle::exact(p), oracle::exact(q))))});
      }
    }
    cases.push_back({"topo grid max_dev", grid_dev, Q(0)});
  }
  {
    const Classification c = classify(SystemAssessment(55, 10, 35), builtin_table());
    cases.push_back({"classify distance", c.distance, Q(55) - Q(50)});
    cases.push_back({"classify interval.lo", c.stability.lo, Q(55)});
    cases.push_back({"classify interval.hi", c.stability.hi, Q(65)});
  }
  {
    const Environment env{{"P", T(0.5, 0.3, 0.2)}, {"Q", T(0.4, 0.4, 0.2)}};
    add_triple("eval P & Q", evaluate(*parse_expression("P & Q"), env),
               oracle::binary(Op::C, tri("0.5", "0.3", "0.2"), tri("0.4", "0.4", "0.2")));
  }

  double worst = 0.0;
  std::string worst_name;
  for (const Case& c : cases) {
    const double d = std::abs(c.value - oracle::to_double(c.expect));
    if (!(d <= worst)) {
      worst = d;
      worst_name = c.name;
    }
  }
  bool ok = worst < 1e-12;
  // Non-numeric worked examples.
  ok &= format(*Expr::binary(ConnectorKind::Conjunction, Expr::atom("P"),
                             Expr::binary(ConnectorKind::WeakDisjunction, Expr::atom("Q"), Expr::atom("R")))) ==
        "P & (Q |w R)";
  ok &= classify(SystemAssessment(55, 10, 35), builtin_table()).model == "M4";
  ok &= topo_complement(TopoSet::interval(0.25)).closed();
  return {ok, fmt("values=%zu max_dev=%.3e%s%s", cases.size(), worst, worst_name.empty() ? "" : " at ",
                  worst_name.c_str())};
}

}  // namespace

int main()
{
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"worked-value reproduction", worked_values},
      {"normalization closure", normalization_closure},
      {"conjunction/disjunction bounds", conj_disj_bounds},
      {"iterated limits", iterated_limits},
      {"implication limit table", implication_limits},
      {"equivalence laws", equivalence_laws},
      {"set difference identity", set_identity},
      {"Sheffer/Peirce t-composition", sheffer_peirce},
      {"topology isomorphism and closure", topology},
      {"orientation table", orientation},
      {"concept laws", concepts},
      {"parser round-trip and error offsets", parser},
      {"oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s\n", o.passed ? "PASS" : "FAIL", index, c.title, o.detail.c_str());
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
