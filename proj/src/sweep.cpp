#include "neu/sweep.hpp"

#include "neu/connectors.hpp"
#include "neu/nset.hpp"
#include "neu/random.hpp"
#include "neu/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace neu {

bool SweepReport::all_passed() const noexcept
{
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed || p.informational; });
}

std::vector<double> sweep_grid(double step)
{
  if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("sweep step must lie in (0, 0.5]");
  std::vector<double> g;
  for (std::size_t k = 0;; ++k) {
    const double x = static_cast<double>(k) * step;
    if (x > 1.0 + 1e-9) break;
    g.push_back(std::min(x, 1.0));
  }
  if (std::abs(g.back() - 1.0) < 1e-9) {
    g.back() = 1.0;
  } else {
    g.push_back(1.0);
  }
  return g;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Verdict {
  double max_deviation = 0.0;
  std::size_t first_failure = kNone;
};

using DeviationFn = std::function<double(std::size_t)>;
using DescribeFn = std::function<std::string(std::size_t)>;

double guarded(const DeviationFn& dev, std::size_t k) noexcept
{
  try {
    const double d = dev(k);
    return std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
  } catch (...) {
    return std::numeric_limits<double>::infinity();
  }
}

// Max deviation and the lowest failing index are both order-independent, so
// the parallel scan reproduces the serial one exactly.
Verdict scan_serial(std::size_t n, double tol, const DeviationFn& dev)
{
  Verdict v;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = guarded(dev, k);
    v.max_deviation = std::max(v.max_deviation, d);
    if (!(d <= tol) && v.first_failure == kNone) v.first_failure = k;
  }
  return v;
}

Verdict scan_parallel(std::size_t n, double tol, const DeviationFn& dev)
{
  double max_dev = 0.0;
  std::size_t first = kNone;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) reduction(max : max_dev) reduction(min : first)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const double d = guarded(dev, idx);
    max_dev = std::max(max_dev, d);
    if (!(d <= tol)) first = std::min(first, idx);
  }
  return {max_dev, first};
}

std::string fmt_point(std::initializer_list<std::pair<const char*, double>> vals)
{
  std::string out;
  char buf[64];
  for (const auto& [name, v] : vals) {
    if (!out.empty()) out += ", ";
    std::snprintf(buf, sizeof buf, "%s=%.17g", name, v);
    out += buf;
  }
  return out;
}

double outside_unit(double x) noexcept
{
  if (x < 0.0) return -x;
  if (x > 1.0) return x - 1.0;
  return 0.0;
}

Triple grid_triple(double p)
{
  const double i = (1.0 - p) * 0.3;
  return make_triple(p, i, 1.0 - p - i);
}

double triple_dev(const Triple& a, const Triple& b) noexcept
{
  return std::max({std::abs(a.t() - b.t()), std::abs(a.i() - b.i()), std::abs(a.f() - b.f())});
}

double set_dev(const NeutrosophicSet& a, const NeutrosophicSet& b)
{
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, triple_dev(a[k], b[k]));
  return d;
}

double set_t_dev(const NeutrosophicSet& a, const NeutrosophicSet& b)
{
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k].t() - b[k].t()));
  return d;
}

class Sweep {
public:
  explicit Sweep(const SweepOptions& opt)
    : opt_(opt), grid_(sweep_grid(opt.step)), n_(grid_.size()),
      universe_(make_universe(opt.set_size))
  {
    report_.step = opt.step;
    report_.seed = opt.seed;
  }

  SweepReport run()
  {
    connectors();
    sets();
    topology();
    return std::move(report_);
  }

private:
  static Universe make_universe(std::size_t size)
  {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < std::max<std::size_t>(size, 1); ++k) names.push_back("e" + std::to_string(k));
    return Universe(std::move(names));
  }

  void check(const char* module, std::string name, std::size_t cases, double tol,
             const DeviationFn& dev, const DescribeFn& describe, bool informational = false)
  {
    const Verdict v = opt_.exec == Execution::Parallel ? scan_parallel(cases, tol, dev)
                                                       : scan_serial(cases, tol, dev);
    PropertyResult r;
    r.module = module;
    r.name = std::move(name);
    r.step = opt_.step;
    r.cases = cases;
    r.max_deviation = v.max_deviation;
    r.tolerance = tol;
    r.informational = informational;
    r.passed = informational || v.first_failure == kNone;
    if (!informational && v.first_failure != kNone) r.counterexample = describe(v.first_failure);
    report_.properties.push_back(std::move(r));
  }

  // Grid pairs (p, q) addressed by a flat index.
  double p_of(std::size_t k) const { return grid_[k / n_]; }
  double q_of(std::size_t k) const { return grid_[k % n_]; }
  std::string pq(std::size_t k) const { return fmt_point({{"p", p_of(k)}, {"q", q_of(k)}}); }
  std::string at_p(std::size_t k) const { return fmt_point({{"p", grid_[k]}}); }

  NeutrosophicSet random_set(SeededRng& rng) const
  {
    std::vector<Triple> m;
    m.reserve(universe_.size());
    for (std::size_t k = 0; k < universe_.size(); ++k) m.push_back(rng.triple());
    return NeutrosophicSet(universe_, std::move(m));
  }

  std::string random_case(std::uint64_t salt, std::size_t k) const
  {
    return "seed=" + std::to_string(opt_.seed) + " stream=" + std::to_string(salt) +
           " case=" + std::to_string(k);
  }

  void connectors()
  {
    const std::size_t pairs = n_ * n_;
    constexpr std::size_t kFold = 200;

    check("connectors", "conjunction t <= min(p,q)", pairs, 0.0,
          [&](std::size_t k) {
            const double p = p_of(k), q = q_of(k);
            const double t = apply_binary(ConnectorKind::Conjunction, grid_triple(p), grid_triple(q)).t();
            return std::max(0.0, t - std::min(p, q));
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "weak disjunction t >= max(p,q)", pairs, 0.0,
          [&](std::size_t k) {
            const double p = p_of(k), q = q_of(k);
            const double t = apply_binary(ConnectorKind::WeakDisjunction, grid_triple(p), grid_triple(q)).t();
            return std::max(0.0, std::max(p, q) - t);
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "200-fold conjunction t = p^200", n_, kEpsIdentity,
          [&](std::size_t k) {
            const std::vector<Triple> xs(kFold, grid_triple(grid_[k]));
            return std::abs(apply_nary(ConnectorKind::Conjunction, xs).t() - std::pow(grid_[k], 200.0));
          },
          [&](std::size_t k) { return at_p(k); });

    check("connectors", "200-fold conjunction t < 1e-9 for p <= 0.9", n_, 1e-9,
          [&](std::size_t k) {
            if (grid_[k] > 0.9 + 1e-12) return 0.0;
            const std::vector<Triple> xs(kFold, grid_triple(grid_[k]));
            return apply_nary(ConnectorKind::Conjunction, xs).t();
          },
          [&](std::size_t k) { return at_p(k); });

    check("connectors", "200-fold weak disjunction t > 1 - 1e-9 for p >= 0.1", n_, 1e-9,
          [&](std::size_t k) {
            if (grid_[k] < 0.1 - 1e-12) return 0.0;
            const std::vector<Triple> xs(kFold, grid_triple(grid_[k]));
            return 1.0 - apply_nary(ConnectorKind::WeakDisjunction, xs).t();
          },
          [&](std::size_t k) { return at_p(k); });

    check("connectors", "implication limits I(0,q)=1 I(p,1)=1 I(1,q)=q I(p,0)=1-p", n_, kEpsIdentity,
          [&](std::size_t k) {
            const double x = grid_[k];
            return std::max({std::abs(kernel::implication(0.0, x) - 1.0),
                             std::abs(kernel::implication(x, 1.0) - 1.0),
                             std::abs(kernel::implication(1.0, x) - x),
                             std::abs(kernel::implication(x, 0.0) - (1.0 - x))});
          },
          [&](std::size_t k) { return at_p(k); });

    check("connectors", "equivalence E(p,q) = E(q,p) = E(1-p,1-q)", pairs, kEpsIdentity,
          [&](std::size_t k) {
            const double p = p_of(k), q = q_of(k);
            const double e = kernel::equivalence(p, q);
            return std::max(std::abs(e - kernel::equivalence(q, p)),
                            std::abs(e - kernel::equivalence(1.0 - p, 1.0 - q)));
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "equivalence corners and edges", n_, kEpsIdentity,
          [&](std::size_t k) {
            const double q = grid_[k];
            return std::max({std::abs(kernel::equivalence(0.0, 0.0) - 1.0),
                             std::abs(kernel::equivalence(1.0, 1.0) - 1.0),
                             std::abs(kernel::equivalence(0.0, 1.0)),
                             std::abs(kernel::equivalence(1.0, 0.0)),
                             std::abs(kernel::equivalence(0.0, q) - (1.0 - q)),
                             std::abs(kernel::equivalence(1.0, q) - q)});
          },
          [&](std::size_t k) { return fmt_point({{"q", grid_[k]}}); });

    constexpr std::size_t kFine = 10000;
    for (int j = 1; j <= 9; ++j) {
      const double q = j / 10.0;
      const ParabolaAnalysis pa = parabola_analysis(q);
      char name[96];
      std::snprintf(name, sizeof name, "parabola vertex q=%.1f (p_max=%.6f, clamped=%.6f)", q,
                    pa.p_max_raw, pa.p_max_clamped);
      double best_p = 0.0;
      double best_e = -1.0;
      for (std::size_t s = 0; s <= kFine; ++s) {
        const double p = static_cast<double>(s) / kFine;
        const double e = kernel::equivalence(p, q);
        if (e > best_e) {
          best_e = e;
          best_p = p;
        }
      }
      check("connectors", name, 1, 1e-3,
            [=](std::size_t) { return std::abs(best_p - pa.p_max_clamped); },
            [=](std::size_t) { return fmt_point({{"q", q}, {"grid_argmax", best_p}}); });
    }

    check("connectors", "E(p,q) = e_q(p) for 0 < q < 1", pairs, kEpsIdentity,
          [&](std::size_t k) {
            const double p = p_of(k), q = q_of(k);
            if (q <= 0.0 || q >= 1.0) return 0.0;
            return std::abs(kernel::equivalence(p, q) - parabola_analysis(q).value(p));
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "sheffer t = weak disjunction of negations", pairs, kEpsIdentity,
          [&](std::size_t k) {
            const Triple a = grid_triple(p_of(k)), b = grid_triple(q_of(k));
            return std::abs(apply_binary(ConnectorKind::Sheffer, a, b).t() -
                            apply_binary(ConnectorKind::WeakDisjunction, negate(a), negate(b)).t());
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "peirce t = conjunction of negations", pairs, kEpsIdentity,
          [&](std::size_t k) {
            const Triple a = grid_triple(p_of(k)), b = grid_triple(q_of(k));
            return std::abs(apply_binary(ConnectorKind::Peirce, a, b).t() -
                            apply_binary(ConnectorKind::Conjunction, negate(a), negate(b)).t());
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "sheffer i,f vs negation composition (non-identity)", pairs, 0.0,
          [&](std::size_t k) {
            const Triple a = grid_triple(p_of(k)), b = grid_triple(q_of(k));
            return triple_dev(apply_binary(ConnectorKind::Sheffer, a, b),
                              apply_binary(ConnectorKind::WeakDisjunction, negate(a), negate(b)));
          },
          [&](std::size_t k) { return pq(k); }, true);

    check("connectors", "negation is a t-involution", n_, kEpsIdentity,
          [&](std::size_t k) {
            const Triple a = grid_triple(grid_[k]);
            return std::abs(negate(negate(a)).t() - a.t());
          },
          [&](std::size_t k) { return at_p(k); });

    check("connectors", "strong disjunction formula stays in [0,1]", pairs, kEpsIdentity,
          [&](std::size_t k) {
            const double x = p_of(k), y = q_of(k);
            const double literal = x * (1 - y) + y * (1 - x) - x * y * (1 - x) * (1 - y);
            return std::max(outside_unit(literal),
                            outside_unit(eval_kernel(ConnectorKind::StrongDisjunction, x, y)));
          },
          [&](std::size_t k) { return pq(k); });

    check("connectors", "every kernel maps the grid into [0,1]", pairs, 0.0,
          [&](std::size_t k) {
            double d = 0.0;
            for (ConnectorKind kind : kAllConnectors) {
              d = std::max(d, outside_unit(eval_kernel(kind, p_of(k), q_of(k))));
            }
            return d;
          },
          [&](std::size_t k) { return pq(k); });

    constexpr std::uint64_t kClosureSalt = 1;
    check("connectors", "normalization closure, random applications of all eight connectors",
          opt_.closure_cases, kEpsNorm,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kClosureSalt, k);
            const ConnectorKind kind = kAllConnectors[k % kAllConnectors.size()];
            const Triple a = rng.triple();
            const Triple b = rng.triple();
            const Triple r = is_unary(kind) ? negate(a) : apply_binary(kind, a, b);
            return std::max({normalization_error(r), outside_unit(r.t()), outside_unit(r.i()),
                             outside_unit(r.f())});
          },
          [&](std::size_t k) { return random_case(kClosureSalt, k); });

    constexpr std::uint64_t kKernelSalt = 2;
    check("connectors", "result t equals the kernel of the input t values", opt_.closure_cases, 0.0,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kKernelSalt, k);
            const ConnectorKind kind = kBinaryConnectors[k % kBinaryConnectors.size()];
            const Triple a = rng.triple();
            const Triple b = rng.triple();
            return std::abs(apply_binary(kind, a, b).t() - eval_kernel(kind, a.t(), b.t()));
          },
          [&](std::size_t k) { return random_case(kKernelSalt, k); });
  }

  void sets()
  {
    constexpr std::uint64_t kDiffSalt = 10;
    constexpr std::uint64_t kCommSalt = 11;
    constexpr std::uint64_t kAssocSalt = 12;
    constexpr std::uint64_t kNormSalt = 13;
    const std::size_t n = opt_.set_cases;

    check("nset", "difference = intersection with complement", n, kEpsIdentity,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kDiffSalt, k);
            const NeutrosophicSet m = random_set(rng);
            const NeutrosophicSet o = random_set(rng);
            return set_dev(set_difference(m, o), set_intersect(m, set_complement(o)));
          },
          [&](std::size_t k) { return random_case(kDiffSalt, k); });

    check("nset", "intersection and union commute", n, 0.0,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kCommSalt, k);
            const NeutrosophicSet m = random_set(rng);
            const NeutrosophicSet o = random_set(rng);
            return std::max(set_dev(set_intersect(m, o), set_intersect(o, m)),
                            set_dev(set_union(m, o), set_union(o, m)));
          },
          [&](std::size_t k) { return random_case(kCommSalt, k); });

    check("nset", "intersection and union t-components associate", n, kEpsIdentity,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kAssocSalt, k);
            const NeutrosophicSet a = random_set(rng);
            const NeutrosophicSet b = random_set(rng);
            const NeutrosophicSet c = random_set(rng);
            return std::max(
                set_t_dev(set_intersect(set_intersect(a, b), c), set_intersect(a, set_intersect(b, c))),
                set_t_dev(set_union(set_union(a, b), c), set_union(a, set_union(b, c))));
          },
          [&](std::size_t k) { return random_case(kAssocSalt, k); });

    check("nset", "full-triple associativity (informational)", n, 0.0,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kAssocSalt, k);
            const NeutrosophicSet a = random_set(rng);
            const NeutrosophicSet b = random_set(rng);
            const NeutrosophicSet c = random_set(rng);
            return std::max(
                set_dev(set_intersect(set_intersect(a, b), c), set_intersect(a, set_intersect(b, c))),
                set_dev(set_union(set_union(a, b), c), set_union(a, set_union(b, c))));
          },
          [&](std::size_t k) { return random_case(kAssocSalt, k); }, true);

    check("nset", "set operation outputs are normalized", n, kEpsIdentity,
          [&](std::size_t k) {
            SeededRng rng = SeededRng::for_case(opt_.seed, kNormSalt, k);
            const NeutrosophicSet m = random_set(rng);
            const NeutrosophicSet o = random_set(rng);
            double d = 0.0;
            for (const NeutrosophicSet& s : {set_complement(m), set_intersect(m, o), set_union(m, o),
                                             set_difference(m, o)}) {
              for (const Triple& t : s.membership()) d = std::max(d, normalization_error(t));
            }
            return d;
          },
          [&](std::size_t k) { return random_case(kNormSalt, k); });
  }

  void topology()
  {
    const std::size_t pairs = n_ * n_;

    check("ntopology", "union/intersection/complement match D1/C/N", pairs, kEpsIdentity,
          [&](std::size_t k) { return iso_check(p_of(k), q_of(k)).max_deviation; },
          [&](std::size_t k) { return pq(k); });

    check("ntopology", "family closed under union and intersection", pairs, 0.0,
          [&](std::size_t k) {
            const TopoSet a = TopoSet::interval(p_of(k));
            const TopoSet b = TopoSet::interval(q_of(k));
            return std::max(outside_unit(topo_union(a, b).parameter()),
                            outside_unit(topo_intersect(a, b).parameter()));
          },
          [&](std::size_t k) { return pq(k); });

    check("ntopology", "union and intersection commute", pairs, kEpsIdentity,
          [&](std::size_t k) {
            const TopoSet a = TopoSet::interval(p_of(k));
            const TopoSet b = TopoSet::interval(q_of(k));
            return std::max(
                std::abs(topo_union(a, b).parameter() - topo_union(b, a).parameter()),
                std::abs(topo_intersect(a, b).parameter() - topo_intersect(b, a).parameter()));
          },
          [&](std::size_t k) { return pq(k); });

    check("ntopology", "union and intersection associate", pairs * n_, kEpsIdentity,
          [&](std::size_t k) {
            const TopoSet a = TopoSet::interval(grid_[k / (n_ * n_)]);
            const TopoSet b = TopoSet::interval(grid_[(k / n_) % n_]);
            const TopoSet c = TopoSet::interval(grid_[k % n_]);
            return std::max(std::abs(topo_union(topo_union(a, b), c).parameter() -
                                     topo_union(a, topo_union(b, c)).parameter()),
                            std::abs(topo_intersect(topo_intersect(a, b), c).parameter() -
                                     topo_intersect(a, topo_intersect(b, c)).parameter()));
          },
          [&](std::size_t k) {
            return fmt_point({{"p", grid_[k / (n_ * n_)]},
                              {"q", grid_[(k / n_) % n_]},
                              {"r", grid_[k % n_]}});
          });
  }

  SweepOptions opt_;
  std::vector<double> grid_;
  std::size_t n_;
  Universe universe_;
  SweepReport report_;
};

std::string fmt_sci(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options)
{
  return Sweep(options).run();
}

std::string report_text(const SweepReport& report)
{
  std::string out;
  std::size_t passed = 0, checked = 0;
  for (const auto& p : report.properties) {
    const char* status = p.informational ? "INFO" : (p.passed ? "PASS" : "FAIL");
    if (!p.informational) {
      ++checked;
      if (p.passed) ++passed;
    }
    out += status;
    out += "  [" + p.module + "] " + p.name + "  cases=" + std::to_string(p.cases) +
           " max_dev=" + fmt_sci(p.max_deviation) + " tol=" + fmt_sci(p.tolerance) + "\n";
    if (p.counterexample) out += "      counterexample: " + *p.counterexample + "\n";
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "summary: %zu/%zu properties passed (step=%g, seed=%llu)\n", passed,
                checked, report.step, static_cast<unsigned long long>(report.seed));
  out += buf;
  return out;
}

std::string report_json(const SweepReport& report)
{
  using nlohmann::json;
  json props = json::array();
  for (const auto& p : report.properties) {
    json j = {{"module", p.module},       {"name", p.name},
              {"step", p.step},           {"cases", p.cases},
              {"max_deviation", p.max_deviation}, {"tolerance", p.tolerance},
              {"passed", p.passed},       {"informational", p.informational}};
    j["counterexample"] = p.counterexample ? json(*p.counterexample) : json(nullptr);
    props.push_back(std::move(j));
  }
  return json{{"step", report.step},
              {"seed", report.seed},
              {"all_passed", report.all_passed()},
              {"properties", props}}
      .dump(2);
}

}  // namespace neu
