#include "neu/connectors.hpp"

#include "neu/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace neu {

std::string_view connector_name(ConnectorKind kind) noexcept
{
  switch (kind) {
    case ConnectorKind::Negation: return "negation";
    case ConnectorKind::Conjunction: return "conjunction";
    case ConnectorKind::WeakDisjunction: return "weak-disjunction";
    case ConnectorKind::StrongDisjunction: return "strong-disjunction";
    case ConnectorKind::Implication: return "implication";
    case ConnectorKind::Equivalence: return "equivalence";
    case ConnectorKind::Sheffer: return "sheffer";
    case ConnectorKind::Peirce: return "peirce";
  }
  return "unknown";
}

namespace kernel {

namespace {

double unit(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

// x + y - xy written as hi + lo(1 - hi): symmetric bit-for-bit and never
// rounds below max(x, y).
double probabilistic_sum(double x, double y) noexcept
{
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return hi + lo * (1.0 - hi);
}

}  // namespace

double negation(double x) noexcept { return unit(1.0 - x); }

double conjunction(double x, double y) noexcept { return unit(x * y); }

double weak_disjunction(double x, double y) noexcept
{
  return unit(probabilistic_sum(x, y));
}

// x(1-y) + y(1-x) - xy(1-x)(1-y) is u + v - uv with u = x(1-y), v = y(1-x).
double strong_disjunction(double x, double y) noexcept
{
  return unit(probabilistic_sum(x * (1.0 - y), y * (1.0 - x)));
}

double implication(double x, double y) noexcept { return unit((1.0 - x) + x * y); }

double equivalence(double x, double y) noexcept
{
  const double xy = x * y;
  return unit(((1.0 - x) + xy) * ((1.0 - y) + xy));
}

double sheffer(double x, double y) noexcept { return unit(1.0 - x * y); }

double peirce(double x, double y) noexcept { return unit((1.0 - x) * (1.0 - y)); }

}  // namespace kernel

double eval_kernel(ConnectorKind kind, double x, double y) noexcept
{
  switch (kind) {
    case ConnectorKind::Negation: return kernel::negation(x);
    case ConnectorKind::Conjunction: return kernel::conjunction(x, y);
    case ConnectorKind::WeakDisjunction: return kernel::weak_disjunction(x, y);
    case ConnectorKind::StrongDisjunction: return kernel::strong_disjunction(x, y);
    case ConnectorKind::Implication: return kernel::implication(x, y);
    case ConnectorKind::Equivalence: return kernel::equivalence(x, y);
    case ConnectorKind::Sheffer: return kernel::sheffer(x, y);
    case ConnectorKind::Peirce: return kernel::peirce(x, y);
  }
  return 0.0;
}

RawTriple apply_raw(ConnectorKind kind, const Triple& a, const Triple& b) noexcept
{
  return {eval_kernel(kind, a.t(), b.t()), eval_kernel(kind, a.i(), b.i()),
          eval_kernel(kind, a.f(), b.f())};
}

Triple negate(const Triple& a) noexcept
{
  return renormalize({kernel::negation(a.t()), kernel::negation(a.i()),
                      kernel::negation(a.f())});
}

Triple apply_binary(ConnectorKind kind, const Triple& a, const Triple& b)
{
  if (is_unary(kind)) throw std::invalid_argument("apply_binary: negation is unary");
  return renormalize(apply_raw(kind, a, b));
}

Triple apply_nary(ConnectorKind kind, std::span<const Triple> props)
{
  if (kind != ConnectorKind::Conjunction && kind != ConnectorKind::WeakDisjunction &&
      kind != ConnectorKind::StrongDisjunction) {
    throw std::invalid_argument("apply_nary: unsupported connector " +
                                std::string(connector_name(kind)));
  }
  if (props.empty()) throw Error(ErrorKind::EmptyInput, "n-ary connector needs at least one operand");

  RawTriple acc = props.front().raw();
  for (const Triple& p : props.subspan(1)) {
    acc = {eval_kernel(kind, acc.t, p.t()), eval_kernel(kind, acc.i, p.i()),
           eval_kernel(kind, acc.f, p.f())};
  }
  return renormalize(acc);
}

ParabolaAnalysis parabola_analysis(double q)
{
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::DegenerateQ, "q = " + std::to_string(q) + " must lie strictly inside (0,1)");
  }
  ParabolaAnalysis out;
  out.q = q;
  out.coeff_a = q * q - q;
  out.coeff_b = -q * q + 3.0 * q - 1.0;
  out.coeff_c = 1.0 - q;
  out.p_max_raw = (q * q - 3.0 * q + 1.0) / (2.0 * q * q - 2.0 * q);
  out.p_max_clamped = std::clamp(out.p_max_raw, 0.0, 1.0);
  return out;
}

}  // namespace neu
