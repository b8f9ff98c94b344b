#include "neu/topology.hpp"

#include "neu/connectors.hpp"
#include "neu/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace neu {

TopoSet TopoSet::interval(double p, bool closed)
{
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "interval parameter " + std::to_string(p) + " is outside [0,1]");
  }
  if (p == 0.0) return empty();
  return TopoSet(Kind::Open, p, closed);
}

TopoSet topo_union(const TopoSet& a, const TopoSet& b) noexcept
{
  if (a.kind() == TopoSet::Kind::Whole || b.kind() == TopoSet::Kind::Whole) return TopoSet::whole();
  if (a.kind() == TopoSet::Kind::Empty) return b;
  if (b.kind() == TopoSet::Kind::Empty) return a;
  const double p = a.parameter();
  const double q = b.parameter();
  return TopoSet::interval(std::clamp(p + q - p * q, 0.0, 1.0));
}

TopoSet topo_intersect(const TopoSet& a, const TopoSet& b) noexcept
{
  if (a.kind() == TopoSet::Kind::Empty || b.kind() == TopoSet::Kind::Empty) return TopoSet::empty();
  if (a.kind() == TopoSet::Kind::Whole) return b;
  if (b.kind() == TopoSet::Kind::Whole) return a;
  return TopoSet::interval(a.parameter() * b.parameter());
}

TopoSet topo_complement(const TopoSet& a) noexcept
{
  switch (a.kind()) {
    case TopoSet::Kind::Empty: return TopoSet::whole();
    case TopoSet::Kind::Whole: return TopoSet::empty();
    case TopoSet::Kind::Open: break;
  }
  return TopoSet::interval(1.0 - a.parameter(), !a.closed());
}

std::string describe(const TopoSet& s)
{
  char buf[64];
  switch (s.kind()) {
    case TopoSet::Kind::Empty: return "empty";
    case TopoSet::Kind::Whole: return "[0,1]";
    case TopoSet::Kind::Open: break;
  }
  std::snprintf(buf, sizeof buf, "(0,%.6f)%s", s.parameter(), s.closed() ? " closed" : "");
  return buf;
}

IsoReport iso_check(double p, double q)
{
  const TopoSet a = TopoSet::interval(p);
  const TopoSet b = TopoSet::interval(q);

  IsoReport report;
  auto add = [&](const char* name, double topo, double logic) {
    const double dev = std::abs(topo - logic);
    report.identities.push_back({name, topo, logic, dev});
    report.max_deviation = std::max(report.max_deviation, dev);
  };
  add("union=D1", topo_union(a, b).parameter(), kernel::weak_disjunction(p, q));
  add("intersect=C", topo_intersect(a, b).parameter(), kernel::conjunction(p, q));
  add("complement=N", topo_complement(a).parameter(), kernel::negation(p));
  return report;
}

}  // namespace neu
