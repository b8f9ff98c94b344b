#pragma once

#include <span>
#include <string>
#include <vector>

namespace neu {

/// Member of the interval topology on [0,1]: the empty set, an interval
/// (0, p) with 0 < p <= 1, or the whole space [0,1]. Complements are tagged
/// closed; they carry the same parameter arithmetic.
class TopoSet {
public:
  enum class Kind { Empty, Open, Whole };

  static TopoSet empty() noexcept { return TopoSet(Kind::Empty, 0.0, false); }
  static TopoSet whole() noexcept { return TopoSet(Kind::Whole, 1.0, false); }
  /// (0, p); p = 0 yields Empty. Throws Error(OutOfRange) outside [0,1].
  static TopoSet interval(double p, bool closed = false);

  Kind kind() const noexcept { return kind_; }
  /// Upper end: 0 for Empty, 1 for Whole.
  double parameter() const noexcept { return p_; }
  bool closed() const noexcept { return closed_; }

  /// Compares parameters only, so (0,1) and [0,1] match here.
  bool same_parameter(const TopoSet& other) const noexcept { return p_ == other.p_; }

  friend bool operator==(const TopoSet&, const TopoSet&) = default;

private:
  TopoSet(Kind kind, double p, bool closed) noexcept : kind_(kind), p_(p), closed_(closed) {}

  Kind kind_;
  double p_;
  bool closed_;
};

/// (0,p) u (0,q) = (0, p + q - pq); Empty is the identity, Whole absorbs.
TopoSet topo_union(const TopoSet& a, const TopoSet& b) noexcept;
/// (0,p) n (0,q) = (0, pq); Whole is the identity, Empty absorbs.
TopoSet topo_intersect(const TopoSet& a, const TopoSet& b) noexcept;
/// (0,p) -> closed (0, 1 - p); Empty and Whole swap.
TopoSet topo_complement(const TopoSet& a) noexcept;

std::string describe(const TopoSet& s);

struct IsoIdentity {
  std::string name;
  double topo_value = 0.0;
  double logic_value = 0.0;
  double deviation = 0.0;
};

/// Compares the topology operations with the logic kernels on the truth
/// component: union vs D1, intersection vs C, complement vs N.
struct IsoReport {
  std::vector<IsoIdentity> identities;
  double max_deviation = 0.0;
};

IsoReport iso_check(double p, double q);

}  // namespace neu
