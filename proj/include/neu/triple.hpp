#pragma once

#include <iosfwd>

namespace neu {

/// Tolerance for validating user-supplied triples (t + i + f = 1).
inline constexpr double kEpsNorm = 1e-9;
/// Below this, i + f (or 1 - t) counts as zero when renormalizing.
inline constexpr double kEpsDegen = 1e-12;
/// Tolerance for internal identities between algebraically equal routes.
inline constexpr double kEpsIdentity = 1e-12;

/// Kernel outputs before renormalization; components in [0,1], any sum.
struct RawTriple {
  double t = 0.0;
  double i = 0.0;
  double f = 0.0;
};

/// A neutrosophic value: truth, indeterminacy and falsity masses, each in
/// [0,1], summing to 1. Components are stored exactly as given.
class Triple {
public:
  /// Absolute truth (1, 0, 0).
  constexpr Triple() = default;

  constexpr double t() const noexcept { return t_; }
  constexpr double i() const noexcept { return i_; }
  constexpr double f() const noexcept { return f_; }

  constexpr RawTriple raw() const noexcept { return {t_, i_, f_}; }

  friend constexpr bool operator==(const Triple&, const Triple&) = default;

private:
  constexpr Triple(double t, double i, double f) noexcept : t_(t), i_(i), f_(f) {}

  double t_ = 1.0;
  double i_ = 0.0;
  double f_ = 0.0;

  friend Triple make_triple(double, double, double);
  friend Triple renormalize(const RawTriple&) noexcept;
};

/// Validates and builds a triple. Throws OutOfRange / NotNormalized.
Triple make_triple(double t, double i, double f);

/// Same as make_triple on the [0,100] scale.
Triple from_percent(double t, double i, double f);

/// Rescales i and f by W = (1 - t) / (i + f) so the result sums to 1.
/// When i + f vanishes, the residual 1 - t is assigned to indeterminacy
/// (see degenerate_residual); t is never modified.
Triple renormalize(const RawTriple& raw) noexcept;

/// Where the residual mass goes when i + f = 0 leaves W undefined.
RawTriple degenerate_residual(const RawTriple& raw) noexcept;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Range the truth mass can reach once indeterminacy resolves: [t, t + i].
Interval true_bound(const Triple& v) noexcept;

/// Deviation of t + i + f from 1.
double normalization_error(const Triple& v) noexcept;

std::ostream& operator<<(std::ostream& os, const Triple& v);

}  // namespace neu
