#pragma once

#include "neu/connectors.hpp"
#include "neu/triple.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>

namespace neu {

/// Named events, each carrying the chance that it occurs as a triple.
using EventSpace = std::map<std::string, Triple, std::less<>>;

/// Throws Error(UnknownEvent).
Triple event_chance(const EventSpace& space, const std::string& name);

/// Combines two events with a connector, reading them as independent. For
/// Negation only `a` is used.
Triple combine_events(const EventSpace& space, ConnectorKind kind,
                      const std::string& a, const std::string& b);

/// A pool split into accepted, rejected and still-pending fractions.
class PendingPool {
public:
  /// Throws Error(OutOfRange) or Error(NotNormalized).
  PendingPool(double accepted, double rejected, double pending);

  double accepted() const noexcept { return a_; }
  double rejected() const noexcept { return r_; }
  double pending() const noexcept { return p_; }

  /// The pool as a triple with the pending mass as indeterminacy.
  Triple as_triple() const;

private:
  double a_, r_, p_;
};

struct Resolution {
  double accepted = 0.0;
  double rejected = 0.0;
};

/// Sends a fraction `theta` of the pending mass to accepted and the rest to
/// rejected. Throws Error(OutOfRange) unless theta is in [0,1].
Resolution resolve_pending(const PendingPool& pool, double theta);

struct EventSummary {
  std::size_t count = 0;
  Triple mean;
  RawTriple min;
  RawTriple max;
};

/// Componentwise mean, min and max. Throws Error(EmptySpace).
EventSummary summarize(const EventSpace& space);

/// Loads {"events": {"rain": [0.5, 0.2, 0.3], ...}}.
EventSpace load_events(const std::string& path);
EventSpace parse_events(const std::string& json_text);

}  // namespace neu
