#include "neu/nprob.hpp"

#include "json_util.hpp"
#include "neu/error.hpp"

#include <algorithm>
#include <cmath>

namespace neu {

Triple event_chance(const EventSpace& space, const std::string& name)
{
  const auto it = space.find(name);
  if (it == space.end()) throw Error(ErrorKind::UnknownEvent, "no event named '" + name + "'");
  return it->second;
}

Triple combine_events(const EventSpace& space, ConnectorKind kind,
                      const std::string& a, const std::string& b)
{
  const Triple lhs = event_chance(space, a);
  if (is_unary(kind)) return negate(lhs);
  return apply_binary(kind, lhs, event_chance(space, b));
}

PendingPool::PendingPool(double accepted, double rejected, double pending)
  : a_(accepted), r_(rejected), p_(pending)
{
  // Same validation as a triple (a, p, r).
  (void)make_triple(a_, p_, r_);
}

Triple PendingPool::as_triple() const { return make_triple(a_, p_, r_); }

Resolution resolve_pending(const PendingPool& pool, double theta)
{
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "theta = " + std::to_string(theta) + " is outside [0,1]");
  }
  return {pool.accepted() + theta * pool.pending(),
          pool.rejected() + (1.0 - theta) * pool.pending()};
}

EventSummary summarize(const EventSpace& space)
{
  if (space.empty()) throw Error(ErrorKind::EmptySpace, "event space has no events");
  EventSummary s;
  s.count = space.size();
  s.min = {1.0, 1.0, 1.0};
  s.max = {0.0, 0.0, 0.0};
  double t = 0.0, i = 0.0, f = 0.0;
  for (const auto& [name, v] : space) {
    t += v.t();
    i += v.i();
    f += v.f();
    s.min = {std::min(s.min.t, v.t()), std::min(s.min.i, v.i()), std::min(s.min.f, v.f())};
    s.max = {std::max(s.max.t, v.t()), std::max(s.max.i, v.i()), std::max(s.max.f, v.f())};
  }
  const auto n = static_cast<double>(s.count);
  s.mean = make_triple(t / n, i / n, f / n);
  return s;
}

EventSpace parse_events(const std::string& json_text)
{
  using detail::json;
  const json doc = detail::parse_json(json_text);
  const json& events = detail::require(doc, "events", json::value_t::object);
  EventSpace space;
  for (const auto& [name, value] : events.items()) {
    space.emplace(name, detail::triple_from_json(value, "event '" + name + "'"));
  }
  return space;
}

EventSpace load_events(const std::string& path) { return parse_events(detail::read_file(path)); }

}  // namespace neu
