#include "neu/nset.hpp"

#include "json_util.hpp"
#include "neu/connectors.hpp"
#include "neu/error.hpp"

#include <cstddef>
#include <ostream>
#include <set>

namespace neu {

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements))
{
  if (elements_.empty()) throw Error(ErrorKind::InvariantViolation, "universe must be nonempty");
  std::set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::InvariantViolation, "duplicate universe element '" + e + "'");
    }
  }
}

std::size_t Universe::index_of(const std::string& element) const
{
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] == element) return k;
  }
  return elements_.size();
}

NeutrosophicSet::NeutrosophicSet(Universe universe, std::vector<Triple> membership)
  : universe_(std::move(universe)), membership_(std::move(membership))
{
  if (membership_.size() != universe_.size()) {
    throw Error(ErrorKind::InvariantViolation, "membership must cover the universe exactly");
  }
}

NeutrosophicSet NeutrosophicSet::uniform(Universe universe, const Triple& membership)
{
  std::vector<Triple> m(universe.size(), membership);
  return NeutrosophicSet(std::move(universe), std::move(m));
}

const Triple& NeutrosophicSet::membership_of(const std::string& element) const
{
  const std::size_t k = universe_.index_of(element);
  if (k == universe_.size()) {
    throw Error(ErrorKind::InvariantViolation, "'" + element + "' is not in the universe");
  }
  return membership_[k];
}

namespace {

void require_same_universe(const NeutrosophicSet& m, const NeutrosophicSet& n)
{
  if (!(m.universe() == n.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "set operation needs identical universes");
  }
}

NeutrosophicSet elementwise(ConnectorKind kind, const NeutrosophicSet& m,
                            const NeutrosophicSet* n, Execution exec)
{
  std::vector<Triple> out(m.size());
  const std::span<const Triple> rhs = n ? n->membership() : std::span<const Triple>{};
  batch::apply(kind, m.membership(), rhs, out, exec);
  return NeutrosophicSet(m.universe(), std::move(out));
}

}  // namespace

NeutrosophicSet set_complement(const NeutrosophicSet& m, Execution exec)
{
  return elementwise(ConnectorKind::Negation, m, nullptr, exec);
}

NeutrosophicSet set_intersect(const NeutrosophicSet& m, const NeutrosophicSet& n, Execution exec)
{
  require_same_universe(m, n);
  return elementwise(ConnectorKind::Conjunction, m, &n, exec);
}

NeutrosophicSet set_union(const NeutrosophicSet& m, const NeutrosophicSet& n, Execution exec)
{
  require_same_universe(m, n);
  return elementwise(ConnectorKind::WeakDisjunction, m, &n, exec);
}

double difference_kernel(double x, double y) noexcept { return x * (1.0 - y); }

NeutrosophicSet set_difference(const NeutrosophicSet& m, const NeutrosophicSet& n, Execution exec)
{
  require_same_universe(m, n);
  const auto a = m.membership();
  const auto b = n.membership();
  std::vector<Triple> out(a.size());
  const auto count = static_cast<std::ptrdiff_t>(a.size());
  auto one = [&](std::ptrdiff_t k) {
    out[k] = renormalize({difference_kernel(a[k].t(), b[k].t()),
                          difference_kernel(a[k].i(), b[k].i()),
                          difference_kernel(a[k].f(), b[k].f())});
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) one(k);
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k) one(k);
  }
  return NeutrosophicSet(m.universe(), std::move(out));
}

std::vector<std::pair<Member, Member>> set_product(const NeutrosophicSet& m, const NeutrosophicSet& n)
{
  std::vector<std::pair<Member, Member>> out;
  out.reserve(m.size() * n.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < n.size(); ++y) {
      out.emplace_back(Member{m.universe()[x], m[x]}, Member{n.universe()[y], n[y]});
    }
  }
  return out;
}

NeutrosophicSet parse_set(const std::string& json_text, std::ostream* warnings)
{
  using detail::json;
  const json doc = detail::parse_json(json_text);
  const json& elems = detail::require(doc, "universe", json::value_t::array);
  std::vector<std::string> names;
  for (const json& e : elems) {
    if (!e.is_string()) throw Error(ErrorKind::ParseError, "universe entries must be strings");
    names.push_back(e.get<std::string>());
  }
  Universe universe(std::move(names));

  const json& members = detail::require(doc, "membership", json::value_t::object);
  for (const auto& [name, value] : members.items()) {
    if (universe.index_of(name) == universe.size()) {
      throw Error(ErrorKind::InvariantViolation, "membership names unknown element '" + name + "'");
    }
  }

  std::vector<Triple> membership;
  membership.reserve(universe.size());
  for (const auto& name : universe.elements()) {
    if (members.contains(name)) {
      membership.push_back(detail::triple_from_json(members.at(name), "membership of '" + name + "'"));
    } else {
      if (warnings) *warnings << "warning: '" << name << "' has no membership, using (0,0,1)\n";
      membership.push_back(make_triple(kDefaultMembership.t, kDefaultMembership.i, kDefaultMembership.f));
    }
  }
  return NeutrosophicSet(std::move(universe), std::move(membership));
}

NeutrosophicSet load_set(const std::string& path, std::ostream* warnings)
{
  return parse_set(detail::read_file(path), warnings);
}

std::string set_to_json(const NeutrosophicSet& s)
{
  using detail::json;
  json doc;
  doc["universe"] = s.universe().elements();
  json members = json::object();
  for (std::size_t k = 0; k < s.size(); ++k) {
    members[s.universe()[k]] = detail::triple_to_json(s[k]);
  }
  doc["membership"] = members;
  return doc.dump(2);
}

}  // namespace neu
