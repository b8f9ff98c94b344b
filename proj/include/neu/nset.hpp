#pragma once

#include "neu/batch.hpp"
#include "neu/triple.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace neu {

/// Ordered, duplicate-free, nonempty list of element identifiers.
class Universe {
public:
  /// Throws Error(InvariantViolation) on duplicates or an empty list.
  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::string& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  /// Index of `element`, or size() when absent.
  std::size_t index_of(const std::string& element) const;

  friend bool operator==(const Universe&, const Universe&) = default;

private:
  std::vector<std::string> elements_;
};

/// Membership assigned when an input file omits an element: certainly out.
inline constexpr RawTriple kDefaultMembership{0.0, 0.0, 1.0};

/// A finite neutrosophic set: one membership triple per universe element,
/// stored in universe order.
class NeutrosophicSet {
public:
  /// Throws Error(InvariantViolation) when sizes differ.
  NeutrosophicSet(Universe universe, std::vector<Triple> membership);

  /// Every element gets the same membership.
  static NeutrosophicSet uniform(Universe universe, const Triple& membership);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const Triple> membership() const noexcept { return membership_; }
  std::size_t size() const noexcept { return membership_.size(); }
  const Triple& operator[](std::size_t k) const { return membership_[k]; }
  /// Throws Error(InvariantViolation) if `element` is not in the universe.
  const Triple& membership_of(const std::string& element) const;

  friend bool operator==(const NeutrosophicSet&, const NeutrosophicSet&) = default;

private:
  Universe universe_;
  std::vector<Triple> membership_;
};

// Per-element set operations. Binary operations require identical universes
// (Error(UniverseMismatch) otherwise). Results are the same for either
// execution mode.

NeutrosophicSet set_complement(const NeutrosophicSet& m, Execution exec = Execution::Serial);
NeutrosophicSet set_intersect(const NeutrosophicSet& m, const NeutrosophicSet& n,
                              Execution exec = Execution::Serial);
NeutrosophicSet set_union(const NeutrosophicSet& m, const NeutrosophicSet& n,
                          Execution exec = Execution::Serial);
/// Kernel x(1 - y) componentwise, then renormalized.
NeutrosophicSet set_difference(const NeutrosophicSet& m, const NeutrosophicSet& n,
                               Execution exec = Execution::Serial);

double difference_kernel(double x, double y) noexcept;

struct Member {
  std::string element;
  Triple membership;

  friend bool operator==(const Member&, const Member&) = default;
};

/// Full cross product in universe order (row-major over `m`), both
/// memberships carried unmerged.
std::vector<std::pair<Member, Member>> set_product(const NeutrosophicSet& m,
                                                   const NeutrosophicSet& n);

/// Loads {"universe": [...], "membership": {"x": [t,i,f], ...}}. Elements
/// missing from "membership" default to (0,0,1) and a warning line is written
/// to `warnings` when given. Unknown elements are rejected.
NeutrosophicSet load_set(const std::string& path, std::ostream* warnings = nullptr);
NeutrosophicSet parse_set(const std::string& json_text, std::ostream* warnings = nullptr);
std::string set_to_json(const NeutrosophicSet& s);

}  // namespace neu
