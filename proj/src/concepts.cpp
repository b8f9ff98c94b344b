#include "neu/concepts.hpp"

#include "json_util.hpp"
#include "neu/error.hpp"

#include <algorithm>
#include <iterator>

namespace neu {

namespace {

AttributeSet set_minus(const AttributeSet& a, const AttributeSet& b)
{
  AttributeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

AttributeSet set_and(const AttributeSet& a, const AttributeSet& b)
{
  AttributeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

AttributeSet set_or(const AttributeSet& a, const AttributeSet& b)
{
  AttributeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool includes(const AttributeSet& outer, const AttributeSet& inner)
{
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

AttributeSet all_of(const ConceptUniverse& u)
{
  return AttributeSet(u.attributes().begin(), u.attributes().end());
}

}  // namespace

ConceptUniverse::ConceptUniverse(std::vector<std::string> attributes, AttributeSet a,
                                 AttributeSet anti_a)
  : attributes_(std::move(attributes)), a_(std::move(a)), anti_a_(std::move(anti_a))
{
  const AttributeSet all(attributes_.begin(), attributes_.end());
  if (all.size() != attributes_.size()) {
    throw Error(ErrorKind::InvariantViolation, "attributes must be distinct");
  }
  if (!includes(all, a_)) throw Error(ErrorKind::InvariantViolation, "A names an unknown attribute");
  if (!includes(all, anti_a_)) {
    throw Error(ErrorKind::InvariantViolation, "AntiA names an unknown attribute");
  }
  if (!set_and(a_, anti_a_).empty()) {
    throw Error(ErrorKind::InvariantViolation, "A and AntiA must be disjoint");
  }
}

ConceptUniverse ConceptUniverse::swapped() const
{
  return ConceptUniverse(attributes_, anti_a_, a_);
}

AttributeSet non_of(const ConceptUniverse& u) { return set_minus(all_of(u), u.a()); }

AttributeSet neut_of(const ConceptUniverse& u)
{
  return set_minus(all_of(u), set_or(u.a(), u.anti_a()));
}

bool LawReport::all_passed() const noexcept
{
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed; });
}

LawReport verify_laws(const ConceptUniverse& u)
{
  const AttributeSet& a = u.a();
  const AttributeSet& anti = u.anti_a();
  const AttributeSet non = non_of(u);
  const AttributeSet neut = neut_of(u);

  LawReport r;
  r.laws.push_back({"Neut-A = Neut-(Anti-A)", neut == neut_of(u.swapped())});
  r.laws.push_back({"Non-A contains Anti-A", includes(non, anti)});
  r.laws.push_back({"Non-A contains Neut-A", includes(non, neut)});
  r.laws.push_back({"A and Anti-A disjoint", set_and(a, anti).empty()});
  r.laws.push_back({"A and Non-A disjoint", set_and(a, non).empty()});
  r.laws.push_back({"A, Neut-A, Anti-A pairwise disjoint",
                    set_and(a, neut).empty() && set_and(a, anti).empty() &&
                        set_and(neut, anti).empty()});
  r.laws.push_back({"A + Neut-A + Anti-A = universe", set_or(set_or(a, neut), anti) == all_of(u)});
  return r;
}

ConceptUniverse parse_concepts(const std::string& json_text)
{
  using detail::json;
  const json doc = detail::parse_json(json_text);
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    for (const json& v : detail::require(doc, key, json::value_t::array)) {
      if (!v.is_string()) throw Error(ErrorKind::ParseError, std::string(key) + " entries must be strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  const auto a = strings("A");
  const auto anti = strings("AntiA");
  return ConceptUniverse(strings("attributes"), AttributeSet(a.begin(), a.end()),
                         AttributeSet(anti.begin(), anti.end()));
}

ConceptUniverse load_concepts(const std::string& path)
{
  return parse_concepts(detail::read_file(path));
}

}  // namespace neu
