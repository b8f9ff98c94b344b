#pragma once

#include <set>
#include <string>
#include <vector>

namespace neu {

using AttributeSet = std::set<std::string>;

/// A finite attribute universe with a concept <A> and its opposite <Anti-A>.
/// Opposition is supplied by the caller; it is not derivable from A.
class ConceptUniverse {
public:
  /// Throws Error(InvariantViolation) when attributes repeat, when A or AntiA
  /// name an unknown attribute, or when A and AntiA overlap.
  ConceptUniverse(std::vector<std::string> attributes, AttributeSet a, AttributeSet anti_a);

  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const AttributeSet& a() const noexcept { return a_; }
  const AttributeSet& anti_a() const noexcept { return anti_a_; }

  /// Same universe with the roles of A and AntiA exchanged.
  ConceptUniverse swapped() const;

private:
  std::vector<std::string> attributes_;
  AttributeSet a_;
  AttributeSet anti_a_;
};

/// <Non-A>: everything except A.
AttributeSet non_of(const ConceptUniverse& u);
/// <Neut-A>: everything that is neither A nor Anti-A.
AttributeSet neut_of(const ConceptUniverse& u);

struct LawResult {
  std::string name;
  bool passed = false;
};

struct LawReport {
  std::vector<LawResult> laws;
  bool all_passed() const noexcept;
};

/// Checks the seven identities relating A, Anti-A, Neut-A and Non-A.
LawReport verify_laws(const ConceptUniverse& u);

/// Loads {"attributes": [...], "A": [...], "AntiA": [...]}.
ConceptUniverse load_concepts(const std::string& path);
ConceptUniverse parse_concepts(const std::string& json_text);

}  // namespace neu
