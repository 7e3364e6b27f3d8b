#pragma once

#include "langrep/automata.hpp"
#include "langrep/cfg.hpp"
#include "langrep/language.hpp"
#include "langrep/words.hpp"

#include <optional>
#include <string_view>

namespace langrep {

enum class Property { bounded_treewidth, bounded_degeneracy };

std::string_view property_name(Property p) noexcept;
// Accepts "treewidth", "degeneracy" and the bounded- forms.
Property parse_property(std::string_view text);

// answer is true exactly when every word of L misses one of the letters, in
// which case the language only represents edgeless graphs. A false answer
// carries a member of L using both letters.
struct Verdict {
  Property property = Property::bounded_treewidth;
  bool answer = true;
  std::optional<BinaryWord> witness;
};

Verdict decide(const Cfg& g, Property p);
Verdict decide(const Dfa& d, Property p);
Verdict decide(const WordSet& words, Property p);
// Grammar, automaton and finite nodes are exact; hull and rev are unwrapped.
// Anything else is settled only by finding a witness among short words,
// and raises `unsupported` otherwise.
Verdict decide(const Language& l, Property p);

enum class Triviality {
  null_graphs,     // no word uses both letters
  complete_graphs, // every word using both letters belongs to L
  nontrivial,
  undetermined,    // grammar or opaque language with no short counterexample
};

std::string_view triviality_name(Triviality t) noexcept;
Triviality classify(const Language& l);

} // namespace langrep
