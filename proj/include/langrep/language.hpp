#pragma once

#include "langrep/automata.hpp"
#include "langrep/cfg.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace langrep {

using WordSet = std::set<std::string, std::less<>>;

enum class Builtin {
  palindrome,
  copy,
  lyndon,
  lyndon_odd,
  dyck,
  wrep,
  k11,
  no_kk,
  balanced,
  zero_n_one_n,
  uniform,
  odd_counts,
  even_counts,
};

bool builtin_contains(Builtin tag, int k, std::string_view bits);
std::string builtin_name(Builtin tag, int k);

// Letter multiplicities realized by a language, counting only n >= 1.
struct FrequencySet {
  std::set<std::size_t> values;
  bool everything = false;

  bool contains(std::size_t n) const { return n >= 1 && (everything || values.count(n) > 0); }
};

// Immutable membership oracle over {0,1}. Copies share structure.
class Language {
public:
  enum class Kind { finite, regular, grammar, builtin, trash, combinator };
  enum class Op { negate, both, either, hull, reverse };

  struct Node;

  // Verbatim; asymmetric sets are allowed here so that hull() can close
  // them, but evaluation rejects them.
  static Language finite(WordSet words);
  static Language regular(Dfa d, bool symmetric, std::string label = "");
  static Language grammar(Cfg g, bool symmetric, std::string label = "");
  static Language builtin(Builtin tag, int k = 0);
  static Language trash(FrequencySet f);
  static Language everything();

  bool contains(std::string_view bits) const;

  Kind kind() const noexcept;
  bool symmetric() const;
  // Throws not-symmetric naming a word whose complement is missing, when one is known.
  void require_symmetric() const;
  bool involves_grammar() const;

  const WordSet* finite_words() const noexcept;
  const Dfa* dfa() const noexcept;
  const Cfg* cfg() const noexcept;
  // Combinator nodes only.
  std::optional<Op> op() const noexcept;
  std::span<const Language> operands() const noexcept;

  // Parseable by parse_language whenever the value was built from text or factories.
  std::string str() const;

  explicit Language(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const std::shared_ptr<const Node>& node() const noexcept { return node_; }

private:
  std::shared_ptr<const Node> node_;
};

Language hull(const Language& l);
Language complement(const Language& l);
Language intersect(const Language& a, const Language& b);
Language unite(const Language& a, const Language& b);
Language reverse(const Language& l);

WordSet hull_words(const WordSet& words);
WordSet shuffle_finite(const WordSet& a, const WordSet& b);

struct TrashSplit {
  FrequencySet frequencies;
  Language trash;
  Language extended; // L ∪ T_L
};

// Finite languages only; anything else raises `unsupported`.
TrashSplit freq_and_trash(const Language& l);

// `<w,...>`, `{w,...}`, builtin names, `not(X)`, `and(X,Y,...)`, `or(X,Y,...)`,
// `hull(X)`, `rev(X)`, `trash-ext(X)`, `re:EXPR`, `all`. `e` denotes the empty word.
Language parse_language(std::string_view text);

} // namespace langrep
