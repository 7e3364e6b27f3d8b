#pragma once

#include "langrep/automata.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langrep {

struct Symbol {
  bool terminal = false;
  int id = 0; // terminal: 0 or 1; otherwise a nonterminal index

  static Symbol bit(int b) { return {true, b}; }
  static Symbol var(int v) { return {false, v}; }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Production {
  int head = 0;
  std::vector<Symbol> body; // empty body is the empty word
};

// Context-free grammar over {0,1}.
class Cfg {
public:
  Cfg(std::vector<std::string> nonterminals, std::vector<Production> rules, int start);

  const std::vector<std::string>& nonterminals() const noexcept { return names_; }
  const std::vector<Production>& rules() const noexcept { return rules_; }
  int start() const noexcept { return start_; }

  // One line per nonterminal in the text format accepted by parse_cfg.
  std::string str() const;

private:
  std::vector<std::string> names_;
  std::vector<Production> rules_;
  int start_;
};

// "S -> 1 S 0 S | eps", one head per line, first head is the start symbol.
// A head with an empty right-hand side ("S ->") has no productions.
Cfg parse_cfg(std::string_view text);

bool cfg_contains(const Cfg& g, std::string_view bits);

// Triple construction (p, X, q); the result generates L(g) ∩ L(d).
Cfg intersect_regular(const Cfg& g, const Dfa& d);

bool is_empty(const Cfg& g);

// A shortest generated word, or nullopt when the language is empty.
std::optional<std::string> shortest_word(const Cfg& g);

// Every right-hand side has length at most two afterwards.
Cfg binarize(const Cfg& g);
Cfg flip_terminals(const Cfg& g);
Cfg reverse_productions(const Cfg& g);
Cfg union_grammar(const Cfg& a, const Cfg& b);

} // namespace langrep
