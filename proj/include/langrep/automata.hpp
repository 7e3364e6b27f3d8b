#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace langrep {

// Complete deterministic automaton over {0,1}. Unreachable states are
// dropped at construction.
class Dfa {
public:
  struct State {
    std::array<int, 2> next;
    bool accept = false;
  };

  Dfa(std::vector<State> states, int start);

  static Dfa from_words(const std::set<std::string, std::less<>>& words);
  static Dfa from_regex(std::string_view expr);
  static Dfa everything();
  static Dfa nothing();
  // The four-state filter {start, seen0, seen1, both} accepting "both".
  static Dfa both_letters();
  // 0* ∪ 1*
  static Dfa single_letter();

  bool accepts(std::string_view bits) const;
  int step(int state, char bit) const { return states_[static_cast<std::size_t>(state)].next[bit == '1']; }

  Dfa complemented() const;
  // Accepts the bitwise complements of the accepted words.
  Dfa flipped() const;

  std::optional<std::string> shortest_accepted() const;
  bool equivalent(const Dfa& other) const;

  int start() const noexcept { return start_; }
  const std::vector<State>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

private:
  std::vector<State> states_;
  int start_;
};

Dfa product(const Dfa& a, const Dfa& b, bool union_mode);

} // namespace langrep
