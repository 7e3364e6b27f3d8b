#include "langrep/automata.hpp"

#include "langrep/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace langrep {

Dfa::Dfa(std::vector<State> states, int start) {
  const int n = static_cast<int>(states.size());
  if (start < 0 || start >= n)
    throw Error(ErrorKind::invalid_arguments, "automaton start state out of range");
  for (const State& s : states)
    for (int t : s.next)
      if (t < 0 || t >= n)
        throw Error(ErrorKind::invalid_arguments, "automaton transition is not total");

  std::vector<int> renumber(states.size(), -1);
  std::deque<int> queue{start};
  renumber[static_cast<std::size_t>(start)] = 0;
  std::vector<int> order{start};
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int t : states[static_cast<std::size_t>(q)].next) {
      if (renumber[static_cast<std::size_t>(t)] < 0) {
        renumber[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  states_.reserve(order.size());
  for (int q : order) {
    State s = states[static_cast<std::size_t>(q)];
    for (int& t : s.next)
      t = renumber[static_cast<std::size_t>(t)];
    states_.push_back(s);
  }
  start_ = 0;
}

Dfa Dfa::everything() { return Dfa({State{{0, 0}, true}}, 0); }
Dfa Dfa::nothing() { return Dfa({State{{0, 0}, false}}, 0); }

Dfa Dfa::both_letters() {
  // 0 start, 1 seen0, 2 seen1, 3 both
  return Dfa({State{{1, 2}, false}, State{{1, 3}, false}, State{{3, 2}, false}, State{{3, 3}, true}}, 0);
}

Dfa Dfa::single_letter() { return both_letters().complemented(); }

Dfa Dfa::from_words(const std::set<std::string, std::less<>>& words) {
  // trie plus one sink
  std::vector<State> st{State{{-1, -1}, false}};
  for (const std::string& w : words) {
    int q = 0;
    for (char c : w) {
      int b = c == '1';
      if (st[static_cast<std::size_t>(q)].next[b] < 0) {
        st[static_cast<std::size_t>(q)].next[b] = static_cast<int>(st.size());
        st.push_back(State{{-1, -1}, false});
      }
      q = st[static_cast<std::size_t>(q)].next[b];
    }
    st[static_cast<std::size_t>(q)].accept = true;
  }
  int sink = static_cast<int>(st.size());
  st.push_back(State{{sink, sink}, false});
  for (State& s : st)
    for (int& t : s.next)
      if (t < 0)
        t = sink;
  return Dfa(std::move(st), 0);
}

bool Dfa::accepts(std::string_view bits) const {
  int q = start_;
  for (char c : bits)
    q = step(q, c);
  return states_[static_cast<std::size_t>(q)].accept;
}

Dfa Dfa::complemented() const {
  auto st = states_;
  for (State& s : st)
    s.accept = !s.accept;
  return Dfa(std::move(st), start_);
}

Dfa Dfa::flipped() const {
  auto st = states_;
  for (State& s : st)
    std::swap(s.next[0], s.next[1]);
  return Dfa(std::move(st), start_);
}

std::optional<std::string> Dfa::shortest_accepted() const {
  std::vector<int> parent(states_.size(), -2);
  std::vector<char> via(states_.size(), 0);
  std::deque<int> queue{start_};
  parent[static_cast<std::size_t>(start_)] = -1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    if (states_[static_cast<std::size_t>(q)].accept) {
      std::string out;
      for (int x = q; parent[static_cast<std::size_t>(x)] >= 0; x = parent[static_cast<std::size_t>(x)])
        out.insert(out.begin(), via[static_cast<std::size_t>(x)]);
      return out;
    }
    for (int b = 0; b < 2; ++b) {
      int t = states_[static_cast<std::size_t>(q)].next[static_cast<std::size_t>(b)];
      if (parent[static_cast<std::size_t>(t)] == -2) {
        parent[static_cast<std::size_t>(t)] = q;
        via[static_cast<std::size_t>(t)] = static_cast<char>('0' + b);
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

Dfa product(const Dfa& a, const Dfa& b, bool union_mode) {
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pending;
  std::vector<Dfa::State> st;
  auto id_of = [&](std::pair<int, int> key) {
    auto [it, fresh] = ids.emplace(key, static_cast<int>(st.size()));
    if (fresh) {
      bool acc_a = a.states()[static_cast<std::size_t>(key.first)].accept;
      bool acc_b = b.states()[static_cast<std::size_t>(key.second)].accept;
      st.push_back(Dfa::State{{-1, -1}, union_mode ? (acc_a || acc_b) : (acc_a && acc_b)});
      pending.push_back(key);
    }
    return it->second;
  };
  int start = id_of({a.start(), b.start()});
  while (!pending.empty()) {
    auto key = pending.back();
    pending.pop_back();
    int id = ids.at(key);
    for (int bit = 0; bit < 2; ++bit) {
      auto next = std::pair{a.states()[static_cast<std::size_t>(key.first)].next[static_cast<std::size_t>(bit)],
                            b.states()[static_cast<std::size_t>(key.second)].next[static_cast<std::size_t>(bit)]};
      int t = id_of(next);
      st[static_cast<std::size_t>(id)].next[static_cast<std::size_t>(bit)] = t;
    }
  }
  return Dfa(std::move(st), start);
}

bool Dfa::equivalent(const Dfa& other) const {
  // symmetric difference is empty
  Dfa x = product(*this, other.complemented(), false);
  Dfa y = product(complemented(), other, false);
  return !x.shortest_accepted() && !y.shortest_accepted();
}

// ---- regular expressions: literals, |, concatenation, *, e (empty word), parentheses

namespace {

struct Nfa {
  struct Node {
    std::vector<int> eps;
    std::array<std::vector<int>, 2> on;
  };
  std::vector<Node> nodes;
  int add() {
    nodes.emplace_back();
    return static_cast<int>(nodes.size()) - 1;
  }
};

struct Fragment {
  int in;
  int out;
};

class RegexParser {
public:
  RegexParser(std::string_view text, Nfa& nfa) : text_(text), nfa_(nfa) {}

  Fragment parse() {
    Fragment f = alternation();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

private:
  Fragment alternation() {
    Fragment f = concatenation();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      Fragment g = concatenation();
      int in = nfa_.add(), out = nfa_.add();
      link(in, f.in);
      link(in, g.in);
      link(f.out, out);
      link(g.out, out);
      f = {in, out};
    }
    return f;
  }

  Fragment concatenation() {
    std::optional<Fragment> acc;
    while (pos_ < text_.size() && text_[pos_] != '|' && text_[pos_] != ')') {
      Fragment g = starred();
      if (acc) {
        link(acc->out, g.in);
        acc->out = g.out;
      } else {
        acc = g;
      }
    }
    if (!acc) {
      int q = nfa_.add();
      return {q, q};
    }
    return *acc;
  }

  Fragment starred() {
    Fragment f = atom();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      int in = nfa_.add(), out = nfa_.add();
      link(in, f.in);
      link(in, out);
      link(f.out, f.in);
      link(f.out, out);
      f = {in, out};
    }
    return f;
  }

  Fragment atom() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Fragment f = alternation();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        fail("missing ')'");
      ++pos_;
      return f;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      int in = nfa_.add(), out = nfa_.add();
      nfa_.nodes[static_cast<std::size_t>(in)].on[static_cast<std::size_t>(c - '0')].push_back(out);
      return {in, out};
    }
    if (c == 'e') {
      ++pos_;
      int q = nfa_.add();
      return {q, q};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void link(int from, int to) { nfa_.nodes[static_cast<std::size_t>(from)].eps.push_back(to); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, "regular expression: " + what + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  Nfa& nfa_;
  std::size_t pos_ = 0;
};

std::vector<int> closure(const Nfa& nfa, std::vector<int> set) {
  std::vector<char> seen(nfa.nodes.size(), 0);
  std::vector<int> stack = set;
  for (int q : set)
    seen[static_cast<std::size_t>(q)] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int t : nfa.nodes[static_cast<std::size_t>(q)].eps)
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        set.push_back(t);
        stack.push_back(t);
      }
  }
  std::sort(set.begin(), set.end());
  return set;
}

} // namespace

Dfa Dfa::from_regex(std::string_view expr) {
  Nfa nfa;
  Fragment f = RegexParser(expr, nfa).parse();

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sets;
  std::vector<State> st;
  auto id_of = [&](std::vector<int> set) {
    auto [it, fresh] = ids.emplace(set, static_cast<int>(st.size()));
    if (fresh) {
      bool acc = std::binary_search(set.begin(), set.end(), f.out);
      st.push_back(State{{-1, -1}, acc});
      sets.push_back(std::move(set));
    }
    return it->second;
  };
  id_of(closure(nfa, {f.in}));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int bit = 0; bit < 2; ++bit) {
      std::vector<int> next;
      for (int q : sets[i])
        for (int t : nfa.nodes[static_cast<std::size_t>(q)].on[static_cast<std::size_t>(bit)])
          next.push_back(t);
      int t = id_of(closure(nfa, std::move(next)));
      st[i].next[static_cast<std::size_t>(bit)] = t;
    }
  }
  return Dfa(std::move(st), 0);
}

} // namespace langrep
