#include "langrep/cfg.hpp"

#include "langrep/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace langrep {

Cfg::Cfg(std::vector<std::string> nonterminals, std::vector<Production> rules, int start)
    : names_(std::move(nonterminals)), rules_(std::move(rules)), start_(start) {
  const int n = static_cast<int>(names_.size());
  if (start_ < 0 || start_ >= n)
    throw Error(ErrorKind::invalid_arguments, "grammar start symbol is not declared");
  for (const Production& p : rules_) {
    if (p.head < 0 || p.head >= n)
      throw Error(ErrorKind::invalid_arguments, "production head is not declared");
    for (const Symbol& s : p.body) {
      if (s.terminal ? (s.id != 0 && s.id != 1) : (s.id < 0 || s.id >= n))
        throw Error(ErrorKind::invalid_arguments, "production uses an undeclared symbol");
    }
  }
}

std::string Cfg::str() const {
  std::ostringstream out;
  for (std::size_t a = 0; a < names_.size(); ++a) {
    out << names_[a] << " ->";
    bool first = true;
    for (const Production& p : rules_) {
      if (p.head != static_cast<int>(a))
        continue;
      if (!first)
        out << " |";
      first = false;
      if (p.body.empty())
        out << " eps";
      for (const Symbol& s : p.body)
        out << ' ' << (s.terminal ? std::to_string(s.id) : names_[static_cast<std::size_t>(s.id)]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty())
        out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(std::move(cur));
  return out;
}

std::vector<char> nullable_set(const Cfg& g) {
  std::vector<char> nullable(g.nonterminals().size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& p : g.rules()) {
      if (nullable[static_cast<std::size_t>(p.head)])
        continue;
      bool all = std::all_of(p.body.begin(), p.body.end(), [&](const Symbol& s) {
        return !s.terminal && nullable[static_cast<std::size_t>(s.id)];
      });
      if (all) {
        nullable[static_cast<std::size_t>(p.head)] = 1;
        changed = true;
      }
    }
  }
  return nullable;
}

} // namespace

Cfg parse_cfg(std::string_view text) {
  struct Line {
    std::string head;
    std::string rhs;
    int number;
  };
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#')
      continue;
    auto arrow = raw.find("->");
    if (arrow == std::string::npos)
      throw Error(ErrorKind::parse, "grammar line " + std::to_string(number) + " lacks '->'");
    auto head = split_ws(raw.substr(0, arrow));
    if (head.size() != 1)
      throw Error(ErrorKind::parse, "grammar line " + std::to_string(number) + " needs exactly one head");
    lines.push_back({head.front(), raw.substr(arrow + 2), number});
  }
  if (lines.empty())
    throw Error(ErrorKind::parse, "grammar has no rules");

  std::vector<std::string> names;
  std::map<std::string, int> ids;
  for (const Line& l : lines)
    if (ids.emplace(l.head, static_cast<int>(names.size())).second)
      names.push_back(l.head);

  std::vector<Production> rules;
  for (const Line& l : lines) {
    int head = ids.at(l.head);
    auto tokens = split_ws(l.rhs);
    if (tokens.empty())
      continue;
    std::vector<Symbol> body;
    bool pending = false;
    auto flush = [&] {
      if (!pending)
        throw Error(ErrorKind::parse, "grammar line " + std::to_string(l.number) + " has an empty alternative");
      rules.push_back({head, body});
      body.clear();
      pending = false;
    };
    for (const std::string& t : tokens) {
      if (t == "|") {
        flush();
      } else if (t == "eps") {
        pending = true;
      } else if (t == "0" || t == "1") {
        body.push_back(Symbol::bit(t == "1"));
        pending = true;
      } else {
        auto it = ids.find(t);
        if (it == ids.end())
          throw Error(ErrorKind::parse, "grammar line " + std::to_string(l.number) + " uses undeclared '" + t + "'");
        body.push_back(Symbol::var(it->second));
        pending = true;
      }
    }
    flush();
  }
  return Cfg(std::move(names), std::move(rules), 0);
}

Cfg binarize(const Cfg& g) {
  auto names = g.nonterminals();
  std::vector<Production> rules;
  int fresh = 0;
  for (const Production& p : g.rules()) {
    if (p.body.size() <= 2) {
      rules.push_back(p);
      continue;
    }
    int head = p.head;
    for (std::size_t i = 0; i + 2 < p.body.size(); ++i) {
      int next = static_cast<int>(names.size());
      names.push_back(g.nonterminals()[static_cast<std::size_t>(p.head)] + "#" + std::to_string(fresh++));
      rules.push_back({head, {p.body[i], Symbol::var(next)}});
      head = next;
    }
    rules.push_back({head, {p.body[p.body.size() - 2], p.body.back()}});
  }
  return Cfg(std::move(names), std::move(rules), g.start());
}

bool cfg_contains(const Cfg& grammar, std::string_view bits) {
  Cfg g = binarize(grammar);
  const std::size_t n = bits.size();
  const std::size_t nt = g.nonterminals().size();
  auto nullable = nullable_set(g);

  // table[i][j] for the span bits[i, j)
  std::vector<std::vector<std::vector<char>>> table(n + 1, std::vector<std::vector<char>>(n + 1));
  auto derives = [&](const Symbol& s, std::size_t i, std::size_t j) -> bool {
    if (s.terminal)
      return j == i + 1 && bits[i] == static_cast<char>('0' + s.id);
    if (i == j)
      return nullable[static_cast<std::size_t>(s.id)] != 0;
    return table[i][j][static_cast<std::size_t>(s.id)] != 0;
  };

  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t j = i + len;
      auto& cell = table[i][j];
      cell.assign(nt, 0);
      for (bool changed = true; changed;) {
        changed = false;
        for (const Production& p : g.rules()) {
          auto h = static_cast<std::size_t>(p.head);
          if (cell[h] || p.body.empty())
            continue;
          bool ok = false;
          if (p.body.size() == 1) {
            ok = derives(p.body[0], i, j);
          } else {
            for (std::size_t k = i; k <= j && !ok; ++k)
              ok = derives(p.body[0], i, k) && derives(p.body[1], k, j);
          }
          if (ok) {
            cell[h] = 1;
            changed = true;
          }
        }
      }
    }
  }
  if (n == 0)
    return nullable[static_cast<std::size_t>(g.start())] != 0;
  return table[0][n][static_cast<std::size_t>(g.start())] != 0;
}

Cfg intersect_regular(const Cfg& grammar, const Dfa& d) {
  Cfg g = binarize(grammar);
  const int states = static_cast<int>(d.size());
  using Triple = std::tuple<int, int, int>;
  std::map<Triple, int> ids;
  std::vector<Triple> triples;
  std::vector<std::string> names{"start"};
  std::vector<Production> rules;
  auto id_of = [&](int p, int a, int q) {
    auto [it, fresh] = ids.emplace(Triple{p, a, q}, static_cast<int>(names.size()));
    if (fresh) {
      names.push_back("[" + std::to_string(p) + "," + g.nonterminals()[static_cast<std::size_t>(a)] + "," +
                      std::to_string(q) + "]");
      triples.push_back({p, a, q});
    }
    return it->second;
  };

  for (int f = 0; f < states; ++f)
    if (d.states()[static_cast<std::size_t>(f)].accept)
      rules.push_back({0, {Symbol::var(id_of(d.start(), g.start(), f))}});

  std::vector<std::vector<const Production*>> by_head(g.nonterminals().size());
  for (const Production& p : g.rules())
    by_head[static_cast<std::size_t>(p.head)].push_back(&p);

  // bridge(p, X, q): the product symbol for X read from p to q, if any
  auto bridge = [&](int p, const Symbol& x, int q) -> std::optional<Symbol> {
    if (x.terminal) {
      if (d.states()[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(x.id)] == q)
        return x;
      return std::nullopt;
    }
    return Symbol::var(id_of(p, x.id, q));
  };

  for (std::size_t done = 0; done < triples.size(); ++done) {
    auto [p, a, q] = triples[done];
    int head = ids.at(triples[done]);
    for (const Production* rule : by_head[static_cast<std::size_t>(a)]) {
      const auto& body = rule->body;
      if (body.empty()) {
        if (p == q)
          rules.push_back({head, {}});
      } else if (body.size() == 1) {
        if (auto s = bridge(p, body[0], q))
          rules.push_back({head, {*s}});
      } else {
        for (int r = 0; r < states; ++r) {
          // check terminals before creating nonterminal triples
          if (body[0].terminal && d.states()[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(body[0].id)] != r)
            continue;
          if (body[1].terminal && d.states()[static_cast<std::size_t>(r)].next[static_cast<std::size_t>(body[1].id)] != q)
            continue;
          auto left = bridge(p, body[0], r);
          auto right = bridge(r, body[1], q);
          rules.push_back({head, {*left, *right}});
        }
      }
    }
  }
  return Cfg(std::move(names), std::move(rules), 0);
}

bool is_empty(const Cfg& g) {
  std::vector<char> generating(g.nonterminals().size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& p : g.rules()) {
      if (generating[static_cast<std::size_t>(p.head)])
        continue;
      bool all = std::all_of(p.body.begin(), p.body.end(), [&](const Symbol& s) {
        return s.terminal || generating[static_cast<std::size_t>(s.id)];
      });
      if (all) {
        generating[static_cast<std::size_t>(p.head)] = 1;
        changed = true;
      }
    }
  }
  return !generating[static_cast<std::size_t>(g.start())];
}

std::optional<std::string> shortest_word(const Cfg& g) {
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
  const std::size_t nt = g.nonterminals().size();
  std::vector<std::uint64_t> best(nt, inf);
  std::vector<const Production*> via(nt, nullptr);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& p : g.rules()) {
      std::uint64_t total = 0;
      for (const Symbol& s : p.body) {
        std::uint64_t len = s.terminal ? 1 : best[static_cast<std::size_t>(s.id)];
        if (len == inf || total > inf / 2 || len > inf / 2) {
          total = inf;
          break;
        }
        total += len;
      }
      auto h = static_cast<std::size_t>(p.head);
      if (total < best[h]) {
        best[h] = total;
        via[h] = &p;
        changed = true;
      }
    }
  }
  auto root = static_cast<std::size_t>(g.start());
  if (best[root] == inf)
    return std::nullopt;
  constexpr std::uint64_t cap = 1u << 24;
  if (best[root] > cap)
    throw Error(ErrorKind::capacity, "shortest word has " + std::to_string(best[root]) + " letters");

  std::string out;
  std::vector<Symbol> stack{Symbol::var(g.start())};
  while (!stack.empty()) {
    Symbol s = stack.back();
    stack.pop_back();
    if (s.terminal) {
      out += static_cast<char>('0' + s.id);
      continue;
    }
    const auto& body = via[static_cast<std::size_t>(s.id)]->body;
    for (auto it = body.rbegin(); it != body.rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

Cfg flip_terminals(const Cfg& g) {
  auto rules = g.rules();
  for (Production& p : rules)
    for (Symbol& s : p.body)
      if (s.terminal)
        s.id = 1 - s.id;
  return Cfg(g.nonterminals(), std::move(rules), g.start());
}

Cfg reverse_productions(const Cfg& g) {
  auto rules = g.rules();
  for (Production& p : rules)
    std::reverse(p.body.begin(), p.body.end());
  return Cfg(g.nonterminals(), std::move(rules), g.start());
}

Cfg union_grammar(const Cfg& a, const Cfg& b) {
  std::vector<std::string> names{"union"};
  auto offset_a = static_cast<int>(names.size());
  for (const auto& n : a.nonterminals())
    names.push_back(n + ".a");
  auto offset_b = static_cast<int>(names.size());
  for (const auto& n : b.nonterminals())
    names.push_back(n + ".b");
  std::vector<Production> rules{{0, {Symbol::var(a.start() + offset_a)}}, {0, {Symbol::var(b.start() + offset_b)}}};
  auto copy = [&](const Cfg& g, int offset) {
    for (Production p : g.rules()) {
      p.head += offset;
      for (Symbol& s : p.body)
        if (!s.terminal)
          s.id += offset;
      rules.push_back(std::move(p));
    }
  };
  copy(a, offset_a);
  copy(b, offset_b);
  return Cfg(std::move(names), std::move(rules), 0);
}

} // namespace langrep
