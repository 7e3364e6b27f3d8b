#include "langrep/errors.hpp"
#include "langrep/language.hpp"
#include "langrep/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace langrep;

namespace {

std::vector<std::string> all_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i)
        w += (m >> (len - 1 - i) & 1u) ? '1' : '0';
      out.push_back(w);
    }
  return out;
}

// Lyndon by definition: strictly smaller than every proper rotation.
bool lyndon_by_rotation(const std::string& w, bool zero_first) {
  if (w.empty())
    return false;
  auto key = [&](std::string s) {
    if (!zero_first)
      for (char& c : s)
        c = c == '0' ? '1' : '0';
    return s;
  };
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::string rot = w.substr(r) + w.substr(0, r);
    if (!(key(w) < key(rot)))
      return false;
  }
  return true;
}

bool alternates(const std::string& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1])
      return false;
  return true;
}

bool prefix_dominated(const std::string& w, char up) {
  int level = 0;
  for (char c : w) {
    level += c == up ? 1 : -1;
    if (level < 0)
      return false;
  }
  return level == 0;
}

bool is_0n1n(const std::string& w) {
  std::size_t h = w.size() / 2;
  if (w.size() % 2)
    return false;
  return w == std::string(h, '0') + std::string(h, '1');
}

const char* dyck_grammar = "S -> 1 S 0 S | eps\n";
const char* zero_n_one_n_grammar = "S -> 0 S 1 | eps\n";
const char* one_letter_grammar = "S -> A | B\nA -> 0 A | eps\nB -> 1 B | eps\n";
const char* zeros_grammar = "S -> 0 S | eps\n";

} // namespace

TEST_CASE("builtin examples") {
  CHECK(hull(Language::finite({"0101"})).contains("1010"));
  CHECK_FALSE(parse_language("dyck").contains("011001"));
  CHECK(parse_language("wrep").contains("0101"));
  CHECK_FALSE(parse_language("wrep").contains("0110"));
  CHECK(parse_language("copy").contains(""));
  CHECK_FALSE(parse_language("palindrome").contains(""));
  CHECK(parse_language("0n1n").contains(""));
  CHECK(parse_language("0n1n").contains("1100"));
  CHECK(parse_language("wrep").contains(""));
  CHECK(parse_language("k11(1)").contains("0010"));
  CHECK_FALSE(parse_language("k11(1)").contains("0001"));
  CHECK(parse_language("no-kk(3)").contains("001001"));
  CHECK_FALSE(parse_language("no-kk(3)").contains("0001"));
  CHECK(parse_language("odd-counts").contains("01"));
  CHECK(parse_language("even-counts").contains(""));
  CHECK(parse_language("uniform(2)").contains("0110"));
}

TEST_CASE("lyndon agrees with the rotation definition up to length 14") {
  Language lyn = parse_language("lyndon");
  Language odd = parse_language("lyndon-odd");
  for (const auto& w : all_words(14)) {
    bool expect = lyndon_by_rotation(w, true) || lyndon_by_rotation(w, false);
    REQUIRE(lyn.contains(w) == expect);
    REQUIRE(odd.contains(w) == (expect && w.size() % 2 == 1));
  }
}

TEST_CASE("builtins against direct definitions") {
  Language dyck = parse_language("dyck"), wrep = parse_language("wrep"), n1n = parse_language("0n1n");
  Language pal = parse_language("palindrome"), copy = parse_language("copy");
  for (const auto& w : all_words(10)) {
    REQUIRE(dyck.contains(w) == (prefix_dominated(w, '1') || prefix_dominated(w, '0')));
    REQUIRE(wrep.contains(w) == alternates(w));
    REQUIRE(n1n.contains(w) == (is_0n1n(w) || is_0n1n(flip_bits(w))));
    std::string r(w.rbegin(), w.rend());
    REQUIRE(pal.contains(w) == (!w.empty() && r == w));
    bool is_copy = false;
    for (std::size_t h = 0; 2 * h <= w.size(); ++h)
      is_copy = is_copy || (2 * h == w.size() && w.substr(0, h) == w.substr(h));
    REQUIRE(copy.contains(w) == is_copy);
  }
}

TEST_CASE("every builtin is closed under bit complement") {
  std::mt19937 rng(11);
  std::vector<Language> all;
  for (const char* s : {"palindrome", "copy", "lyndon", "lyndon-odd", "dyck", "wrep", "k11(2)", "no-kk(3)", "balanced",
                        "0n1n", "uniform(2)", "odd-counts", "even-counts", "halfline"})
    all.push_back(parse_language(s));
  std::uniform_int_distribution<int> len(0, 16), bit(0, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string w;
    for (int i = len(rng); i > 0; --i)
      w += static_cast<char>('0' + bit(rng));
    for (const Language& l : all)
      REQUIRE(l.contains(w) == l.contains(flip_bits(w)));
  }
  for (const Language& l : all)
    CHECK(l.symmetric());
}

TEST_CASE("regular expressions") {
  Language wrep_re = parse_language("re:(1|e)(01)*(0|e)");
  CHECK(wrep_re.symmetric());
  Language wrep = parse_language("wrep");
  for (const auto& w : all_words(10))
    REQUIRE(wrep_re.contains(w) == wrep.contains(w));
  Language ends = parse_language("re:0(0|1)*1");
  CHECK_FALSE(ends.symmetric());
  CHECK(parse_language("hull(re:0(0|1)*1)").symmetric());
  CHECK(parse_language("hull(re:0(0|1)*1)").contains("1000"));
  CHECK_THROWS_AS(parse_language("re:(01"), Error);
  auto d = Dfa::from_regex("0*1*");
  CHECK(d.accepts(""));
  CHECK(d.accepts("0011"));
  CHECK_FALSE(d.accepts("10"));
}

TEST_CASE("finite compilation agrees with set membership") {
  WordSet f{"", "01", "0110", "1", "111"};
  Dfa d = Dfa::from_words(f);
  for (const auto& w : all_words(5))
    REQUIRE(d.accepts(w) == (f.count(w) > 0));
}

TEST_CASE("hull, complement and friends") {
  Language h = hull(Language::finite({"001"}));
  CHECK(*h.finite_words() == WordSet{"001", "110"});
  CHECK(*hull(h).finite_words() == *h.finite_words());
  CHECK_FALSE(parse_language("not({01,10})").contains("01"));
  CHECK(parse_language("not({01,10})").contains("0"));

  Language wu = parse_language("and(wrep,uniform(2))");
  WordSet accepted;
  for (const auto& w : all_words(8))
    if (wu.contains(w))
      accepted.insert(w);
  WordSet expect;
  for (const auto& w : all_words(4))
    if (w.size() == 4 && std::count(w.begin(), w.end(), '0') == 2 && alternates(w))
      expect.insert(w);
  CHECK(accepted == expect);
  CHECK(accepted == WordSet{"0101", "1010"});

  CHECK(parse_language("rev(<001>)").contains("100"));
  CHECK(parse_language("or(<01>,wrep)").contains("0110") == false);
  CHECK(parse_language("or(<0110>,wrep)").contains("0110"));
  CHECK(parse_language("halfline").contains("1001"));
  CHECK(parse_language("all").contains("0001"));
  CHECK(parse_language("{}").finite_words()->empty());
  CHECK(parse_language("{e,01}").contains(""));
}

TEST_CASE("symmetry enforcement") {
  Language l = parse_language("{001}");
  CHECK_FALSE(l.symmetric());
  try {
    l.require_symmetric();
    FAIL("expected not-symmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_symmetric);
    CHECK(std::string(e.what()).find("001") != std::string::npos);
  }
  CHECK(parse_language("<001>").symmetric());
}

TEST_CASE("shuffle") {
  CHECK(shuffle_finite({"0"}, {"11"}) == WordSet{"011", "101", "110"});
  auto s = shuffle_finite({"00"}, {"11"});
  CHECK(s.size() == 6);
  for (const auto& w : s)
    CHECK(std::count(w.begin(), w.end(), '0') == 2);
  CHECK(shuffle_finite({""}, {"01"}) == WordSet{"01"});
}

TEST_CASE("frequencies and trash") {
  auto t = freq_and_trash(parse_language("<01,001>"));
  CHECK(t.frequencies.values == std::set<std::size_t>{1, 2});
  auto u = freq_and_trash(parse_language("<0101>"));
  CHECK(u.trash.contains("011"));
  CHECK_FALSE(u.trash.contains("0110"));
  CHECK(u.trash.contains(""));
  CHECK(u.extended.contains("0101"));
  CHECK(u.extended.contains("000111"));
  CHECK_FALSE(u.extended.contains("0011"));
  auto e = freq_and_trash(parse_language("{}"));
  CHECK(e.frequencies.values.empty());
  for (const auto& w : all_words(6))
    REQUIRE(e.trash.contains(w));
  CHECK_THROWS_AS(freq_and_trash(parse_language("wrep")), Error);
  CHECK(parse_language("trash-ext(<0101>)").contains("0001"));
}

TEST_CASE("grammar membership") {
  Cfg dyck = parse_cfg(dyck_grammar);
  CHECK(cfg_contains(dyck, "1100"));
  CHECK_FALSE(cfg_contains(dyck, "0"));
  CHECK(cfg_contains(dyck, ""));
  Cfg one = parse_cfg(one_letter_grammar);
  CHECK_FALSE(cfg_contains(one, "01"));
  for (const auto& w : all_words(10)) {
    REQUIRE(cfg_contains(dyck, w) == prefix_dominated(w, '1'));
    REQUIRE(cfg_contains(parse_cfg(zero_n_one_n_grammar), w) == is_0n1n(w));
    bool single = w.find('0') == std::string::npos || w.find('1') == std::string::npos;
    REQUIRE(cfg_contains(one, w) == single);
  }
  CHECK_THROWS_AS(parse_cfg("S -> X\n"), Error);
  CHECK_THROWS_AS(parse_cfg("S 0\n"), Error);
  Cfg long_rule = parse_cfg("S -> 0 1 1 0 S | eps\n");
  CHECK(cfg_contains(long_rule, "01100110"));
  CHECK_FALSE(cfg_contains(long_rule, "0110011"));
}

TEST_CASE("grammar intersection with automata") {
  std::vector<Cfg> grammars{parse_cfg(dyck_grammar), parse_cfg(zero_n_one_n_grammar), parse_cfg(one_letter_grammar),
                            parse_cfg(zeros_grammar), parse_cfg("S -> S S | 0 S 1 | 1 | eps\n")};
  std::vector<Dfa> automata{Dfa::both_letters(), Dfa::single_letter(), Dfa::from_regex("(01)*"),
                            Dfa::from_regex("1(0|1)*"), Dfa::everything(), Dfa::nothing()};
  auto words = all_words(8);
  for (const Cfg& g : grammars) {
    for (const Dfa& d : automata) {
      Cfg x = intersect_regular(g, d);
      for (const auto& w : words)
        REQUIRE(cfg_contains(x, w) == (cfg_contains(g, w) && d.accepts(w)));
    }
  }
}

TEST_CASE("emptiness") {
  Cfg n1n = parse_cfg(zero_n_one_n_grammar);
  CHECK_FALSE(is_empty(intersect_regular(n1n, Dfa::single_letter())));
  CHECK_FALSE(is_empty(intersect_regular(n1n, Dfa::both_letters())));
  CHECK(cfg_contains(n1n, "0011"));
  CHECK(is_empty(parse_cfg("S ->\n")));
  CHECK(is_empty(intersect_regular(parse_cfg(zeros_grammar), Dfa::both_letters())));
  CHECK(is_empty(parse_cfg("S -> 0 S\n")));

  // bounded enumeration as an independent check
  std::vector<Cfg> grammars{parse_cfg(dyck_grammar), parse_cfg("S -> 0 S\n"), parse_cfg("S -> A B\nA -> 0\nB -> B 1\n"),
                            parse_cfg("S -> A A\nA -> 0 1 | A\n"), parse_cfg("S ->\n")};
  for (const Cfg& g : grammars) {
    std::size_t bound = 2 * binarize(g).nonterminals().size();
    bool found = false;
    for (const auto& w : all_words(bound))
      found = found || cfg_contains(g, w);
    CHECK(is_empty(g) == !found);
  }
}

TEST_CASE("shortest words") {
  CHECK(shortest_word(parse_cfg(dyck_grammar)) == std::string());
  CHECK(shortest_word(intersect_regular(parse_cfg(zero_n_one_n_grammar), Dfa::both_letters())) == "01");
  CHECK_FALSE(shortest_word(parse_cfg("S ->\n")).has_value());
  auto deep = shortest_word(parse_cfg("S -> A A\nA -> B B\nB -> C C\nC -> 0 | 1 C\n"));
  CHECK(deep == std::string(8, '0'));
}

TEST_CASE("grammar-backed languages") {
  Language g = Language::grammar(parse_cfg(dyck_grammar), false, "dyck-cfg");
  CHECK_FALSE(g.symmetric());
  Language h = hull(g);
  CHECK(h.symmetric());
  Language dyck = parse_language("dyck");
  for (const auto& w : all_words(8))
    REQUIRE(h.contains(w) == dyck.contains(w));
  CHECK_THROWS_AS(complement(h), Error);
  CHECK_THROWS_AS(intersect(h, dyck), Error);
  CHECK(unite(h, parse_language("<01>")).contains("01"));
  CHECK_FALSE(reverse(g).contains("1010"));
  CHECK(reverse(g).contains("0101"));
  CHECK(reverse(g).contains("0011"));
}
