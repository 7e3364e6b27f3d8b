#include "langrep/errors.hpp"
#include "langrep/words.hpp"

#include <doctest.h>

#include <random>

using namespace langrep;

namespace {

VertexWord random_word(std::mt19937& rng, std::size_t max_len, int letters) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, letters - 1);
  std::vector<Vertex> out;
  for (std::size_t i = len(rng); i > 0; --i)
    out.emplace_back(std::string(1, static_cast<char>('a' + pick(rng))));
  return VertexWord(std::move(out));
}

// Position-by-position scan kept apart from the library's implementation.
std::string scan_projection(const std::string& w, char u, char v) {
  std::string out;
  for (char c : w)
    if (c == u || c == v)
      out += c == u ? '0' : '1';
  return out;
}

} // namespace

TEST_CASE("projection of the example words") {
  CHECK(project(parse_word("14213243"), Vertex("1"), Vertex("2")).str() == "0101");
  CHECK(project(parse_word("aaa"), Vertex("a"), Vertex("b")).str() == "000");
  auto w = parse_word("423121123142");
  CHECK(project(w, Vertex("1"), Vertex("3")).str() == scan_projection("423121123142", '1', '3'));
  CHECK(project(w, Vertex("1"), Vertex("3")).str() == "100010");
  CHECK_THROWS_AS(project(w, Vertex("1"), Vertex("1")), Error);
}

TEST_CASE("projection onto a vertex set") {
  CHECK(project_set(parse_word("abcabc"), {Vertex("a"), Vertex("c")}).str() == "acac");
  CHECK(project_set(parse_word("14213243"), {Vertex("1"), Vertex("4")}).str() == "1414");
  CHECK(project_set(parse_word("abab"), {Vertex("a"), Vertex("b")}).str() == "abab");
  try {
    project_set(parse_word("abab"), {Vertex("z")});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_projection);
  }
}

TEST_CASE("binary word morphisms") {
  CHECK(complement_word(BinaryWord("0110")).str() == "1001");
  CHECK(normal_form(BinaryWord("110")).str() == "001");
  CHECK(reverse(BinaryWord("001")).str() == "100");
  CHECK_THROWS_AS(BinaryWord("012"), Error);
  CHECK(BinaryWord().empty());
}

TEST_CASE("frequencies and uniformity") {
  auto p = frequency_profile(parse_word("aabb"));
  CHECK(p.at(Vertex("a")) == 2);
  CHECK(p.at(Vertex("b")) == 2);
  CHECK(is_k_uniform(parse_word("aabb"), 2));
  CHECK(is_k_uniform(parse_word("14213243"), 2));
  CHECK_FALSE(is_k_uniform(parse_word("aab"), 2));
  CHECK(is_k_uniform(BinaryWord("0110"), 2));
}

TEST_CASE("word parsing and printing") {
  auto w = parse_word("v1 v2, v1");
  CHECK(w.size() == 3);
  CHECK(w.str() == "v1 v2 v1");
  CHECK(parse_word("abc").str() == "abc");
  CHECK(w.alphabet().size() == 2);
  CHECK_THROWS_AS(parse_word("  "), Error);
  CHECK_THROWS_AS(Vertex("a b"), Error);
  CHECK_THROWS_AS(VertexWord({}), Error);
  auto iw = index_word(parse_word("cab"));
  CHECK(iw.letters == std::vector<int>{2, 0, 1});
  CHECK(word_from_indices(iw.alphabet, iw.letters).str() == "cab");
}

TEST_CASE("projection laws on random words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto w1 = random_word(rng, 12, 4);
    auto w2 = random_word(rng, 12, 4);
    Vertex u("a"), v("b");
    CHECK(project(concat(w1, w2), u, v).str() == project(w1, u, v).str() + project(w2, u, v).str());
    CHECK(project(w1, u, v) == complement_word(project(w1, v, u)));
    CHECK(project(reverse(w1), u, v) == reverse(project(w1, u, v)));
    auto b = project(w1, u, v);
    CHECK(normal_form(normal_form(b)) == normal_form(b));
    CHECK(normal_form(b) == normal_form(complement_word(b)));
    CHECK(project(w1, u, v).str() == scan_projection(w1.str(), 'a', 'b'));
  }
}
