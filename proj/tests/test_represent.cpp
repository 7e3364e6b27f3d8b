#include "langrep/classes.hpp"
#include "langrep/errors.hpp"
#include "langrep/represent.hpp"

#include <doctest.h>

#include <random>

using namespace langrep;

namespace {

Graph named(std::string_view names, const std::vector<std::string>& edges) {
  std::vector<Vertex> vs;
  for (char c : names)
    vs.emplace_back(std::string(1, c));
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : edges)
    es.emplace_back(Vertex(e.substr(0, 1)), Vertex(e.substr(1, 1)));
  return Graph(vs, es);
}

VertexWord random_word(std::mt19937& rng, std::size_t letters, std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < length; ++i)
    out.emplace_back(std::string(1, static_cast<char>('a' + pick(rng))));
  return VertexWord(out);
}

// Languages whose membership can be queried on any binary word.
std::vector<Language> sample_languages() {
  std::vector<std::string> specs{"<0101,0110>", "<0011>", "<01,001>", "<010>", "palindrome", "copy",
                                 "lyndon",      "dyck",   "wrep",     "balanced", "0n1n", "hull(re:0(0|1)*1)",
                                 "halfline",    "odd-counts", "k11(2)", "no-kk(2)"};
  std::vector<Language> out;
  for (const auto& s : specs)
    out.push_back(parse_language(s));
  return out;
}

} // namespace

TEST_CASE("small evaluations") {
  auto w = parse_word("14213243");
  CHECK(isomorphic(evaluate(w, parse_language("<0101>")), cycle_graph(4)));
  CHECK(isomorphic(evaluate(w, parse_language("<0011>")), disjoint_union(complete_graph(2), relabel(null_graph(2), {Vertex("x"), Vertex("y")}))));
  Graph two_k2 = disjoint_union(complete_graph(2), relabel(complete_graph(2), {Vertex("x"), Vertex("y")}));
  CHECK(isomorphic(evaluate(w, parse_language("<0011,0110>")), two_k2));
  auto line = parse_word("abcdef");
  CHECK(evaluate(line, parse_language("{}")) == null_graph(6));
  CHECK(evaluate(line, parse_language("all")) == complete_graph(6));
  CHECK(evaluate(w, parse_language("wrep")).edge_count() == 4);
}

TEST_CASE("worked examples") {
  Graph c4 = cycle_graph(4);
  CHECK(check(parse_word("423121123142"), parse_language("palindrome"), c4).match);
  CHECK(check(parse_word("121324123142"), parse_language("copy"), c4).match);
  CHECK(check(parse_word("111222333444123412341124113234234223224343433433444444"), parse_language("lyndon"), c4).match);
  CHECK(check(parse_word("14213243"), parse_language("<0101>"), c4).match);

  Graph c5k1 = disjoint_union(cycle_graph(5), relabel(null_graph(1), {Vertex("z")}));
  auto l = parse_language("<0011,0110>");
  CHECK(check(parse_word("eacdabdebcf"), l, c5k1).match);
  CHECK_FALSE(search(c5k1, l, uniform_bounds(6, {2})).word);

  auto miss = check(parse_word("aabb"), parse_language("<01>"), named("ab", {"ab"}));
  CHECK_FALSE(miss.match);
  REQUIRE(miss.differing);
  CHECK(miss.differing->first == Vertex("a"));
  CHECK(miss.differing->second == Vertex("b"));
}

TEST_CASE("asymmetric languages are rejected") {
  CHECK_THROWS_AS(evaluate(parse_word("ab"), parse_language("{01}")), Error);
  CHECK_THROWS_AS(search(path_graph(2), parse_language("{01}"), uniform_bounds(2, {1})), Error);
}

TEST_CASE("bounded search") {
  auto interval = parse_language("<0101,0110>");
  auto p3 = search(path_graph(3), interval, uniform_bounds(3, {2}));
  REQUIRE(p3.word);
  CHECK(evaluate(*p3.word, interval) == path_graph(3));
  CHECK_FALSE(search(cycle_graph(4), interval, uniform_bounds(4, {2})).word);

  auto circle = parse_language("<0101>");
  auto c4 = search(cycle_graph(4), circle, uniform_bounds(4, {2}));
  REQUIRE(c4.word);
  CHECK(evaluate(*c4.word, circle) == cycle_graph(4));

  CHECK_THROWS_AS(search(path_graph(3), interval, uniform_bounds(2, {2})), Error);
  CHECK_THROWS_AS(search(path_graph(3), interval, uniform_bounds(3, {0, 2})), Error);
  CHECK_THROWS_AS(search(cycle_graph(5), interval, uniform_bounds(5, {2, 3}), {0, 5}), Error);

  // max_len removes every vector above the cap
  CHECK_FALSE(search(path_graph(3), interval, uniform_bounds(3, {2}), {5, 1000}).word);
}

TEST_CASE("search agrees with the class oracles") {
  struct Row {
    const char* lang;
    ClassTag tag;
    std::set<std::size_t> freq;
  };
  std::vector<Row> rows{
      {"<0101,0110>", ClassTag::interval, {2}},   {"<0110>", ClassTag::permutation, {2}},
      {"<0101>", ClassTag::circle, {2}},          {"<0011>", ClassTag::co_interval, {2}},
      {"<001>", ClassTag::bipartite_chain, {1, 2}}, {"<010>", ClassTag::convex, {1, 2}},
      {"<01,001>", ClassTag::threshold, {1, 2}},
  };
  for (const auto& row : rows) {
    auto l = parse_language(row.lang);
    for (std::size_t n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        auto r = search(g, l, uniform_bounds(n, row.freq));
        REQUIRE_MESSAGE(r.word.has_value() == oracle(row.tag, g), row.lang, " on ", to_edge_list(g));
        if (r.word)
          REQUIRE(evaluate(*r.word, l) == g);
      }
  }
}

TEST_CASE("hereditarity, duality, boolean and reversal identities") {
  std::mt19937 rng(7);
  auto langs = sample_languages();
  for (int round = 0; round < 300; ++round) {
    auto w = random_word(rng, 2 + round % 5, 4 + round % 13);
    for (std::size_t i = 0; i < langs.size(); ++i) {
      const Language& l = langs[i];
      Graph g = evaluate(w, l);
      std::set<Vertex> keep;
      for (const Vertex& v : w.alphabet())
        if (rng() % 2)
          keep.insert(v);
      if (!keep.empty())
        REQUIRE(evaluate(project_set(w, keep), l) == induced(g, keep));
      REQUIRE(evaluate(w, complement(l)) == complement(g));
      REQUIRE(evaluate(reverse(w), reverse(l)) == g);

      const Language& other = langs[(i + 1 + round) % langs.size()];
      Graph h = evaluate(w, other);
      Graph both = evaluate(w, intersect(l, other));
      Graph either = evaluate(w, unite(l, other));
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = a + 1; b < g.order(); ++b) {
          REQUIRE(both.adjacent(a, b) == (g.adjacent(a, b) && h.adjacent(a, b)));
          REQUIRE(either.adjacent(a, b) == (g.adjacent(a, b) || h.adjacent(a, b)));
        }
    }
  }
}

TEST_CASE("reversal-closed languages ignore word reversal") {
  std::mt19937 rng(11);
  for (const char* spec : {"palindrome", "<0101,0110>", "wrep", "balanced", "<0011>"}) {
    auto l = parse_language(spec);
    for (int round = 0; round < 200; ++round) {
      auto w = random_word(rng, 4, 10);
      REQUIRE(evaluate(w, l) == evaluate(reverse(w), l));
    }
  }
}

TEST_CASE("twin insertion") {
  std::mt19937 rng(3);
  auto langs = sample_languages();
  for (int round = 0; round < 200; ++round) {
    auto w = random_word(rng, 4, 9);
    Vertex v = w[0];
    Vertex fresh("z");
    std::vector<Vertex> doubled;
    for (const Vertex& x : w.symbols()) {
      doubled.push_back(x);
      if (x == v)
        doubled.push_back(fresh);
    }
    VertexWord w2(doubled);
    for (const auto& l : langs) {
      Graph g = evaluate(w, l);
      Graph g2 = evaluate(w2, l);
      auto alpha = w.alphabet();
      REQUIRE(induced(g2, std::set<Vertex>(alpha.begin(), alpha.end())) == g);
      for (const Vertex& x : w.alphabet())
        if (x != v)
          REQUIRE(g2.adjacent(x, v) == g2.adjacent(x, fresh));
    }
  }
}

TEST_CASE("clique lemma and subgraph monotonicity") {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    auto w = random_word(rng, 4, 8);
    std::set<std::size_t> freqs;
    for (const auto& [v, c] : frequency_profile(w))
      freqs.insert(c);
    WordSet shuffles;
    for (std::size_t k : freqs)
      for (std::size_t m : freqs) {
        auto s = shuffle_finite({std::string(k, '0')}, {std::string(m, '1')});
        shuffles.insert(s.begin(), s.end());
      }
    Graph g = evaluate(w, Language::finite(shuffles));
    REQUIRE(g.edge_count() == g.order() * (g.order() - 1) / 2);

    auto small = parse_language("<0101>");
    auto large = parse_language("<0101,0110,0011>");
    Graph a = evaluate(w, small), b = evaluate(w, large);
    for (auto [x, y] : a.edges())
      REQUIRE(b.adjacent(x, y));
  }
}

TEST_CASE("repetition stability") {
  std::mt19937 rng(13);
  auto l = parse_language("hull(re:0(0|1)*1)");
  for (int round = 0; round < 200; ++round) {
    auto w = random_word(rng, 5, 8);
    Graph g = evaluate(w, l);
    REQUIRE(evaluate(concat(w, w), l) == g);
    REQUIRE(evaluate(concat(concat(w, w), w), l) == g);
  }
}

TEST_CASE("nearly uniform languages give bipartite graphs") {
  std::mt19937 rng(17);
  std::vector<Language> langs;
  for (auto [k, m] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
    auto all = shuffle_finite({std::string(k, '0')}, {std::string(m, '1')});
    WordSet pick;
    for (const auto& s : all)
      if (rng() % 2)
        pick.insert(s);
    langs.push_back(hull(Language::finite(pick)));
  }
  for (int round = 0; round < 300; ++round) {
    auto w = random_word(rng, 5, 12);
    for (const auto& l : langs)
      REQUIRE(oracle(ClassTag::bipartite, evaluate(w, l)));
  }
}

TEST_CASE("frequency decomposition") {
  auto l = parse_language("<01,001>");
  auto parts = decompose(parse_word("aabbc"), l);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].k == 1);
  CHECK(parts[0].l == 2);
  CHECK(parts[0].subgraph == named("abc", {"ac", "bc"}));

  auto uniform = decompose(parse_word("14213243"), parse_language("<0101>"));
  REQUIRE(uniform.size() == 1);
  CHECK(uniform[0].k == 2);
  CHECK(uniform[0].l == 2);
  CHECK(uniform[0].subgraph == evaluate(parse_word("14213243"), parse_language("<0101>")));

  Graph with_triple = evaluate(parse_word("abacbcddd"), parse_language("<0101,0110,01,001>"));
  CHECK(with_triple.degree(*with_triple.index_of(Vertex("d"))) == 0);

  std::mt19937 rng(19);
  auto langs = sample_languages();
  for (int round = 0; round < 200; ++round) {
    auto w = random_word(rng, 5, 10);
    for (const auto& lang : langs) {
      Graph g = evaluate(w, lang);
      std::set<Edge> covered;
      for (const auto& p : decompose(w, lang))
        for (auto [i, j] : p.subgraph.edges())
          covered.emplace(g.require_index(p.subgraph.name(i)), g.require_index(p.subgraph.name(j)));
      auto edges = g.edges();
      REQUIRE(covered == std::set<Edge>(edges.begin(), edges.end()));
    }
  }
}
