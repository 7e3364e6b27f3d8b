#include "langrep/errors.hpp"
#include "langrep/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace langrep;

namespace {

// Canonical code: lexicographically smallest upper-triangle bit string over all relabelings.
std::string brute_canonical(std::size_t n, const std::vector<std::vector<bool>>& adj) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        code += adj[perm[i]][perm[j]] ? '1' : '0';
    if (best.empty() || code < best)
      best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t labeled_class_count(std::size_t n) {
  std::vector<Edge> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      slots.emplace_back(i, j);
  std::set<std::string> seen;
  for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (m >> s & 1u)
        adj[slots[s].first][slots[s].second] = adj[slots[s].second][slots[s].first] = true;
    seen.insert(brute_canonical(n, adj));
  }
  return seen.size();
}

Graph named(const std::vector<std::string>& names, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Vertex> v;
  for (const auto& s : names)
    v.emplace_back(s);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const auto& [a, b] : edges)
    e.emplace_back(Vertex(a), Vertex(b));
  return Graph(v, e);
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng))
        e.emplace_back(i, j);
  return Graph(default_names(n), e);
}

} // namespace

TEST_CASE("complement, union and join") {
  Graph k23 = complete_bipartite(2, 3);
  Graph k2k3 = disjoint_union(complete_graph(2), relabel(complete_graph(3), {Vertex("x"), Vertex("y"), Vertex("z")}));
  CHECK(isomorphic(complement(k23), k2k3));
  Graph n2n3 = join(null_graph(2), relabel(null_graph(3), {Vertex("x"), Vertex("y"), Vertex("z")}));
  CHECK(isomorphic(n2n3, k23));
  CHECK_THROWS_AS(disjoint_union(null_graph(2), null_graph(2)), Error);
  Graph c4 = cycle_graph(4);
  CHECK(isomorphic(induced(c4, std::set<Vertex>{Vertex("a"), Vertex("b"), Vertex("c")}), path_graph(3)));
  CHECK(complement(complement(c4)) == c4);
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
  CHECK_FALSE(isomorphic(cycle_graph(5), path_graph(5)));
  auto m = isomorphism(cycle_graph(4), complete_bipartite(2, 2));
  REQUIRE(m.has_value());
  Graph a = cycle_graph(4), b = complete_bipartite(2, 2);
  for (auto [i, j] : a.edges())
    CHECK(b.adjacent((*m)[i], (*m)[j]));
  CHECK_THROWS_AS(isomorphic(null_graph(11), null_graph(11)), Error);
  auto four = enumerate_graphs(4);
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j)
      CHECK_FALSE(isomorphic(four[i], four[j]));
}

TEST_CASE("enumeration counts") {
  std::vector<std::size_t> expect{1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(enumerate_graphs(n).size() == expect[n - 1]);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(labeled_class_count(n) == enumerate_graphs(n).size());
  CHECK_THROWS_AS(enumerate_graphs(8), Error);
}

TEST_CASE("structural laws on random graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g1 = random_graph(rng, 4, 0.5);
    Graph g2 = relabel(random_graph(rng, 3, 0.5), {Vertex("x"), Vertex("y"), Vertex("z")});
    CHECK(isomorphic(complement(disjoint_union(g1, g2)), join(complement(g1), complement(g2))));
    for (bool kind : {true, false}) {
      Graph t = add_twin(g1, Vertex("b"), kind);
      CHECK(t.order() == 5);
      CHECK(t.adjacent(Vertex("b"), Vertex("b'")) == kind);
      for (const Vertex& v : g1.vertices())
        if (v != Vertex("b"))
          CHECK(t.adjacent(v, Vertex("b")) == t.adjacent(v, Vertex("b'")));
      CHECK(induced(t, std::set<Vertex>(g1.vertices().begin(), g1.vertices().end())) == g1);
    }
  }
}

TEST_CASE("text formats") {
  Graph g = parse_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"]]})");
  CHECK(g.order() == 3);
  CHECK(g.adjacent(Vertex("a"), Vertex("b")));
  CHECK(parse_graph(to_json(g)) == g);
  CHECK(parse_graph(to_edge_list(g)) == g);
  Graph h = parse_graph("2 1\nu v\n");
  CHECK(h == named({"u", "v"}, {{"u", "v"}}));
  CHECK_THROWS_AS(parse_graph("3 1\nu v\n"), Error);
  CHECK(parse_graph("3 1\nv: w\nu v\n").order() == 3);
  CHECK(to_dot(h).find("\"u\" -- \"v\"") != std::string::npos);
  CHECK_THROWS_AS(parse_graph("{\"vertices\":[\"a\"],\"edges\":[[\"a\",\"a\"]]}"), Error);
  CHECK_THROWS_AS(parse_graph("{oops"), Error);
}
