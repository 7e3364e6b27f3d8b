#include "langrep/classes.hpp"
#include "langrep/errors.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace langrep;

namespace {

std::size_t count_class(std::size_t n, ClassTag tag) {
  std::size_t c = 0;
  for (const Graph& g : enumerate_graphs(n))
    c += oracle(tag, g);
  return c;
}

// Clique plus independent set, by trying every subset as the clique.
bool split_by_subsets(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        bool ci = m >> i & 1u, cj = m >> j & 1u;
        if (ci && cj && !g.adjacent(i, j))
          ok = false;
        if (!ci && !cj && g.adjacent(i, j))
          ok = false;
      }
    if (ok)
      return true;
  }
  return false;
}

bool two_k2_free(const Graph& g) {
  auto e = g.edges();
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = x + 1; y < e.size(); ++y) {
      auto [a, b] = e[x];
      auto [c, d] = e[y];
      if (a == c || a == d || b == c || b == d)
        continue;
      if (!g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d))
        return false;
    }
  return true;
}

} // namespace

TEST_CASE("named examples") {
  CHECK_FALSE(oracle(ClassTag::interval, cycle_graph(4)));
  CHECK(oracle(ClassTag::circle, cycle_graph(4)));
  CHECK_FALSE(oracle(ClassTag::threshold, path_graph(4)));
  CHECK(treewidth_exact(complete_graph(4)) == 3);
  CHECK(treewidth_exact(cycle_graph(4)) == 2);
  CHECK(treewidth_exact(path_graph(6)) == 1);
  CHECK(treewidth_exact(null_graph(3)) == 0);
  CHECK(degeneracy(path_graph(7)) == 1);
  CHECK(degeneracy(complete_graph(5)) == 4);
  CHECK_FALSE(oracle(ClassTag::cograph, path_graph(4)));
  CHECK(oracle(ClassTag::complete_multipartite, complete_bipartite(2, 3)));
  CHECK(oracle(ClassTag::convex, complete_bipartite(1, 3)));
  CHECK(oracle(ClassTag::interval_bigraph, cycle_graph(4)));
  CHECK_FALSE(oracle(ClassTag::permutation, cycle_graph(5)));
  CHECK(oracle(ClassTag::halfline, disjoint_union(complete_graph(2), relabel(null_graph(1), {Vertex("z")}))));
  CHECK_THROWS_AS(oracle(ClassTag::interval, null_graph(12)), Error);
  CHECK(parse_tag("co-interval") == ClassTag::co_interval);
  CHECK_FALSE(parse_tag("forest").has_value());
}

TEST_CASE("class sizes on small orders") {
  // counts of unlabeled graphs per class for orders 1..6
  std::map<ClassTag, std::vector<std::size_t>> known{
      {ClassTag::bipartite, {1, 2, 3, 7, 13, 35}},  {ClassTag::chordal, {1, 2, 4, 10, 27, 94}},
      {ClassTag::interval, {1, 2, 4, 10, 27, 92}},  {ClassTag::cograph, {1, 2, 4, 10, 24, 66}},
      {ClassTag::split, {1, 2, 4, 9, 21, 56}},      {ClassTag::threshold, {1, 2, 4, 8, 16, 32}},
      {ClassTag::circle, {1, 2, 4, 11, 34}},
  };
  for (const auto& [tag, counts] : known)
    for (std::size_t n = 1; n <= counts.size(); ++n)
      CHECK_MESSAGE(count_class(n, tag) == counts[n - 1], tag_name(tag), " at order ", n);
}

TEST_CASE("cross identities up to order 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      bool chordal = oracle(ClassTag::chordal, g);
      bool cochordal = oracle(ClassTag::chordal, complement(g));
      bool comp = oracle(ClassTag::comparability, g);
      bool cocomp = oracle(ClassTag::cocomparability, g);
      REQUIRE(oracle(ClassTag::split, g) == (chordal && cochordal));
      REQUIRE(oracle(ClassTag::split, g) == split_by_subsets(g));
      REQUIRE(oracle(ClassTag::permutation, g) == (comp && cocomp));
      REQUIRE(oracle(ClassTag::interval, g) == (chordal && cocomp));
      REQUIRE(oracle(ClassTag::threshold, g) == (oracle(ClassTag::split, g) && oracle(ClassTag::cograph, g)));
      REQUIRE(oracle(ClassTag::cograph, g) == cotree(g).has_value());
      REQUIRE(oracle(ClassTag::bipartite_chain, g) == (oracle(ClassTag::bipartite, g) && two_k2_free(g)));
      REQUIRE(oracle(ClassTag::halfline, g) == halfline_model(g).has_value());
      if (oracle(ClassTag::bipartite_chain, g))
        REQUIRE(oracle(ClassTag::convex, g));
      if (oracle(ClassTag::convex, g))
        REQUIRE(oracle(ClassTag::bipartite, g));
      if (oracle(ClassTag::interval, g))
        REQUIRE(oracle(ClassTag::circle, g));
      REQUIRE(treewidth_exact(g) >= degeneracy(g));
    }
  }
}

TEST_CASE("witnesses are consistent with the graph") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (auto seq = interval_model(g)) {
        std::vector<std::size_t> first(n, 99), last(n, 0);
        for (std::size_t p = 0; p < seq->size(); ++p) {
          first[(*seq)[p]] = std::min(first[(*seq)[p]], p);
          last[(*seq)[p]] = p;
        }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            REQUIRE(g.adjacent(i, j) == !(last[i] < first[j] || last[j] < first[i]));
      }
      if (auto pm = permutation_model(g)) {
        auto pos = [](const std::vector<std::size_t>& o, std::size_t v) {
          return std::find(o.begin(), o.end(), v) - o.begin();
        };
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            bool flipped = (pos(pm->first, i) < pos(pm->first, j)) != (pos(pm->second, i) < pos(pm->second, j));
            REQUIRE(g.adjacent(i, j) == flipped);
          }
      }
      if (auto o = transitive_orientation(g)) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j)
              REQUIRE(g.adjacent(i, j) == (o->less(i, j) || o->less(j, i)));
            for (std::size_t k = 0; k < n; ++k)
              if (o->less(i, j) && o->less(j, k))
                REQUIRE(o->less(i, k));
          }
      }
      if (auto cs = creation_sequence(g)) {
        std::vector<std::size_t> seen;
        for (const auto& step : *cs) {
          for (std::size_t u : seen)
            REQUIRE(g.adjacent(u, step.vertex) == step.dominating);
          seen.push_back(step.vertex);
        }
      }
      if (auto cm = convex_model(g)) {
        for (std::size_t b : cm->others) {
          std::vector<int> hits;
          for (std::size_t a : cm->points)
            hits.push_back(g.adjacent(a, b));
          auto first = std::find(hits.begin(), hits.end(), 1);
          auto last = std::find(hits.rbegin(), hits.rend(), 1);
          if (first != hits.end())
            REQUIRE(std::count(first, last.base(), 0) == 0);
        }
      }
    }
  }
}
