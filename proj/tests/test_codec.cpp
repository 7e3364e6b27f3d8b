#include "langrep/codec.hpp"
#include "langrep/errors.hpp"
#include "langrep/language.hpp"
#include "langrep/represent.hpp"

#include <doctest.h>

#include <random>

using namespace langrep;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.emplace_back(i, j);
  return Graph(default_names(n), edges);
}

std::size_t header_size(std::size_t n, std::size_t len) {
  auto varint = [](std::size_t v) {
    std::size_t b = 1;
    while (v >= 0x80) {
      v >>= 7;
      ++b;
    }
    return b;
  };
  return 5 + varint(n) + varint(len);
}

} // namespace

TEST_CASE("widths") {
  CHECK(symbol_width(1) == 1);
  CHECK(symbol_width(2) == 1);
  CHECK(symbol_width(3) == 2);
  CHECK(symbol_width(4) == 2);
  CHECK(symbol_width(5) == 3);
  CHECK(symbol_width(500) == 9);
  CHECK(symbol_width(1000) == 10);
  CHECK(symbol_width(1024) == 10);
  CHECK(symbol_width(1025) == 11);
}

TEST_CASE("K2 sparse layout") {
  auto e = encode(complete_graph(2), CodecMode::sparse, false);
  EncodedView view(e.bytes);
  CHECK(view.length() == 10);
  CHECK(view.payload_bits() == 10);
  CHECK(e.bytes.size() == header_size(2, 10) + 2);
  CHECK(e.bytes[0] == 'L');
  CHECK(e.bytes[4] == 0);
  CHECK(decode(e.bytes) == complete_graph(2));
  CHECK(evaluate(view.word(), parse_language("not(copy)")) == complete_graph(2));
}

TEST_CASE("single vertex") {
  auto e = encode(null_graph(1), CodecMode::sparse);
  EncodedView view(e.bytes);
  CHECK(view.length() == 4);
  CHECK(view.width() == 1);
  CHECK(decode(e.bytes) == null_graph(1));
  CHECK(decode(encode(null_graph(1), CodecMode::dense).bytes) == null_graph(1));
}

TEST_CASE("exhaustive round trip to order 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (CodecMode mode : {CodecMode::sparse, CodecMode::dense}) {
        auto named = encode(g, mode);
        REQUIRE(decode(named.bytes) == g);
        auto bare = encode(g, mode, false);
        Graph back = decode(bare.bytes);
        REQUIRE(isomorphic(back, g));
        EncodedView view(bare.bytes);
        if (mode == CodecMode::sparse)
          REQUIRE(view.payload_bits() == (4 * n + 2 * g.edge_count()) * symbol_width(n));
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            if (u != v)
              REQUIRE(view.adjacent(u, v) == back.adjacent(u, v));
      }
}

TEST_CASE("random round trips") {
  std::mt19937 rng(41);
  for (std::size_t n : {5u, 50u, 200u}) {
    for (int round = 0; round < 6; ++round) {
      Graph g = random_graph(n, round % 2 ? 0.05 : 0.6, rng);
      for (CodecMode mode : {CodecMode::sparse, CodecMode::dense}) {
        auto e = encode(g, mode);
        REQUIRE(decode(e.bytes) == g);
        EncodedView view(e.bytes);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int q = 0; q < 50; ++q) {
          std::size_t u = pick(rng), v = pick(rng);
          if (u != v)
            REQUIRE(view.adjacent(u, v) == g.adjacent(u, v));
        }
      }
    }
  }
}

TEST_CASE("sparse size bound at n = 1000") {
  std::mt19937 rng(43);
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::uniform_int_distribution<std::size_t> pick(0, 999);
  while (edges.size() < 5000) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b || !seen.emplace(std::min(a, b), std::max(a, b)).second)
      continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  Graph g(default_names(1000), edges);
  auto e = encode(g, CodecMode::sparse, false);
  EncodedView view(e.bytes);
  CHECK(view.payload_bits() == 14000 * 10);
  CHECK(e.bytes.size() - header_size(1000, 14000) == 17500);
}

TEST_CASE("malformed input") {
  auto e = encode(cycle_graph(5), CodecMode::sparse);
  auto bytes = e.bytes;
  auto offset_of = [](std::vector<std::uint8_t> b) -> std::size_t {
    try {
      decode(b);
    } catch (const FormatError& err) {
      return err.offset();
    }
    return SIZE_MAX;
  };
  auto bad = bytes;
  bad[1] = 'X';
  CHECK(offset_of(bad) == 1);
  bad = bytes;
  bad[4] = 7;
  CHECK(offset_of(bad) == 4);
  bad = bytes;
  bad.resize(8);
  CHECK(offset_of(bad) != SIZE_MAX);
  bad = {'L', 'G', 'R', '1', 0, 0};
  CHECK(offset_of(bad) == 5);
  CHECK(offset_of({}) == 0);

  // Index 7 is out of range for n = 5 (width 3).
  auto raw = encode(cycle_graph(5), CodecMode::sparse, false).bytes;
  raw[8] = 0xff;
  CHECK(offset_of(raw) == 8);

  auto tail = bytes;
  tail.push_back(0);
  CHECK(offset_of(tail) != SIZE_MAX);
  CHECK_THROWS_AS(decode(bad), FormatError);
}

TEST_CASE("names and resolution") {
  std::vector<Vertex> names{Vertex("alpha"), Vertex("beta"), Vertex("gamma")};
  Graph g(names, std::vector<std::pair<Vertex, Vertex>>{{Vertex("alpha"), Vertex("gamma")}});
  auto e = encode(g, CodecMode::dense);
  EncodedView view(e.bytes);
  CHECK(view.named());
  CHECK(view.resolve("gamma") == 2);
  CHECK(view.adjacent(view.resolve("alpha"), view.resolve("gamma")));
  CHECK_FALSE(view.adjacent(0, 1));
  CHECK_THROWS_AS(view.resolve("2"), Error);
  CHECK_THROWS_AS(view.adjacent(1, 1), Error);
  auto bare = encode(g, CodecMode::dense, false);
  EncodedView anon(bare.bytes);
  CHECK(anon.resolve("2") == 2);
  CHECK(anon.resolve("c") == 2);
  CHECK(parse_mode("dense") == CodecMode::dense);
  CHECK_THROWS_AS(parse_mode("tight"), Error);
}

TEST_CASE("encodings are deterministic") {
  Graph g = cycle_graph(6);
  CHECK(encode(g, CodecMode::sparse).bytes == encode(g, CodecMode::sparse).bytes);
}
