#pragma once

#include "langrep/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace langrep {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph. Vertices are kept in ascending token order and
// addressed by their index in that order.
class Graph {
public:
  Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return names_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return names_; }
  const Vertex& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const Vertex& v) const;
  std::size_t require_index(const Vertex& v) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * names_.size() + j] != 0; }
  bool adjacent(const Vertex& u, const Vertex& v) const;
  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  // Bit j set iff i ~ j; orders up to 64.
  std::uint64_t row(std::size_t i) const;
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  // Same labels and same edges.
  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<Vertex> names_;
  std::vector<std::uint8_t> adj_;
};

std::vector<Vertex> default_names(std::size_t n);

Graph null_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph induced(const Graph& g, const std::set<Vertex>& keep);
Graph induced(const Graph& g, const std::vector<std::size_t>& keep);
// Adds v' (v followed by primes until unused) twinned with v.
Graph add_twin(const Graph& g, const Vertex& v, bool true_twin);
Graph relabel(const Graph& g, const std::vector<Vertex>& names);

// mapping[i] is the vertex of b matched to vertex i of a.
std::optional<std::vector<std::size_t>> isomorphism(const Graph& a, const Graph& b);
bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class, vertices named a, b, c, ...
std::vector<Graph> enumerate_graphs(std::size_t n);

// JSON {"vertices":[..],"edges":[[u,v],..]} or an edge list: "n m", then m
// lines "u v", with an optional "v: x y z" line declaring vertices.
Graph parse_graph(std::string_view text);
std::string to_json(const Graph& g);
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

} // namespace langrep
