#pragma once

#include "langrep/graph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace langrep {

enum class ClassTag {
  null,
  complete,
  cluster,
  cograph,
  bipartite,
  cobipartite,
  split,
  threshold,
  interval,
  co_interval,
  circle,
  co_circle,
  permutation,
  comparability,
  cocomparability,
  bipartite_chain,
  co_bipartite_chain,
  convex,
  bico_convex,
  interval_bigraph,
  halfline,
  complete_multipartite,
  chordal,
};

std::span<const ClassTag> all_tags();
std::string_view tag_name(ClassTag tag);
std::optional<ClassTag> parse_tag(std::string_view name);

// Membership decided from the graph-theoretic definition alone.
// Throws `capacity` above the per-class order limit (at least 8 everywhere).
bool oracle(ClassTag tag, const Graph& g);
std::size_t oracle_cap(ClassTag tag);

// ---- witnesses; vertex numbers are indices into g.vertices()

struct Cotree {
  enum class Kind { leaf, disjoint, joined };
  Kind kind = Kind::leaf;
  std::size_t vertex = 0;
  std::vector<Cotree> children;
};

std::optional<Cotree> cotree(const Graph& g);
std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g);
std::optional<std::vector<int>> two_coloring(const Graph& g);
// Every proper 2-coloring, one per choice of side for each component.
std::vector<std::vector<int>> all_two_colorings(const Graph& g);

struct CreationStep {
  std::size_t vertex;
  bool dominating; // universal when added; isolated otherwise
};
// In order of creation.
std::optional<std::vector<CreationStep>> creation_sequence(const Graph& g);

// Endpoint sequences list every vertex twice, left endpoint first.
std::optional<std::vector<std::size_t>> interval_model(const Graph& g);
std::optional<std::vector<std::size_t>> chord_model(const Graph& g);

struct PermutationModel {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second; // edges are exactly the pairs the two orders disagree on
};
std::optional<PermutationModel> permutation_model(const Graph& g);

// before[i * n + j] iff i precedes j; comparable pairs are exactly the edges.
struct StrictOrder {
  std::size_t n = 0;
  std::vector<std::uint8_t> before;
  bool less(std::size_t i, std::size_t j) const { return before[i * n + j] != 0; }
};
std::optional<StrictOrder> transitive_orientation(const Graph& g);

struct ChainModel {
  std::vector<std::size_t> side_a; // neighbourhoods grow along this order
  std::vector<std::size_t> side_b;
};
std::optional<ChainModel> chain_model(const Graph& g);

struct ConvexModel {
  std::vector<std::size_t> points;  // ordered side
  std::vector<std::size_t> others;  // each neighbourhood is a run of `points`
};
std::optional<ConvexModel> convex_model(const Graph& g);

struct BigraphModel {
  std::vector<int> side;
  std::vector<std::size_t> endpoints;
};
std::optional<BigraphModel> interval_bigraph_model(const Graph& g);

// Bipartite complement with respect to the given sides.
Graph bipartite_complement(const Graph& g, const std::vector<int>& side);

struct HalflineModel {
  std::vector<std::size_t> order;       // by endpoint, left-bounded first on ties
  std::vector<char> right_bounded;      // per vertex index
  std::vector<std::size_t> isolated;    // set aside, not part of the model
};
std::optional<HalflineModel> halfline_model(const Graph& g);

int treewidth_exact(const Graph& g);
int degeneracy(const Graph& g);

} // namespace langrep
