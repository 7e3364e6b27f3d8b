#pragma once

#include "langrep/graph.hpp"
#include "langrep/language.hpp"
#include "langrep/words.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace langrep {

// G(L, w): vertices are the letters of w, {u, v} is an edge iff h_{u,v}(w) ∈ L,
// with u the smaller token.
Graph evaluate(const VertexWord& w, const Language& l);

struct CheckResult {
  bool match = false;
  Graph produced;
  // First pair on which the produced and expected graphs disagree, when
  // their vertex sets coincide.
  std::optional<std::pair<Vertex, Vertex>> differing;
};

// Labelled equality counts as a match; otherwise the graphs must be isomorphic.
CheckResult check(const VertexWord& w, const Language& l, const Graph& expected);

// Allowed multiplicities, one set per vertex of the target graph (by index).
using FrequencyBounds = std::vector<std::set<std::size_t>>;
FrequencyBounds uniform_bounds(std::size_t n, std::set<std::size_t> allowed);

struct SearchLimits {
  std::size_t max_len = 0; // 0: no limit beyond the bounds
  std::uint64_t budget = 100'000'000;
};

struct SearchResult {
  std::optional<VertexWord> word;
  std::uint64_t nodes = 0;
};

// Exhaustive depth-first search over words with the given multiplicities whose
// L-graph equals g on g's own labels. Throws `capacity` past the node budget.
SearchResult search(const Graph& g, const Language& l, const FrequencyBounds& bounds, SearchLimits limits = {});

// Finite L: freq(L) plus the least multiplicity outside it. Otherwise {1, 2, 3}.
std::set<std::size_t> default_frequencies(const Language& l);

struct ClassMember {
  Graph graph;
  VertexWord word;
};

// Members of order n, one per isomorphism class in enumerate_graphs order,
// found by bounded search. n <= 6.
std::vector<ClassMember> enumerate_class(std::size_t n, const Language& l, const std::set<std::size_t>& freq,
                                         SearchLimits limits = {});

struct Part {
  std::size_t k = 0;
  std::size_t l = 0;
  Graph subgraph;
};

// One part per (k, l) with k <= l such that some pair of letters with those
// multiplicities projects into L.
std::vector<Part> decompose(const VertexWord& w, const Language& l);

} // namespace langrep
