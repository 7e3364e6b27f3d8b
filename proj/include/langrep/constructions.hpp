#pragma once

#include "langrep/classes.hpp"
#include "langrep/graph.hpp"
#include "langrep/language.hpp"
#include "langrep/words.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langrep {

// Every builder below checks its own output against its canonical language
// and throws `verification_failed` rather than return a wrong word. Words use
// the graph's own vertex names, so the check is labelled equality.

// Universal languages: any graph.
VertexWord build_palindrome(const Graph& g);
VertexWord build_copy(const Graph& g);
// Copy word of the complement; represents g under not(copy) with 4n + 2m letters.
VertexWord build_copy_complement(const Graph& g);
VertexWord build_lyndon(const Graph& g);

// Bipartite graphs.
VertexWord build_bipartite_lyndon_odd(const Graph& g);
VertexWord build_bipartite_palindrome(const Graph& g);

// `order` must be a strict partial order whose comparable pairs are the edges.
VertexWord build_comparability(const Graph& g, const StrictOrder& order);
VertexWord build_comparability(const Graph& g);

VertexWord build_interval(const Graph& g);
VertexWord build_convex(const Graph& g);
VertexWord build_interval_bigraph(const Graph& g);
VertexWord build_permutation(const Graph& g, const PermutationModel& model);
VertexWord build_permutation(const Graph& g);
// `chords` lists every vertex index twice in circular order.
VertexWord build_circle(const Graph& g, std::span<const std::size_t> chords);
VertexWord build_circle(const Graph& g);
VertexWord build_threshold(const Graph& g);
VertexWord build_bipartite_chain(const Graph& g);
// Halfline intersection graph plus isolated vertices.
VertexWord build_halfline(const Graph& g);
// Co-circle graph plus isolated vertices.
VertexWord build_co_circle(const Graph& g);
VertexWord build_cluster(const Graph& g);
VertexWord build_split(const Graph& g);
VertexWord build_cobipartite(const Graph& g);

enum class CographMode {
  alternating, // the language holds 0101 and 1010
  nesting,     // the language holds 0110 and 1001
};
VertexWord build_cograph(const Graph& g, CographMode mode = CographMode::alternating);
std::string cograph_language(CographMode mode);

// Trims to first and last occurrences after doubling singletons; the result is
// 2-uniform and represents under <0011> the same graph w represents under <0*1*>.
VertexWord normalize_0ast1ast(const VertexWord& w);
// Same trimming; <0{0,1}*1> on the input agrees with <0011,0101> on the output.
VertexWord normalize_0any1(const VertexWord& w);

// Appends each extra vertex m times, m the least positive multiplicity outside
// freq(l), so the extra vertices come out isolated. Finite languages only.
VertexWord append_isolated(const VertexWord& w, std::span<const Vertex> extra, const Language& l);

// Closed intervals with pairwise distinct endpoints; points have left == right.
struct Span {
  Vertex vertex;
  long long left = 0;
  long long right = 0;
};
VertexWord word_from_spans(std::span<const Span> spans);
// First and last occurrence of every letter, in alphabet order.
std::vector<Span> spans_from_word(const VertexWord& w);

struct Recipe {
  std::string name;
  std::string language; // canonical language, as parse_language text
  std::optional<ClassTag> tag; // precondition; empty for universal recipes
  std::function<VertexWord(const Graph&)> build;
};

std::span<const Recipe> recipes();
const Recipe& find_recipe(std::string_view name);

} // namespace langrep
