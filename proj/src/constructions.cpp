#include "langrep/constructions.hpp"

#include "langrep/errors.hpp"
#include "langrep/represent.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace langrep {

namespace {

using Letters = std::vector<int>;

void put(Letters& w, std::size_t v, std::size_t times = 1) {
  w.insert(w.end(), times, static_cast<int>(v));
}

void append(Letters& w, const Letters& tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

VertexWord verified(const Graph& g, const VertexWord& w, std::string_view language, std::string_view what) {
  Graph got = evaluate(w, parse_language(language));
  if (!(got == g))
    throw Error(ErrorKind::verification_failed,
                std::string(what) + " produced " + w.str() + ", which does not represent the input under " +
                    std::string(language));
  return w;
}

VertexWord verified(const Graph& g, const Letters& letters, std::string_view language, std::string_view what) {
  return verified(g, word_from_indices(g.vertices(), letters), language, what);
}

[[noreturn]] void not_in_class(std::string_view cls) {
  throw Error(ErrorKind::precondition, "the graph is not " + std::string(cls));
}

void require_nonempty(const Graph& g) {
  if (g.order() == 0)
    throw Error(ErrorKind::invalid_arguments, "graphs need at least one vertex");
}

// Sides of a 2-colouring with the first side nonempty.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bipartition(const Graph& g) {
  auto color = two_coloring(g);
  if (!color)
    not_in_class("bipartite");
  std::vector<std::size_t> a, b;
  for (std::size_t v = 0; v < g.order(); ++v)
    ((*color)[v] == 0 ? a : b).push_back(v);
  if (a.empty())
    std::swap(a, b);
  return {a, b};
}

Letters copy_letters(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Letters> u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (j == i || !g.adjacent(i, j))
        put(u[i], j);
  Letters w;
  for (std::size_t i = 0; i < n; ++i) {
    append(w, u[i]);
    put(w, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    put(w, i);
    append(w, u[i]);
  }
  return w;
}

Letters lyndon_odd_letters(const Graph& g, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  Letters w;
  for (std::size_t v : a)
    put(w, v, 3);
  for (std::size_t v : b)
    put(w, v, 2);
  for (std::size_t v : a) {
    Letters nb;
    for (std::size_t x : b)
      if (g.adjacent(v, x))
        put(nb, x);
    put(w, v, 2);
    append(w, nb);
    append(w, nb);
    put(w, v, 2);
  }
  for (std::size_t v : b)
    put(w, v, 2);
  return w;
}

Letters palindrome_wrep_letters(const Graph& g, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  Letters w;
  auto all_but = [&](std::size_t skip) {
    for (std::size_t v : a)
      if (v != skip)
        put(w, v);
  };
  all_but(g.order());
  for (std::size_t v : a) {
    for (std::size_t x : b)
      if (g.adjacent(v, x))
        put(w, x);
    put(w, v);
    for (std::size_t x : b)
      if (!g.adjacent(v, x))
        put(w, x);
    all_but(v);
  }
  return w;
}

// Linear extension, smallest index first among the minimal elements.
std::vector<std::size_t> linear_extension(const StrictOrder& order) {
  const std::size_t n = order.n;
  std::vector<char> done(n, 0);
  std::vector<std::size_t> out;
  while (out.size() < n) {
    bool progressed = false;
    for (std::size_t v = 0; v < n && !progressed; ++v) {
      if (done[v])
        continue;
      bool minimal = true;
      for (std::size_t u = 0; u < n && minimal; ++u)
        if (!done[u] && order.less(u, v))
          minimal = false;
      if (minimal) {
        done[v] = 1;
        out.push_back(v);
        progressed = true;
      }
    }
    if (!progressed)
      throw Error(ErrorKind::invalid_arguments, "the order has a cycle");
  }
  return out;
}

void require_consistent(const Graph& g, const StrictOrder& order) {
  const std::size_t n = g.order();
  if (order.n != n || order.before.size() != n * n)
    throw Error(ErrorKind::invalid_arguments, "the order does not match the graph's order");
  for (std::size_t i = 0; i < n; ++i) {
    if (order.less(i, i))
      throw Error(ErrorKind::invalid_arguments, "the order is not irreflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.adjacent(i, j) != (order.less(i, j) || order.less(j, i)))
        throw Error(ErrorKind::invalid_arguments, "comparable pairs differ from the edges at " + g.name(i).id() +
                                                      ", " + g.name(j).id());
      for (std::size_t k = 0; k < n; ++k)
        if (order.less(i, j) && order.less(j, k) && !order.less(i, k))
          throw Error(ErrorKind::invalid_arguments, "the order is not transitive");
    }
  }
}

std::vector<std::size_t> isolated_vertices(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      out.push_back(v);
  return out;
}

std::vector<Vertex> names_of(const Graph& g, const std::vector<std::size_t>& idx) {
  std::vector<Vertex> out;
  for (std::size_t i : idx)
    out.push_back(g.name(i));
  return out;
}

struct Halves {
  Letters first, second;
};

Halves cograph_halves(const Cotree& t, CographMode mode) {
  if (t.kind == Cotree::Kind::leaf)
    return {{static_cast<int>(t.vertex)}, {static_cast<int>(t.vertex)}};
  // interleaving the halves gives a join under alternating languages and a
  // union under nesting ones; nesting one inside the other does the reverse
  bool interleave = (t.kind == Cotree::Kind::joined) == (mode == CographMode::alternating);
  Halves acc = cograph_halves(t.children.front(), mode);
  for (std::size_t c = 1; c < t.children.size(); ++c) {
    Halves next = cograph_halves(t.children[c], mode);
    Halves merged;
    merged.first = acc.first;
    append(merged.first, next.first);
    if (interleave) {
      merged.second = acc.second;
      append(merged.second, next.second);
    } else {
      merged.second = next.second;
      append(merged.second, acc.second);
    }
    acc = std::move(merged);
  }
  return acc;
}

VertexWord first_and_last(const VertexWord& w) {
  auto freq = frequency_profile(w);
  std::vector<Vertex> lifted;
  for (const Vertex& v : w.symbols()) {
    lifted.push_back(v);
    if (freq.at(v) == 1)
      lifted.push_back(v);
  }
  std::map<Vertex, std::size_t> first, last;
  for (std::size_t p = 0; p < lifted.size(); ++p) {
    first.try_emplace(lifted[p], p);
    last[lifted[p]] = p;
  }
  std::vector<Vertex> out;
  for (std::size_t p = 0; p < lifted.size(); ++p)
    if (first.at(lifted[p]) == p || last.at(lifted[p]) == p)
      out.push_back(lifted[p]);
  return VertexWord(out);
}

std::vector<std::size_t> split_clique(const Graph& g) {
  std::vector<std::size_t> byDegree(g.order());
  std::iota(byDegree.begin(), byDegree.end(), std::size_t{0});
  std::stable_sort(byDegree.begin(), byDegree.end(),
                   [&](std::size_t x, std::size_t y) { return g.degree(x) > g.degree(y); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < byDegree.size(); ++i)
    if (g.degree(byDegree[i]) >= i)
      m = i + 1;
  std::vector<std::size_t> clique(byDegree.begin(), byDegree.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<char> in(g.order(), 0);
  for (std::size_t v : clique)
    in[v] = 1;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = x + 1; y < g.order(); ++y)
      if (in[x] == in[y] && g.adjacent(x, y) != static_cast<bool>(in[x]))
        not_in_class("split");
  std::sort(clique.begin(), clique.end());
  return clique;
}

} // namespace

VertexWord build_palindrome(const Graph& g) {
  require_nonempty(g);
  Letters w{0, 0};
  for (std::size_t i = 1; i < g.order(); ++i) {
    Letters u;
    for (std::size_t j = 0; j < i; ++j)
      if (!g.adjacent(i, j))
        put(u, j);
    Letters next;
    put(next, i);
    append(next, u);
    append(next, w);
    put(next, i);
    next.insert(next.end(), u.rbegin(), u.rend());
    w = std::move(next);
  }
  return verified(g, w, "palindrome", "the palindrome builder");
}

VertexWord build_copy(const Graph& g) {
  require_nonempty(g);
  return verified(g, copy_letters(g), "copy", "the copy builder");
}

VertexWord build_copy_complement(const Graph& g) {
  require_nonempty(g);
  Letters w = copy_letters(complement(g));
  if (w.size() != 4 * g.order() + 2 * g.edge_count())
    throw Error(ErrorKind::verification_failed, "complement copy word has length " + std::to_string(w.size()));
  return verified(g, w, "not(copy)", "the complement copy builder");
}

VertexWord build_lyndon(const Graph& g) {
  require_nonempty(g);
  const std::size_t n = g.order();
  Letters w;
  for (std::size_t i = 0; i < n; ++i)
    put(w, i, 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (int rep = 0; rep < 2; ++rep)
      for (std::size_t j = i; j < n; ++j)
        put(w, j);
    put(w, i, 2);
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j))
        put(w, j);
    put(w, i, 2);
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j))
        put(w, j);
  }
  return verified(g, w, "lyndon", "the Lyndon builder");
}

VertexWord build_bipartite_lyndon_odd(const Graph& g) {
  require_nonempty(g);
  auto [a, b] = bipartition(g);
  return verified(g, lyndon_odd_letters(g, a, b), "lyndon-odd", "the odd Lyndon builder");
}

VertexWord build_bipartite_palindrome(const Graph& g) {
  require_nonempty(g);
  auto [a, b] = bipartition(g);
  return verified(g, palindrome_wrep_letters(g, a, b), "and(palindrome,wrep)", "the alternating palindrome builder");
}

VertexWord build_comparability(const Graph& g, const StrictOrder& order) {
  require_nonempty(g);
  require_consistent(g, order);
  const std::size_t n = g.order();
  auto lin = linear_extension(order);
  Letters w;
  for (std::size_t v : lin)
    put(w, v);
  for (std::size_t v : lin) {
    for (std::size_t u : lin)
      if (u != v && !order.less(v, u))
        put(w, u);
    put(w, v);
    for (std::size_t u : lin)
      if (order.less(v, u))
        put(w, u);
  }
  if (w.size() != n * (n + 1))
    throw Error(ErrorKind::verification_failed, "comparability word has length " + std::to_string(w.size()));
  return verified(g, w, "dyck", "the comparability builder");
}

VertexWord build_comparability(const Graph& g) {
  auto order = transitive_orientation(g);
  if (!order)
    not_in_class("a comparability graph");
  return build_comparability(g, *order);
}

VertexWord build_interval(const Graph& g) {
  require_nonempty(g);
  auto seq = interval_model(g);
  if (!seq)
    not_in_class("an interval graph");
  Letters w(seq->begin(), seq->end());
  return verified(g, w, "<0101,0110>", "the interval builder");
}

VertexWord build_convex(const Graph& g) {
  require_nonempty(g);
  auto model = convex_model(g);
  if (!model)
    not_in_class("a convex graph");
  const auto& pts = model->points;
  Letters w;
  for (std::size_t b : model->others)
    if (std::none_of(pts.begin(), pts.end(), [&](std::size_t p) { return g.adjacent(p, b); }))
      put(w, b, 2);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (std::size_t b : model->others) {
      auto first = std::find_if(pts.begin(), pts.end(), [&](std::size_t p) { return g.adjacent(p, b); });
      if (first != pts.end() && *first == pts[k])
        put(w, b);
    }
    put(w, pts[k]);
    for (std::size_t b : model->others) {
      auto last = std::find_if(pts.rbegin(), pts.rend(), [&](std::size_t p) { return g.adjacent(p, b); });
      if (last != pts.rend() && *last == pts[k])
        put(w, b);
    }
  }
  return verified(g, w, "<010>", "the convex builder");
}

VertexWord build_interval_bigraph(const Graph& g) {
  require_nonempty(g);
  auto model = interval_bigraph_model(g);
  if (!model)
    not_in_class("an interval bigraph");
  Letters w(model->endpoints.begin(), model->endpoints.end());
  for (std::size_t v = 0; v < g.order(); ++v)
    if (model->side[v] == 0)
      put(w, v);
  return verified(g, w, "<01110,01101,01011,01100,01010,01001>", "the interval bigraph builder");
}

VertexWord build_permutation(const Graph& g, const PermutationModel& model) {
  require_nonempty(g);
  if (model.first.size() != g.order() || model.second.size() != g.order())
    throw Error(ErrorKind::invalid_arguments, "both orders must list every vertex");
  Letters w(model.first.begin(), model.first.end());
  w.insert(w.end(), model.second.begin(), model.second.end());
  return verified(g, w, "<0110>", "the permutation builder");
}

VertexWord build_permutation(const Graph& g) {
  auto model = permutation_model(g);
  if (!model)
    not_in_class("a permutation graph");
  return build_permutation(g, *model);
}

VertexWord build_circle(const Graph& g, std::span<const std::size_t> chords) {
  require_nonempty(g);
  std::vector<std::size_t> count(g.order(), 0);
  for (std::size_t v : chords) {
    if (v >= g.order())
      throw Error(ErrorKind::invalid_arguments, "chord endpoint outside the graph");
    ++count[v];
  }
  if (std::any_of(count.begin(), count.end(), [](std::size_t c) { return c != 2; }))
    throw Error(ErrorKind::invalid_arguments, "every vertex needs exactly two chord endpoints");
  Letters w(chords.begin(), chords.end());
  return verified(g, w, "<0101>", "the circle builder");
}

VertexWord build_circle(const Graph& g) {
  auto chords = chord_model(g);
  if (!chords)
    not_in_class("a circle graph");
  return build_circle(g, *chords);
}

VertexWord build_threshold(const Graph& g) {
  require_nonempty(g);
  auto seq = creation_sequence(g);
  if (!seq)
    not_in_class("a threshold graph");
  Letters w;
  for (std::size_t k = 0; k < seq->size(); ++k)
    put(w, (*seq)[k].vertex, k > 0 && (*seq)[k].dominating ? 1 : 2);
  return verified(g, w, "<01,001>", "the threshold builder");
}

VertexWord build_bipartite_chain(const Graph& g) {
  require_nonempty(g);
  auto model = chain_model(g);
  if (!model)
    not_in_class("a bipartite chain graph");
  // largest neighbourhood first, so every neighbourhood of side a is a prefix
  std::vector<std::size_t> b(model->side_b.rbegin(), model->side_b.rend());
  Letters w;
  for (std::size_t v : b)
    put(w, v);
  std::size_t reached = 0;
  for (std::size_t a : model->side_a) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (g.adjacent(a, b[k]))
        r = k + 1;
    for (; reached < r; ++reached)
      put(w, b[reached]);
    put(w, a);
  }
  return verified(g, w, "<001>", "the bipartite chain builder");
}

VertexWord build_halfline(const Graph& g) {
  require_nonempty(g);
  auto model = halfline_model(g);
  if (!model)
    not_in_class("a halfline intersection graph plus isolated vertices");
  const std::string lang = "halfline";
  if (model->order.empty()) {
    Letters w;
    for (std::size_t v : model->isolated)
      put(w, v, 3);
    return verified(g, w, lang, "the halfline builder");
  }
  Letters w(model->order.begin(), model->order.end());
  for (std::size_t v : model->order)
    if (model->right_bounded[v])
      put(w, v);
  VertexWord core = word_from_indices(g.vertices(), w);
  return verified(g, append_isolated(core, names_of(g, model->isolated), parse_language(lang)), lang,
                  "the halfline builder");
}

VertexWord build_co_circle(const Graph& g) {
  require_nonempty(g);
  const std::string lang = "<0011,0110>";
  auto iso = isolated_vertices(g);
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0)
      core.push_back(v);
  if (core.empty()) {
    Letters w(iso.begin(), iso.end());
    return verified(g, w, lang, "the co-circle builder");
  }
  Graph sub = induced(g, core);
  auto chords = chord_model(complement(sub));
  if (!chords)
    not_in_class("a co-circle graph plus isolated vertices");
  Letters w;
  for (std::size_t c : *chords)
    put(w, core[c]);
  VertexWord body = word_from_indices(g.vertices(), w);
  return verified(g, append_isolated(body, names_of(g, iso), parse_language(lang)), lang, "the co-circle builder");
}

VertexWord build_cluster(const Graph& g) {
  require_nonempty(g);
  if (!oracle(ClassTag::cluster, g))
    not_in_class("a cluster graph");
  std::vector<char> done(g.order(), 0);
  Letters w;
  std::size_t part = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (done[v])
      continue;
    ++part;
    for (std::size_t u = v; u < g.order(); ++u)
      if (u == v || g.adjacent(u, v)) {
        done[u] = 1;
        put(w, u, part);
      }
  }
  return verified(g, w, "balanced", "the cluster builder");
}

VertexWord build_split(const Graph& g) {
  require_nonempty(g);
  auto clique = split_clique(g);
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!std::binary_search(clique.begin(), clique.end(), v))
      rest.push_back(v);
  // odd multiplicities on the clique side, even on the independent side
  return verified(g, lyndon_odd_letters(g, clique, rest), "or(lyndon-odd,odd-counts)", "the split builder");
}

VertexWord build_cobipartite(const Graph& g) {
  require_nonempty(g);
  Graph co = complement(g);
  auto color = two_coloring(co);
  if (!color)
    not_in_class("cobipartite");
  std::vector<std::size_t> a, b;
  for (std::size_t v = 0; v < g.order(); ++v)
    ((*color)[v] == 0 ? a : b).push_back(v);
  if (a.empty())
    std::swap(a, b);
  return verified(g, palindrome_wrep_letters(co, a, b), "or(not(palindrome),not(wrep))", "the cobipartite builder");
}

std::string cograph_language(CographMode mode) {
  return mode == CographMode::alternating ? "wrep" : "<0110>";
}

VertexWord build_cograph(const Graph& g, CographMode mode) {
  require_nonempty(g);
  auto tree = cotree(g);
  if (!tree)
    not_in_class("a cograph");
  Halves h = cograph_halves(*tree, mode);
  append(h.first, h.second);
  return verified(g, h.first, cograph_language(mode), "the cograph builder");
}

VertexWord normalize_0ast1ast(const VertexWord& w) {
  return first_and_last(w);
}

VertexWord normalize_0any1(const VertexWord& w) {
  return first_and_last(w);
}

VertexWord append_isolated(const VertexWord& w, std::span<const Vertex> extra, const Language& l) {
  if (extra.empty())
    return w;
  auto split = freq_and_trash(l);
  std::size_t m = 1;
  while (split.frequencies.contains(m))
    ++m;
  std::vector<Vertex> out(w.symbols().begin(), w.symbols().end());
  auto present = w.alphabet();
  for (const Vertex& v : extra) {
    if (std::binary_search(present.begin(), present.end(), v))
      throw Error(ErrorKind::invalid_arguments, "vertex " + v.id() + " already occurs in the word");
    out.insert(out.end(), m, v);
  }
  return VertexWord(out);
}

VertexWord word_from_spans(std::span<const Span> spans) {
  if (spans.empty())
    throw Error(ErrorKind::invalid_arguments, "no intervals given");
  std::vector<std::pair<long long, Vertex>> ends;
  for (const Span& s : spans) {
    if (s.left > s.right)
      throw Error(ErrorKind::invalid_arguments, "interval of " + s.vertex.id() + " is reversed");
    ends.emplace_back(s.left, s.vertex);
    if (s.right != s.left)
      ends.emplace_back(s.right, s.vertex);
  }
  std::sort(ends.begin(), ends.end());
  for (std::size_t i = 0; i + 1 < ends.size(); ++i)
    if (ends[i].first == ends[i + 1].first)
      throw Error(ErrorKind::invalid_arguments, "two intervals share the endpoint " + std::to_string(ends[i].first));
  std::vector<Vertex> out;
  for (auto& e : ends)
    out.push_back(e.second);
  return VertexWord(out);
}

std::vector<Span> spans_from_word(const VertexWord& w) {
  std::map<Vertex, Span> by;
  for (std::size_t p = 0; p < w.size(); ++p) {
    auto pos = static_cast<long long>(p);
    auto [it, fresh] = by.try_emplace(w[p], Span{w[p], pos, pos});
    if (!fresh)
      it->second.right = pos;
  }
  std::vector<Span> out;
  for (auto& [v, s] : by)
    out.push_back(s);
  return out;
}

std::span<const Recipe> recipes() {
  static const std::vector<Recipe> table{
      {"palindrome", "palindrome", std::nullopt, build_palindrome},
      {"copy", "copy", std::nullopt, build_copy},
      {"copy-complement", "not(copy)", std::nullopt, build_copy_complement},
      {"lyndon", "lyndon", std::nullopt, build_lyndon},
      {"bipartite", "lyndon-odd", ClassTag::bipartite, build_bipartite_lyndon_odd},
      {"bipartite-palindrome", "and(palindrome,wrep)", ClassTag::bipartite, build_bipartite_palindrome},
      {"comparability", "dyck", ClassTag::comparability,
       [](const Graph& g) { return build_comparability(g); }},
      {"interval", "<0101,0110>", ClassTag::interval, build_interval},
      {"convex", "<010>", ClassTag::convex, build_convex},
      {"interval-bigraph", "<01110,01101,01011,01100,01010,01001>", ClassTag::interval_bigraph,
       build_interval_bigraph},
      {"permutation", "<0110>", ClassTag::permutation, [](const Graph& g) { return build_permutation(g); }},
      {"circle", "<0101>", ClassTag::circle, [](const Graph& g) { return build_circle(g); }},
      {"threshold", "<01,001>", ClassTag::threshold, build_threshold},
      {"bipartite-chain", "<001>", ClassTag::bipartite_chain, build_bipartite_chain},
      {"halfline", "halfline", ClassTag::halfline, build_halfline},
      {"co-circle", "<0011,0110>", ClassTag::co_circle, build_co_circle},
      {"cluster", "balanced", ClassTag::cluster, build_cluster},
      {"split", "or(lyndon-odd,odd-counts)", ClassTag::split, build_split},
      {"cobipartite", "or(not(palindrome),not(wrep))", ClassTag::cobipartite, build_cobipartite},
      {"cograph", "wrep", ClassTag::cograph, [](const Graph& g) { return build_cograph(g); }},
      {"cograph-nesting", "<0110>", ClassTag::cograph,
       [](const Graph& g) { return build_cograph(g, CographMode::nesting); }},
  };
  return table;
}

const Recipe& find_recipe(std::string_view name) {
  for (const Recipe& r : recipes())
    if (r.name == name)
      return r;
  if (auto tag = parse_tag(name))
    for (const Recipe& r : recipes())
      if (r.tag == tag)
        return r;
  throw Error(ErrorKind::invalid_arguments, "no builder named " + std::string(name));
}

} // namespace langrep
