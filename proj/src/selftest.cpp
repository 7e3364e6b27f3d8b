#include "langrep/selftest.hpp"

#include "langrep/classes.hpp"
#include "langrep/codec.hpp"
#include "langrep/constructions.hpp"
#include "langrep/decide.hpp"
#include "langrep/errors.hpp"
#include "langrep/represent.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

namespace langrep {

namespace {

using Rng = std::mt19937_64;

class Tally {
public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  bool expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failure.empty())
      r_.failure = what;
    return ok;
  }
  bool clean() const { return r_.failure.empty(); }

private:
  SuiteResult& r_;
};

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

VertexWord random_word(Rng& rng, std::size_t letters, std::size_t length) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < length; ++i)
    out.emplace_back(std::string(1, static_cast<char>('a' + below(rng, letters))));
  return VertexWord(out);
}

VertexWord random_word(Rng& rng) { return random_word(rng, 2 + below(rng, 5), 3 + below(rng, 12)); }

std::vector<Language> sample_languages() {
  std::vector<Language> out;
  for (const char* s : {"<0101,0110>", "<0011>", "<01,001>", "<010>", "palindrome", "copy", "lyndon", "dyck", "wrep",
                        "balanced", "0n1n", "hull(re:0(0|1)*1)", "halfline", "odd-counts", "k11(2)", "no-kk(2)"})
    out.push_back(parse_language(s));
  return out;
}

Graph core_of(const Graph& g) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0)
      keep.push_back(v);
  return induced(g, keep);
}

bool core_complete(const Graph& g) {
  if (g.edge_count() == 0)
    return true;
  Graph c = core_of(g);
  return c.edge_count() == c.order() * (c.order() - 1) / 2;
}

bool core_complete_bipartite(const Graph& g) {
  if (g.edge_count() == 0)
    return true;
  Graph c = core_of(g);
  auto coloring = two_coloring(c);
  if (!coloring)
    return false;
  for (std::size_t u = 0; u < c.order(); ++u)
    for (std::size_t v = u + 1; v < c.order(); ++v)
      if (((*coloring)[u] != (*coloring)[v]) != c.adjacent(u, v))
        return false;
  return true;
}

std::string pair_text(const Language& a, const Language& b) { return a.str() + " / " + b.str(); }

// ---- invariants over one language, each on one random word

bool hereditary(const Language& l, Rng& rng) {
  VertexWord w = random_word(rng);
  Graph g = evaluate(w, l);
  std::set<Vertex> keep;
  for (const Vertex& v : w.alphabet())
    if (rng() % 2)
      keep.insert(v);
  return keep.empty() || evaluate(project_set(w, keep), l) == induced(g, keep);
}

bool complement_dual(const Language& l, Rng& rng) {
  if (l.involves_grammar())
    return true;
  VertexWord w = random_word(rng);
  return evaluate(w, complement(l)) == complement(evaluate(w, l));
}

bool boolean_compatible(const Language& l, const Language& other, Rng& rng) {
  if (l.involves_grammar() || other.involves_grammar())
    return true;
  VertexWord w = random_word(rng);
  Graph g = evaluate(w, l), h = evaluate(w, other);
  Graph both = evaluate(w, intersect(l, other)), either = evaluate(w, unite(l, other));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (both.adjacent(a, b) != (g.adjacent(a, b) && h.adjacent(a, b)) ||
          either.adjacent(a, b) != (g.adjacent(a, b) || h.adjacent(a, b)))
        return false;
  return true;
}

bool reversal(const Language& l, Rng& rng) {
  VertexWord w = random_word(rng);
  return evaluate(reverse(w), reverse(l)) == evaluate(w, l);
}

bool twin_closed(const Language& l, Rng& rng) {
  VertexWord w = random_word(rng);
  Vertex v = w[below(rng, w.size())];
  Vertex fresh("z");
  std::vector<Vertex> doubled;
  for (const Vertex& x : w.symbols()) {
    doubled.push_back(x);
    if (x == v)
      doubled.push_back(fresh);
  }
  Graph g = evaluate(w, l), g2 = evaluate(VertexWord(doubled), l);
  auto alpha = w.alphabet();
  if (!(induced(g2, std::set<Vertex>(alpha.begin(), alpha.end())) == g))
    return false;
  for (const Vertex& x : alpha)
    if (x != v && g2.adjacent(x, v) != g2.adjacent(x, fresh))
      return false;
  return true;
}

bool repetition_stable(const Language& l, Rng& rng) {
  VertexWord w = random_word(rng);
  Graph g = evaluate(w, l);
  VertexWord ww = concat(w, w);
  return evaluate(ww, l) == g && evaluate(concat(ww, w), l) == g;
}

bool nearly_uniform_bipartite(Rng& rng) {
  std::size_t k = 1 + below(rng, 3), m = 1 + below(rng, 3);
  if (k == m)
    ++m;
  WordSet pick;
  for (const auto& s : shuffle_finite({std::string(k, '0')}, {std::string(m, '1')}))
    if (rng() % 2)
      pick.insert(s);
  return oracle(ClassTag::bipartite, evaluate(random_word(rng), hull(Language::finite(pick))));
}

// ---- suites

void figure_vectors(Tally& t, const SelftestOptions&) {
  Graph c4 = cycle_graph(4);
  struct Row {
    const char* word;
    const char* lang;
  };
  for (auto [word, lang] : std::array<Row, 5>{{{"423121123142", "palindrome"},
                                               {"121324123142", "copy"},
                                               {"111222333444123412341124113234234223224343433433444444", "lyndon"},
                                               {"14213243", "<0101>"},
                                               {"14213243", "wrep"}}})
    t.expect(check(parse_word(word), parse_language(lang), c4).match, std::string(word) + " under " + lang);
}

void example_families(Tally& t, const SelftestOptions&) {
  VertexWord w = parse_word("14213243");
  Graph k2n2 = disjoint_union(complete_graph(2), relabel(null_graph(2), {Vertex("x"), Vertex("y")}));
  Graph two_k2 = disjoint_union(complete_graph(2), relabel(complete_graph(2), {Vertex("x"), Vertex("y")}));
  t.expect(isomorphic(evaluate(w, parse_language("<0011>")), k2n2), "14213243 under <0011>");
  t.expect(isomorphic(evaluate(w, parse_language("<0011,0110>")), two_k2), "14213243 under <0011,0110>");

  struct Family {
    const char* lang;
    std::function<bool(const Graph&)> member;
  };
  std::vector<Family> families{
      {"{}", [](const Graph& g) { return g.edge_count() == 0; }},
      {"{e}", [](const Graph& g) { return g.edge_count() == 0; }},
      {"all", [](const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }},
      {"<01>", core_complete},
      {"<001,010,011>", core_complete_bipartite},
  };
  for (const auto& f : families) {
    Language l = parse_language(f.lang);
    auto freq = default_frequencies(l);
    for (std::size_t n = 1; n <= 5; ++n) {
      auto members = enumerate_class(n, l, freq);
      std::size_t at = 0;
      for (const Graph& g : enumerate_graphs(n)) {
        bool listed = at < members.size() && members[at].graph == g;
        if (listed)
          ++at;
        t.expect(listed == f.member(g), std::string(f.lang) + " listing on " + to_edge_list(g));
      }
    }
  }
}

void universal_builders(Tally& t, const SelftestOptions&) {
  struct Row {
    const char* lang;
    VertexWord (*build)(const Graph&);
  };
  std::array<Row, 4> rows{{{"palindrome", build_palindrome},
                           {"copy", build_copy},
                           {"not(copy)", build_copy_complement},
                           {"lyndon", build_lyndon}}};
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      ++graphs;
      for (const auto& row : rows)
        t.expect(check(row.build(g), parse_language(row.lang), g).match, std::string(row.lang) + " on " + to_edge_list(g));
    }
  t.expect(graphs == 208, "208 graphs of order at most 6");
}

struct TableRow {
  const char* lang;
  ClassTag tag;
  std::function<std::set<std::size_t>(std::size_t)> freq;
};

std::vector<TableRow> table_rows() {
  auto fixed = [](std::set<std::size_t> s) { return [s](std::size_t) { return s; }; };
  auto upto = [](std::size_t extra) {
    return [extra](std::size_t n) {
      std::set<std::size_t> s;
      for (std::size_t k = 1; k <= n + extra; ++k)
        s.insert(k);
      return s;
    };
  };
  return {
      {"<0101,0110>", ClassTag::interval, fixed({2})},
      {"<0110>", ClassTag::permutation, fixed({2})},
      {"<0101>", ClassTag::circle, fixed({2})},
      {"<0011>", ClassTag::co_interval, fixed({2})},
      {"<001>", ClassTag::bipartite_chain, fixed({1, 2})},
      {"<010>", ClassTag::convex, fixed({1, 2})},
      {"<01,001>", ClassTag::threshold, fixed({1, 2})},
      {"dyck", ClassTag::comparability, fixed({1, 2, 3, 4})},
      {"lyndon-odd", ClassTag::bipartite, fixed({1, 2, 3, 4, 5, 6, 7})},
      {"balanced", ClassTag::cluster, upto(0)},
      {"halfline", ClassTag::halfline, fixed({1, 2, 3})},
  };
}

void characterizations(Tally& t, const SelftestOptions& options) {
  for (const auto& row : table_rows()) {
    Language l = parse_language(row.lang);
    for (std::size_t n = 1; n <= options.table_order; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        std::string where = std::string(row.lang) + " on " + to_edge_list(g);
        auto r = search(g, l, uniform_bounds(n, row.freq(n)), {0, 1'000'000'000});
        if (t.expect(r.word.has_value() == oracle(row.tag, g), where) && r.word)
          t.expect(evaluate(*r.word, l) == g, "word check for " + where);
      }
  }
}

void negative_vector(Tally& t, const SelftestOptions&) {
  Graph c5k1 = disjoint_union(cycle_graph(5), relabel(null_graph(1), {Vertex("z")}));
  Language l = parse_language("<0011,0110>");
  t.expect(!search(c5k1, l, uniform_bounds(6, {2})).word, "no 2-uniform word for C5+K1");
  t.expect(check(parse_word("eacdabdebcf"), l, c5k1).match, "eacdabdebcf represents C5+K1");
}

void properties(Tally& t, const SelftestOptions& options) {
  Rng rng(options.seed);
  auto langs = sample_languages();
  auto each = [&](const char* name, auto&& fn) {
    for (std::size_t i = 0; i < options.property_cases && t.clean(); ++i)
      t.expect(fn(i), name);
  };
  each("hereditarity", [&](std::size_t i) { return hereditary(langs[i % langs.size()], rng); });
  each("complement duality", [&](std::size_t i) { return complement_dual(langs[i % langs.size()], rng); });
  each("boolean compatibility", [&](std::size_t i) {
    return boolean_compatible(langs[i % langs.size()], langs[(i / langs.size() + i + 1) % langs.size()], rng);
  });
  each("reversal identity", [&](std::size_t i) { return reversal(langs[i % langs.size()], rng); });
  each("twin insertion", [&](std::size_t i) { return twin_closed(langs[i % langs.size()], rng); });
  Language stable = parse_language("hull(re:0(0|1)*1)");
  each("repetition stability", [&](std::size_t) { return repetition_stable(stable, rng); });
  each("nearly-uniform bipartiteness", [&](std::size_t) { return nearly_uniform_bipartite(rng); });
}

std::vector<std::string> listing(const Language& l, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& m : enumerate_class(n, l, default_frequencies(l)))
    out.push_back(to_edge_list(m.graph));
  return out;
}

bool included(const Language& a, const Language& b) {
  for (std::size_t len = 0; len <= 8; ++len)
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      std::string w(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if (code >> i & 1)
          w[i] = '1';
      if (a.contains(w) && !b.contains(w))
        return false;
    }
  return true;
}

void counterexamples(Tally& t, const SelftestOptions&) {
  Language k_or_n = parse_language("<01>");
  Language two_two = Language::finite(shuffle_finite({"00"}, {"11"}));
  bool disjoint = true;
  for (const auto& w : *two_two.finite_words())
    disjoint = disjoint && !k_or_n.contains(w);
  t.expect(disjoint, "<01> and 00 shuffle 11 are disjoint");
  for (std::size_t n = 1; n <= 4; ++n)
    t.expect(listing(k_or_n, n) == listing(two_two, n), "equal listings at order " + std::to_string(n));

  Graph c4 = cycle_graph(4);
  t.expect(search(c4, parse_language("<0101>"), uniform_bounds(4, {1, 2})).word.has_value(), "C4 under <0101>");
  t.expect(!search(c4, parse_language("<0101,0110>"), uniform_bounds(4, {1, 2})).word, "C4 not under <0101,0110>");

  Language l1 = parse_language("<0101,0110>");
  Language l2 = unite(l1, parse_language("<01110,01101,01011,01100,01010,01001>"));
  WordSet padded;
  for (const auto& s : shuffle_finite({"00"}, {"11"}))
    padded.insert("01" + s);
  Language l3 = unite(l2, hull(Language::finite(padded)));
  t.expect(included(l1, l2) && included(l2, l3), pair_text(l1, l2) + " chain");
  t.expect(check(parse_word("abdacbdcbd"), l2, c4).match, "abdacbdcbd represents C4 under the middle language");
  t.expect(!search(c4, l1, uniform_bounds(4, default_frequencies(l1))).word, "C4 outside the smallest class");
  for (std::size_t n = 1; n <= 4; ++n)
    t.expect(listing(l1, n) == listing(l3, n), "outer classes agree at order " + std::to_string(n));
}

void decision(Tally& t, const SelftestOptions&) {
  auto verified = [&](const Verdict& v, const std::function<bool(std::string_view)>& member, const char* what) {
    t.expect(!v.answer && v.witness && v.witness->count('0') > 0 && v.witness->count('1') > 0 &&
                 member(v.witness->str()),
             what);
  };
  Cfg anbn = parse_cfg("S -> 0 S 1 | eps");
  Verdict a = decide(anbn, Property::bounded_treewidth);
  verified(a, [&](std::string_view b) { return cfg_contains(anbn, b); }, "0^n 1^n");
  t.expect(a.witness && a.witness->str() == "01", "0^n 1^n witness is 01");
  Cfg dyck = parse_cfg("S -> 0 S 1 S | eps");
  verified(decide(dyck, Property::bounded_degeneracy), [&](std::string_view b) { return cfg_contains(dyck, b); },
           "dyck grammar");
  t.expect(decide(parse_cfg("S -> A | B\nA -> 0 A | eps\nB -> 1 B | eps"), Property::bounded_treewidth).answer,
           "0* + 1* grammar");
  t.expect(decide(parse_cfg("S ->"), Property::bounded_treewidth).answer, "empty grammar");
  Language l = parse_language("<0101>");
  verified(decide(l, Property::bounded_treewidth), [&](std::string_view b) { return l.contains(b); }, "<0101>");
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.emplace_back(i, j);
  return Graph(default_names(n), edges);
}

void codec(Tally& t, const SelftestOptions& options) {
  auto law = [](const EncodedView& v, const Graph& g) {
    return v.mode() == CodecMode::dense ||
           v.payload_bits() == (4 * g.order() + 2 * g.edge_count()) * symbol_width(g.order());
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (CodecMode mode : {CodecMode::sparse, CodecMode::dense}) {
        auto named = encode(g, mode);
        t.expect(decode(named.bytes) == g, "named round trip of " + to_edge_list(g));
        auto bare = encode(g, mode, false);
        t.expect(isomorphic(decode(bare.bytes), g), "bare round trip of " + to_edge_list(g));
        t.expect(law(EncodedView(bare.bytes), g), "size law on " + to_edge_list(g));
      }
  Rng rng(options.seed ^ 0x5eed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t per_graph = (options.codec_queries + options.codec_random - 1) / std::max<std::size_t>(1, options.codec_random);
  std::size_t queries = 0;
  for (std::size_t i = 0; i < options.codec_random; ++i) {
    // log-uniform order in [5, 500]; sparse graphs for sparse mode, dense for dense
    auto n = static_cast<std::size_t>(std::lround(5.0 * std::pow(100.0, unit(rng))));
    CodecMode mode = i % 2 ? CodecMode::dense : CodecMode::sparse;
    double p = std::min(1.0, 10.0 * unit(rng) / static_cast<double>(n - 1));
    Graph g = random_graph(rng, n, mode == CodecMode::sparse ? p : 1.0 - p);
    auto e = encode(g, mode);
    EncodedView view(e.bytes);
    Graph back = decode(e.bytes);
    std::string where = std::string(mode_name(mode)) + " random graph " + std::to_string(i);
    t.expect(back == g, where);
    t.expect(law(view, g), "size law on " + where);
    for (std::size_t q = 0; q < per_graph && queries < options.codec_queries; ++q, ++queries) {
      std::size_t u = below(rng, n), v = below(rng, n - 1);
      v += v >= u;
      t.expect(view.adjacent(u, v) == back.adjacent(u, v), "pair query on " + where);
    }
  }
  t.expect(queries == options.codec_queries, "pair query count");
}

void enumeration(Tally& t, const SelftestOptions&) {
  constexpr std::array<std::size_t, 7> counts{1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= counts.size(); ++n)
    t.expect(enumerate_graphs(n).size() == counts[n - 1], "graph count at order " + std::to_string(n));
}

struct Suite {
  std::string_view name;
  double budget;
  void (*run)(Tally&, const SelftestOptions&);
};

constexpr std::array<Suite, 10> suites{{
    {"figure-vectors", 1, figure_vectors},
    {"example-families", 5, example_families},
    {"universal-builders", 120, universal_builders},
    {"characterizations-n5", 600, characterizations},
    {"negative-vector", 10, negative_vector},
    {"properties", 120, properties},
    {"counterexamples", 30, counterexamples},
    {"decision", 1, decision},
    {"codec", 60, codec},
    {"enumeration", 60, enumeration},
}};

constexpr std::array<std::string_view, 10> names{
    suites[0].name, suites[1].name, suites[2].name, suites[3].name, suites[4].name,
    suites[5].name, suites[6].name, suites[7].name, suites[8].name, suites[9].name,
};

template <typename Body>
SuiteResult timed(std::string_view name, double budget, Body&& body) {
  SuiteResult r;
  r.name = name;
  r.budget_seconds = budget;
  Tally t(r);
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.exact = r.failure.empty();
  return r;
}

} // namespace

std::span<const std::string_view> suite_names() { return names; }

SuiteResult run_suite(std::string_view name, const SelftestOptions& options) {
  for (const auto& s : suites)
    if (s.name == name)
      return timed(name, s.budget, [&](Tally& t) { s.run(t, options); });
  throw Error(ErrorKind::invalid_arguments, "unknown suite '" + std::string(name) + "'");
}

SuiteResult probe_language(const Language& l, const SelftestOptions& options) {
  return timed("probe " + l.str(), 120, [&](Tally& t) {
    if (!t.expect(l.symmetric(), "symmetry"))
      return;
    Rng rng(options.seed);
    Language partner = parse_language("<0101,0110>");
    for (std::size_t i = 0; i < options.property_cases && t.clean(); ++i) {
      t.expect(hereditary(l, rng), "hereditarity");
      t.expect(complement_dual(l, rng), "complement duality");
      t.expect(boolean_compatible(l, partner, rng), "boolean compatibility");
      t.expect(reversal(l, rng), "reversal identity");
      t.expect(twin_closed(l, rng), "twin insertion");
    }
  });
}

} // namespace langrep
