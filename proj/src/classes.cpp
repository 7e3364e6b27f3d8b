#include "langrep/classes.hpp"

#include "langrep/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

namespace langrep {

namespace {

constexpr std::array tags{
    ClassTag::null,          ClassTag::complete,          ClassTag::cluster,
    ClassTag::cograph,       ClassTag::bipartite,         ClassTag::cobipartite,
    ClassTag::split,         ClassTag::threshold,         ClassTag::interval,
    ClassTag::co_interval,   ClassTag::circle,            ClassTag::co_circle,
    ClassTag::permutation,   ClassTag::comparability,     ClassTag::cocomparability,
    ClassTag::bipartite_chain, ClassTag::co_bipartite_chain, ClassTag::convex,
    ClassTag::bico_convex,   ClassTag::interval_bigraph,  ClassTag::halfline,
    ClassTag::complete_multipartite, ClassTag::chordal,
};

void require_order(const Graph& g, std::size_t cap, std::string_view what) {
  if (g.order() > cap)
    throw Error(ErrorKind::capacity, std::string(what) + " is limited to " + std::to_string(cap) + " vertices");
}

std::vector<std::uint64_t> rows(const Graph& g) {
  std::vector<std::uint64_t> r(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    r[i] = g.row(i);
  return r;
}

bool is_clique(const std::vector<std::uint64_t>& r, std::uint64_t set) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if ((set >> i & 1u) && (set & ~r[i] & ~(std::uint64_t{1} << i)))
      return false;
  return true;
}

bool p3_free(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        if (i != j && k != j && g.adjacent(i, j) && g.adjacent(j, k) && !g.adjacent(i, k))
          return false;
  return true;
}

bool p4_free(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b))
        continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !g.adjacent(b, c) || g.adjacent(a, c))
          continue;
        for (std::size_t d = 0; d < n; ++d)
          if (d != a && d != b && d != c && g.adjacent(c, d) && !g.adjacent(a, d) && !g.adjacent(b, d))
            return false;
      }
    }
  return true;
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0)
      continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// ---- endpoint-sequence models

enum class Relation { disjoint, nested, crossing };

// Required adjacency of (x, u) given their relation: 1, 0, or -1 for "either".
using PairRule = std::function<int(std::size_t x, std::size_t u, Relation)>;

class EndpointSearch {
public:
  EndpointSearch(const Graph& g, PairRule rule, bool rotation_free)
      : g_(g), rule_(std::move(rule)), rotation_free_(rotation_free), n_(g.order()), state_(n_, 0),
        opened_at_(n_, 0) {}

  std::optional<std::vector<std::size_t>> run() {
    if (dfs())
      return seq_;
    return std::nullopt;
  }

private:
  bool dfs() {
    if (seq_.size() == 2 * n_)
      return true;
    std::string key = memo_key();
    if (failed_.count(key))
      return false;
    for (std::size_t v = 0; v < n_; ++v) {
      if (state_[v] == 0) {
        // a chord diagram can be rotated so that vertex 0 opens first
        if (rotation_free_ && seq_.empty() && v != 0)
          continue;
        state_[v] = 1;
        opened_at_[v] = seq_.size();
        seq_.push_back(v);
        if (dfs())
          return true;
        seq_.pop_back();
        state_[v] = 0;
      } else if (state_[v] == 1 && can_close(v)) {
        state_[v] = 2;
        seq_.push_back(v);
        if (dfs())
          return true;
        seq_.pop_back();
        state_[v] = 1;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  bool can_close(std::size_t x) const {
    for (std::size_t u = 0; u < n_; ++u) {
      if (u == x || state_[u] == 2)
        continue;
      Relation rel = state_[u] == 0              ? Relation::disjoint
                     : opened_at_[u] < opened_at_[x] ? Relation::nested
                                                     : Relation::crossing;
      int need = rule_(x, u, rel);
      if (need >= 0 && need != static_cast<int>(g_.adjacent(x, u)))
        return false;
    }
    return true;
  }

  // Closed and unopened vertices plus the opening order of open ones fix every future check.
  std::string memo_key() const {
    std::string key(n_, '0');
    std::vector<std::size_t> open;
    for (std::size_t v = 0; v < n_; ++v) {
      key[v] = static_cast<char>('0' + state_[v]);
      if (state_[v] == 1)
        open.push_back(v);
    }
    std::sort(open.begin(), open.end(), [&](std::size_t a, std::size_t b) { return opened_at_[a] < opened_at_[b]; });
    for (std::size_t v : open)
      key += static_cast<char>('a' + v);
    return key;
  }

  const Graph& g_;
  PairRule rule_;
  bool rotation_free_;
  std::size_t n_;
  std::vector<int> state_;
  std::vector<std::size_t> opened_at_;
  std::vector<std::size_t> seq_;
  std::set<std::string> failed_;
};

constexpr std::size_t model_cap = 9;

// ---- transitive orientation

class Orienter {
public:
  explicit Orienter(const Graph& g) : g_(g), n_(g.order()), dir_(n_ * n_, 0) {}

  std::optional<StrictOrder> run() {
    if (!solve())
      return std::nullopt;
    StrictOrder o{n_, std::vector<std::uint8_t>(n_ * n_, 0)};
    for (std::size_t i = 0; i < n_ * n_; ++i)
      o.before[i] = dir_[i] == 1;
    return o;
  }

private:
  bool orient(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [i, j] = queue.back();
      queue.pop_back();
      if (dir_[i * n_ + j] == 1)
        continue;
      if (dir_[i * n_ + j] == -1)
        return false;
      dir_[i * n_ + j] = 1;
      dir_[j * n_ + i] = -1;
      for (std::size_t c = 0; c < n_; ++c) {
        if (c == i || c == j)
          continue;
        if (g_.adjacent(j, c) && !g_.adjacent(i, c))
          queue.emplace_back(c, j);
        if (g_.adjacent(i, c) && !g_.adjacent(j, c))
          queue.emplace_back(i, c);
      }
    }
    return true;
  }

  bool transitive() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (dir_[a * n_ + b] == 1)
          for (std::size_t c = 0; c < n_; ++c)
            if (dir_[b * n_ + c] == 1 && dir_[a * n_ + c] != 1)
              return false;
    return true;
  }

  bool solve() {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!g_.adjacent(i, j) || dir_[i * n_ + j] != 0)
          continue;
        auto saved = dir_;
        if (orient(i, j) && solve())
          return true;
        dir_ = saved;
        if (orient(j, i) && solve())
          return true;
        dir_ = std::move(saved);
        return false;
      }
    return transitive();
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> dir_;
};

// ---- permutation models

class PermutationSearch {
public:
  explicit PermutationSearch(const Graph& g) : g_(g), n_(g.order()), used_(n_, 0) {}

  std::optional<PermutationModel> run() {
    if (!dfs())
      return std::nullopt;
    PermutationModel m;
    m.first = order_;
    m.second = order_;
    // in the second order x precedes y iff they agree in the first order and are not adjacent
    auto precedes = [&](std::size_t x, std::size_t y) {
      return position(x) < position(y) ? !g_.adjacent(x, y) : g_.adjacent(x, y);
    };
    std::sort(m.second.begin(), m.second.end(), [&](std::size_t x, std::size_t y) { return x != y && precedes(x, y); });
    return m;
  }

private:
  std::size_t position(std::size_t v) const {
    return static_cast<std::size_t>(std::find(order_.begin(), order_.end(), v) - order_.begin());
  }

  bool dfs() {
    if (order_.size() == n_)
      return true;
    for (std::size_t z = 0; z < n_; ++z) {
      if (used_[z] || !consistent(z))
        continue;
      used_[z] = 1;
      order_.push_back(z);
      if (dfs())
        return true;
      order_.pop_back();
      used_[z] = 0;
    }
    return false;
  }

  // The second order must stay a linear order: no cyclic triple through the new vertex.
  bool consistent(std::size_t z) const {
    // x placed before z: x precedes z in the second order iff not adjacent
    for (std::size_t p = 0; p < order_.size(); ++p)
      for (std::size_t q = p + 1; q < order_.size(); ++q) {
        std::size_t x = order_[p], y = order_[q];
        bool xy = !g_.adjacent(x, y);
        bool yz = !g_.adjacent(y, z);
        bool xz = !g_.adjacent(x, z);
        if (xy && yz && !xz)
          return false;
        if (!xy && !yz && xz)
          return false;
      }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<char> used_;
  std::vector<std::size_t> order_;
};

// ---- convex orderings

class ConvexSearch {
public:
  ConvexSearch(const Graph& g, std::vector<std::size_t> points, std::vector<std::size_t> others)
      : g_(g), points_(std::move(points)), others_(std::move(others)), used_(points_.size(), 0),
        run_state_(others_.size(), 0), remaining_(others_.size(), 0) {
    for (std::size_t b = 0; b < others_.size(); ++b)
      for (std::size_t a : points_)
        remaining_[b] += g_.adjacent(a, others_[b]);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (dfs())
      return order_;
    return std::nullopt;
  }

private:
  bool dfs() {
    if (order_.size() == points_.size())
      return true;
    for (std::size_t p = 0; p < points_.size(); ++p) {
      if (used_[p])
        continue;
      auto saved_state = run_state_;
      auto saved_remaining = remaining_;
      if (place(points_[p])) {
        used_[p] = 1;
        order_.push_back(points_[p]);
        if (dfs())
          return true;
        order_.pop_back();
        used_[p] = 0;
      }
      run_state_ = std::move(saved_state);
      remaining_ = std::move(saved_remaining);
    }
    return false;
  }

  bool place(std::size_t a) {
    for (std::size_t b = 0; b < others_.size(); ++b) {
      if (g_.adjacent(a, others_[b])) {
        if (run_state_[b] == 2)
          return false;
        run_state_[b] = 1;
        --remaining_[b];
      } else if (run_state_[b] == 1) {
        if (remaining_[b] > 0)
          return false;
        run_state_[b] = 2;
      }
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::size_t> points_, others_;
  std::vector<char> used_;
  std::vector<int> run_state_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> order_;
};

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> sides(const std::vector<int>& color) {
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < color.size(); ++i)
    (color[i] == 0 ? a : b).push_back(i);
  return {a, b};
}

std::optional<ConvexModel> convex_with(const Graph& g, const std::vector<int>& color) {
  auto [a, b] = sides(color);
  for (int flip = 0; flip < 2; ++flip) {
    auto& points = flip ? b : a;
    auto& others = flip ? a : b;
    if (auto order = ConvexSearch(g, points, others).run())
      return ConvexModel{*order, others};
  }
  return std::nullopt;
}

bool nested_chain(const Graph& g, std::vector<std::size_t>& side, const std::vector<std::size_t>& other) {
  auto nb = [&](std::size_t v) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < other.size(); ++k)
      if (g.adjacent(v, other[k]))
        m |= std::uint64_t{1} << k;
    return m;
  };
  std::sort(side.begin(), side.end(), [&](std::size_t x, std::size_t y) {
    auto cx = __builtin_popcountll(nb(x)), cy = __builtin_popcountll(nb(y));
    return cx != cy ? cx < cy : x < y;
  });
  for (std::size_t i = 0; i + 1 < side.size(); ++i)
    if ((nb(side[i]) & ~nb(side[i + 1])) != 0)
      return false;
  return true;
}

} // namespace

std::span<const ClassTag> all_tags() { return tags; }

std::string_view tag_name(ClassTag tag) {
  switch (tag) {
  case ClassTag::null: return "null";
  case ClassTag::complete: return "complete";
  case ClassTag::cluster: return "cluster";
  case ClassTag::cograph: return "cograph";
  case ClassTag::bipartite: return "bipartite";
  case ClassTag::cobipartite: return "cobipartite";
  case ClassTag::split: return "split";
  case ClassTag::threshold: return "threshold";
  case ClassTag::interval: return "interval";
  case ClassTag::co_interval: return "co-interval";
  case ClassTag::circle: return "circle";
  case ClassTag::co_circle: return "co-circle";
  case ClassTag::permutation: return "permutation";
  case ClassTag::comparability: return "comparability";
  case ClassTag::cocomparability: return "cocomparability";
  case ClassTag::bipartite_chain: return "bipartite-chain";
  case ClassTag::co_bipartite_chain: return "co-bipartite-chain";
  case ClassTag::convex: return "convex";
  case ClassTag::bico_convex: return "bico-convex";
  case ClassTag::interval_bigraph: return "interval-bigraph";
  case ClassTag::halfline: return "halfline";
  case ClassTag::complete_multipartite: return "complete-multipartite";
  case ClassTag::chordal: return "chordal";
  }
  return "?";
}

std::optional<ClassTag> parse_tag(std::string_view name) {
  for (ClassTag t : tags)
    if (tag_name(t) == name)
      return t;
  return std::nullopt;
}

std::size_t oracle_cap(ClassTag tag) {
  switch (tag) {
  case ClassTag::interval:
  case ClassTag::co_interval:
  case ClassTag::circle:
  case ClassTag::co_circle:
  case ClassTag::interval_bigraph:
  case ClassTag::permutation:
  case ClassTag::convex:
  case ClassTag::bico_convex: return model_cap;
  case ClassTag::comparability:
  case ClassTag::cocomparability: return 10;
  case ClassTag::bipartite_chain:
  case ClassTag::co_bipartite_chain:
  case ClassTag::halfline: return 20;
  default: return 64;
  }
}

std::optional<Cotree> cotree(const Graph& g) {
  std::function<std::optional<Cotree>(const std::vector<std::size_t>&)> build =
      [&](const std::vector<std::size_t>& vs) -> std::optional<Cotree> {
    if (vs.size() == 1)
      return Cotree{Cotree::Kind::leaf, vs[0], {}};
    Graph sub = induced(g, vs);
    for (bool flip : {false, true}) {
      auto parts = components(flip ? complement(sub) : sub);
      if (parts.size() < 2)
        continue;
      Cotree node{flip ? Cotree::Kind::joined : Cotree::Kind::disjoint, 0, {}};
      for (const auto& part : parts) {
        std::vector<std::size_t> mapped;
        for (std::size_t i : part)
          mapped.push_back(vs[i]);
        auto child = build(mapped);
        if (!child)
          return std::nullopt;
        node.children.push_back(std::move(*child));
      }
      return node;
    }
    return std::nullopt;
  };
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return build(all);
}

std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g) {
  require_order(g, 64, "chordality");
  auto r = rows(g);
  std::uint64_t alive = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  std::vector<std::size_t> order;
  while (alive) {
    bool found = false;
    for (std::size_t v = 0; v < g.order() && !found; ++v)
      if ((alive >> v & 1u) && is_clique(r, r[v] & alive)) {
        order.push_back(v);
        alive &= ~(std::uint64_t{1} << v);
        found = true;
      }
    if (!found)
      return std::nullopt;
  }
  return order;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (color[s] >= 0)
      continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<std::vector<int>> all_two_colorings(const Graph& g) {
  auto base = two_coloring(g);
  if (!base)
    return {};
  auto parts = components(g);
  if (parts.size() > 20)
    throw Error(ErrorKind::capacity, "too many components to enumerate colourings");
  std::vector<std::vector<int>> out;
  // the first component keeps its colours; swapping every side at once gives the same partition
  for (std::uint32_t mask = 0; mask < (1u << (parts.size() - 1)); ++mask) {
    auto c = *base;
    for (std::size_t p = 1; p < parts.size(); ++p)
      if (mask >> (p - 1) & 1u)
        for (std::size_t v : parts[p])
          c[v] = 1 - c[v];
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<CreationStep>> creation_sequence(const Graph& g) {
  std::vector<char> alive(g.order(), 1);
  std::vector<CreationStep> removed;
  for (std::size_t left = g.order(); left > 0; --left) {
    bool found = false;
    for (std::size_t v = 0; v < g.order() && !found; ++v) {
      if (!alive[v])
        continue;
      std::size_t deg = 0;
      for (std::size_t u = 0; u < g.order(); ++u)
        deg += alive[u] && g.adjacent(u, v);
      if (deg == 0 || deg + 1 == left) {
        removed.push_back({v, deg != 0});
        alive[v] = 0;
        found = true;
      }
    }
    if (!found)
      return std::nullopt;
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::optional<std::vector<std::size_t>> interval_model(const Graph& g) {
  require_order(g, model_cap, "interval models");
  return EndpointSearch(g, [](std::size_t, std::size_t, Relation r) { return r != Relation::disjoint ? 1 : 0; },
                        false)
      .run();
}

std::optional<std::vector<std::size_t>> chord_model(const Graph& g) {
  require_order(g, model_cap, "chord models");
  return EndpointSearch(g, [](std::size_t, std::size_t, Relation r) { return r == Relation::crossing ? 1 : 0; }, true)
      .run();
}

std::optional<PermutationModel> permutation_model(const Graph& g) {
  require_order(g, model_cap, "permutation models");
  return PermutationSearch(g).run();
}

std::optional<StrictOrder> transitive_orientation(const Graph& g) {
  require_order(g, 10, "transitive orientation");
  return Orienter(g).run();
}

std::optional<ChainModel> chain_model(const Graph& g) {
  require_order(g, 20, "chain models");
  for (const auto& color : all_two_colorings(g)) {
    auto [a, b] = sides(color);
    if (nested_chain(g, a, b)) {
      nested_chain(g, b, a);
      return ChainModel{a, b};
    }
  }
  return std::nullopt;
}

std::optional<ConvexModel> convex_model(const Graph& g) {
  require_order(g, model_cap, "convex models");
  for (const auto& color : all_two_colorings(g))
    if (auto m = convex_with(g, color))
      return m;
  return std::nullopt;
}

Graph bipartite_complement(const Graph& g, const std::vector<int>& side) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (side[i] != side[j] && !g.adjacent(i, j))
        e.emplace_back(i, j);
  return Graph(g.vertices(), e);
}

std::optional<BigraphModel> interval_bigraph_model(const Graph& g) {
  require_order(g, model_cap, "interval bigraph models");
  for (const auto& color : all_two_colorings(g)) {
    auto rule = [&color](std::size_t x, std::size_t u, Relation r) {
      return color[x] == color[u] ? -1 : (r != Relation::disjoint ? 1 : 0);
    };
    if (auto seq = EndpointSearch(g, rule, false).run())
      return BigraphModel{color, *seq};
  }
  return std::nullopt;
}

std::optional<HalflineModel> halfline_model(const Graph& g) {
  require_order(g, 20, "halfline models");
  HalflineModel m;
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < g.order(); ++v)
    (g.degree(v) == 0 ? m.isolated : core).push_back(v);
  m.right_bounded.assign(g.order(), 0);
  if (core.empty())
    return m;
  Graph sub = induced(g, core);
  for (const auto& color : all_two_colorings(complement(sub))) {
    // colour 0: left-bounded [a, inf), colour 1: right-bounded (-inf, a]
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < core.size(); ++i)
      (color[i] == 0 ? left : right).push_back(i);
    auto cross = [&](std::size_t v) {
      std::size_t c = 0;
      for (std::size_t u : (color[v] == 0 ? right : left))
        c += sub.adjacent(v, u);
      return c;
    };
    // a left-bounded halfline meets a right-bounded one iff its endpoint comes first
    std::sort(left.begin(), left.end(), [&](std::size_t x, std::size_t y) { return cross(x) > cross(y); });
    std::sort(right.begin(), right.end(), [&](std::size_t x, std::size_t y) { return cross(x) < cross(y); });
    std::vector<std::size_t> order;
    std::size_t i = 0, j = 0;
    while (i < left.size() || j < right.size()) {
      if (i < left.size() && (j == right.size() || sub.adjacent(left[i], right[j])))
        order.push_back(left[i++]);
      else
        order.push_back(right[j++]);
    }
    std::vector<std::size_t> pos(core.size());
    for (std::size_t p = 0; p < order.size(); ++p)
      pos[order[p]] = p;
    bool ok = true;
    for (std::size_t v : left)
      for (std::size_t u : right)
        ok = ok && (sub.adjacent(v, u) == (pos[v] < pos[u]));
    if (!ok)
      continue;
    for (std::size_t v : order)
      m.order.push_back(core[v]);
    for (std::size_t u : right)
      m.right_bounded[core[u]] = 1;
    return m;
  }
  return std::nullopt;
}

bool oracle(ClassTag tag, const Graph& g) {
  require_order(g, oracle_cap(tag), std::string("the ") + std::string(tag_name(tag)) + " oracle");
  switch (tag) {
  case ClassTag::null: return g.edge_count() == 0;
  case ClassTag::complete: return g.edge_count() == g.order() * (g.order() - 1) / 2;
  case ClassTag::cluster: return p3_free(g);
  case ClassTag::cograph: return p4_free(g);
  case ClassTag::bipartite: return two_coloring(g).has_value();
  case ClassTag::cobipartite: return two_coloring(complement(g)).has_value();
  case ClassTag::chordal: return perfect_elimination_order(g).has_value();
  case ClassTag::split: return oracle(ClassTag::chordal, g) && oracle(ClassTag::chordal, complement(g));
  case ClassTag::threshold: return creation_sequence(g).has_value();
  case ClassTag::interval: return interval_model(g).has_value();
  case ClassTag::co_interval: return interval_model(complement(g)).has_value();
  case ClassTag::circle: return chord_model(g).has_value();
  case ClassTag::co_circle: return chord_model(complement(g)).has_value();
  case ClassTag::permutation: return permutation_model(g).has_value();
  case ClassTag::comparability: return transitive_orientation(g).has_value();
  case ClassTag::cocomparability: return transitive_orientation(complement(g)).has_value();
  case ClassTag::bipartite_chain: return chain_model(g).has_value();
  case ClassTag::co_bipartite_chain: return chain_model(complement(g)).has_value();
  case ClassTag::convex: return convex_model(g).has_value();
  case ClassTag::bico_convex:
    for (const auto& color : all_two_colorings(g))
      if (convex_model(bipartite_complement(g, color)))
        return true;
    return false;
  case ClassTag::interval_bigraph: return interval_bigraph_model(g).has_value();
  case ClassTag::halfline: {
    std::vector<std::size_t> core;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0)
        core.push_back(v);
    if (core.empty())
      return true;
    Graph sub = induced(g, core);
    return oracle(ClassTag::chordal, sub) && oracle(ClassTag::cobipartite, sub);
  }
  case ClassTag::complete_multipartite: return p3_free(complement(g));
  }
  return false;
}

int treewidth_exact(const Graph& g) {
  const std::size_t n = g.order();
  require_order(g, 14, "exact treewidth");
  auto r = rows(g);
  const std::uint32_t full = (1u << n) - 1;
  // vertices outside set ∪ {v} reachable from v through set
  auto boundary = [&](std::uint32_t set, std::size_t v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      std::size_t x = static_cast<std::size_t>(__builtin_ctz(frontier));
      frontier &= frontier - 1;
      auto nb = static_cast<std::uint32_t>(r[x]) & ~seen;
      seen |= nb;
      out |= nb & ~set;
      frontier |= nb & set;
    }
    return __builtin_popcount(out);
  };
  std::vector<int> best(std::size_t{1} << n, 0);
  best[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int value = 1 << 20;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctz(rest));
      std::uint32_t without = s & ~(1u << v);
      value = std::min(value, std::max(best[without], boundary(without, v)));
    }
    best[s] = value;
  }
  return best[full];
}

int degeneracy(const Graph& g) {
  std::vector<char> alive(g.order(), 1);
  int result = 0;
  for (std::size_t left = g.order(); left > 0; --left) {
    std::size_t pick = 0;
    int low = 1 << 20;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (!alive[v])
        continue;
      int deg = 0;
      for (std::size_t u = 0; u < g.order(); ++u)
        deg += alive[u] && g.adjacent(u, v);
      if (deg < low) {
        low = deg;
        pick = v;
      }
    }
    result = std::max(result, low);
    alive[pick] = 0;
  }
  return result;
}

} // namespace langrep
