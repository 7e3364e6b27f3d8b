#include "langrep/graph.hpp"

#include "langrep/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace langrep {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> names) {
  if (names.empty())
    throw Error(ErrorKind::invalid_arguments, "a graph needs at least one vertex");
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw Error(ErrorKind::invalid_arguments, "duplicate vertex name");
  return names;
}

constexpr std::size_t iso_cap = 10;

} // namespace

Graph::Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : names_(sorted_unique(std::move(vertices))), adj_(names_.size() * names_.size(), 0) {
  const std::size_t n = names_.size();
  for (const auto& [u, v] : edges) {
    std::size_t i = require_index(u), j = require_index(v);
    if (i == j)
      throw Error(ErrorKind::invalid_arguments, "loop at " + u.id());
    adj_[i * n + j] = adj_[j * n + i] = 1;
  }
}

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : names_(std::move(vertices)), adj_(names_.size() * names_.size(), 0) {
  if (names_.empty())
    throw Error(ErrorKind::invalid_arguments, "a graph needs at least one vertex");
  if (!std::is_sorted(names_.begin(), names_.end()) ||
      std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw Error(ErrorKind::invalid_arguments, "indexed vertices must be sorted and distinct");
  const std::size_t n = names_.size();
  for (auto [i, j] : edges) {
    if (i >= n || j >= n || i == j)
      throw Error(ErrorKind::invalid_arguments, "edge index out of range or loop");
    adj_[i * n + j] = adj_[j * n + i] = 1;
  }
}

std::optional<std::size_t> Graph::index_of(const Vertex& v) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), v);
  if (it == names_.end() || *it != v)
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::require_index(const Vertex& v) const {
  auto i = index_of(v);
  if (!i)
    throw Error(ErrorKind::invalid_arguments, "unknown vertex " + v.id());
  return *i;
}

bool Graph::adjacent(const Vertex& u, const Vertex& v) const { return adjacent(require_index(u), require_index(v)); }

std::size_t Graph::degree(std::size_t i) const {
  const std::size_t n = order();
  return static_cast<std::size_t>(std::count(adj_.begin() + static_cast<std::ptrdiff_t>(i * n),
                                             adj_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n), 1));
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < order(); ++j)
    if (adjacent(i, j))
      out.push_back(j);
  return out;
}

std::uint64_t Graph::row(std::size_t i) const {
  if (order() > 64)
    throw Error(ErrorKind::capacity, "bit rows need at most 64 vertices");
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < order(); ++j)
    if (adjacent(i, j))
      r |= std::uint64_t{1} << j;
  return r;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = i + 1; j < order(); ++j)
      if (adjacent(i, j))
        out.emplace_back(i, j);
  return out;
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<Vertex> default_names(std::size_t n) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  if (n > 26)
    std::sort(out.begin(), out.end());
  return out;
}

Graph null_graph(std::size_t n) { return Graph(default_names(n), std::vector<Edge>{}); }

Graph complete_graph(std::size_t n) { return complement(null_graph(n)); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(default_names(n), e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw Error(ErrorKind::invalid_arguments, "a cycle needs three vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph(default_names(n), e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = a; j < a + b; ++j)
      e.emplace_back(i, j);
  return Graph(default_names(a + b), e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j))
        e.emplace_back(i, j);
  return Graph(g.vertices(), e);
}

namespace {

Graph combine(const Graph& a, const Graph& b, bool connect) {
  std::vector<Vertex> names = a.vertices();
  names.insert(names.end(), b.vertices().begin(), b.vertices().end());
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [i, j] : a.edges())
    e.emplace_back(a.name(i), a.name(j));
  for (auto [i, j] : b.edges())
    e.emplace_back(b.name(i), b.name(j));
  if (connect)
    for (const Vertex& u : a.vertices())
      for (const Vertex& v : b.vertices())
        e.emplace_back(u, v);
  for (const Vertex& v : b.vertices())
    if (a.index_of(v))
      throw Error(ErrorKind::invalid_arguments, "vertex sets are not disjoint: " + v.id());
  return Graph(std::move(names), e);
}

} // namespace

Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }
Graph join(const Graph& a, const Graph& b) { return combine(a, b, true); }

Graph induced(const Graph& g, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> idx = keep;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty())
    throw Error(ErrorKind::invalid_arguments, "induced subgraph needs a nonempty vertex set");
  std::vector<Vertex> names;
  for (std::size_t i : idx) {
    if (i >= g.order())
      throw Error(ErrorKind::invalid_arguments, "vertex index out of range");
    names.push_back(g.name(i));
  }
  std::vector<Edge> e;
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      if (g.adjacent(idx[x], idx[y]))
        e.emplace_back(x, y);
  return Graph(std::move(names), e);
}

Graph induced(const Graph& g, const std::set<Vertex>& keep) {
  std::vector<std::size_t> idx;
  for (const Vertex& v : keep)
    idx.push_back(g.require_index(v));
  return induced(g, idx);
}

Graph add_twin(const Graph& g, const Vertex& v, bool true_twin) {
  std::size_t i = g.require_index(v);
  std::string fresh = v.id() + "'";
  while (g.index_of(Vertex(fresh)))
    fresh += "'";
  Vertex twin(fresh);
  std::vector<Vertex> names = g.vertices();
  names.push_back(twin);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : g.edges())
    e.emplace_back(g.name(a), g.name(b));
  for (std::size_t j : g.neighbors(i))
    e.emplace_back(twin, g.name(j));
  if (true_twin)
    e.emplace_back(twin, v);
  return Graph(std::move(names), e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& names) {
  if (names.size() != g.order())
    throw Error(ErrorKind::invalid_arguments, "relabel needs one name per vertex");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [i, j] : g.edges())
    e.emplace_back(names[i], names[j]);
  return Graph(names, e);
}

namespace {

using Invariant = std::pair<std::size_t, std::vector<std::size_t>>;

std::vector<Invariant> vertex_invariants(const Graph& g) {
  std::vector<Invariant> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::vector<std::size_t> nd;
    for (std::size_t j : g.neighbors(i))
      nd.push_back(g.degree(j));
    std::sort(nd.begin(), nd.end());
    out.emplace_back(g.degree(i), std::move(nd));
  }
  return out;
}

bool extend(const Graph& a, const Graph& b, const std::vector<Invariant>& ia, const std::vector<Invariant>& ib,
            std::vector<std::size_t>& map, std::vector<char>& used, std::size_t i) {
  if (i == a.order())
    return true;
  for (std::size_t j = 0; j < b.order(); ++j) {
    if (used[j] || ia[i] != ib[j])
      continue;
    bool ok = true;
    for (std::size_t p = 0; p < i && ok; ++p)
      ok = a.adjacent(p, i) == b.adjacent(map[p], j);
    if (!ok)
      continue;
    map[i] = j;
    used[j] = 1;
    if (extend(a, b, ia, ib, map, used, i + 1))
      return true;
    used[j] = 0;
  }
  return false;
}

} // namespace

std::optional<std::vector<std::size_t>> isomorphism(const Graph& a, const Graph& b) {
  if (a.order() > iso_cap || b.order() > iso_cap)
    throw Error(ErrorKind::capacity, "isomorphism testing is limited to " + std::to_string(iso_cap) + " vertices");
  if (a.order() != b.order() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto ia = vertex_invariants(a), ib = vertex_invariants(b);
  auto sa = ia, sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb)
    return std::nullopt;
  std::vector<std::size_t> map(a.order());
  std::vector<char> used(b.order(), 0);
  if (!extend(a, b, ia, ib, map, used, 0))
    return std::nullopt;
  return map;
}

bool isomorphic(const Graph& a, const Graph& b) { return isomorphism(a, b).has_value(); }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n == 0 || n > 7)
    throw Error(ErrorKind::capacity, "graph enumeration supports orders 1 to 7");
  std::vector<Graph> level{null_graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    auto names = default_names(k);
    std::map<std::vector<Invariant>, std::vector<Graph>> buckets;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      std::vector<Edge> base = g.edges();
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> e = base;
        for (std::size_t j = 0; j + 1 < k; ++j)
          if (mask >> j & 1u)
            e.emplace_back(j, k - 1);
        Graph h(names, e);
        auto key = vertex_invariants(h);
        std::sort(key.begin(), key.end());
        auto& bucket = buckets[key];
        if (std::none_of(bucket.begin(), bucket.end(), [&](const Graph& x) { return isomorphic(x, h); })) {
          bucket.push_back(h);
          next.push_back(h);
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw Error(ErrorKind::parse, "empty graph description");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::parse, std::string("graph JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
      throw Error(ErrorKind::parse, "graph JSON needs a \"vertices\" array");
    std::vector<Vertex> names;
    std::vector<std::pair<Vertex, Vertex>> edges;
    try {
      for (const auto& v : j["vertices"])
        names.emplace_back(v.get<std::string>());
      if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
          if (!e.is_array() || e.size() != 2)
            throw Error(ErrorKind::parse, "graph JSON edges are pairs");
          edges.emplace_back(Vertex(e[0].get<std::string>()), Vertex(e[1].get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::parse, std::string("graph JSON: ") + e.what());
    }
    return Graph(std::move(names), edges);
  }

  std::istringstream in{std::string(text)};
  std::string line;
  std::set<Vertex> declared;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a) || a.front() == '#')
      continue;
    if (a.rfind("v:", 0) == 0) {
      std::string rest = a.substr(2);
      if (!rest.empty())
        declared.insert(Vertex(rest));
      while (ls >> b)
        declared.insert(Vertex(b));
      continue;
    }
    if (!(ls >> b) || (ls >> extra))
      throw Error(ErrorKind::parse, "edge list lines hold two tokens: '" + line + "'");
    if (!header) {
      try {
        header = std::pair{std::stoul(a), std::stoul(b)};
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "edge list starts with 'n m'");
      }
      continue;
    }
    edges.emplace_back(Vertex(a), Vertex(b));
    declared.insert(Vertex(a));
    declared.insert(Vertex(b));
  }
  if (!header)
    throw Error(ErrorKind::parse, "edge list starts with 'n m'");
  if (edges.size() != header->second)
    throw Error(ErrorKind::parse, "edge list declares " + std::to_string(header->second) + " edges but lists " +
                                      std::to_string(edges.size()));
  if (declared.size() != header->first)
    throw Error(ErrorKind::parse, "edge list declares " + std::to_string(header->first) + " vertices but names " +
                                      std::to_string(declared.size()) + "; list isolated ones on a 'v:' line");
  return Graph(std::vector<Vertex>(declared.begin(), declared.end()), edges);
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Vertex& v : g.vertices())
    j["vertices"].push_back(v.id());
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges())
    j["edges"].push_back({g.name(a).id(), g.name(b).id()});
  return j.dump();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  out << "v:";
  for (const Vertex& v : g.vertices())
    out << ' ' << v.id();
  out << '\n';
  for (auto [a, b] : g.edges())
    out << g.name(a).id() << ' ' << g.name(b).id() << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const Vertex& v : g.vertices())
    out << "  \"" << v.id() << "\";\n";
  for (auto [a, b] : g.edges())
    out << "  \"" << g.name(a).id() << "\" -- \"" << g.name(b).id() << "\";\n";
  out << "}\n";
  return out.str();
}

} // namespace langrep
