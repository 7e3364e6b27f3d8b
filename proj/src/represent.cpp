#include "langrep/represent.hpp"

#include "langrep/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace langrep {

namespace {

std::vector<std::vector<std::size_t>> positions_by_letter(const IndexedWord& iw) {
  std::vector<std::vector<std::size_t>> pos(iw.alphabet.size());
  for (std::size_t p = 0; p < iw.letters.size(); ++p)
    pos[static_cast<std::size_t>(iw.letters[p])].push_back(p);
  return pos;
}

std::string merged_projection(const std::vector<std::size_t>& zeros, const std::vector<std::size_t>& ones) {
  std::string bits;
  bits.reserve(zeros.size() + ones.size());
  std::size_t i = 0, j = 0;
  while (i < zeros.size() || j < ones.size()) {
    if (j == ones.size() || (i < zeros.size() && zeros[i] < ones[j])) {
      bits += '0';
      ++i;
    } else {
      bits += '1';
      ++j;
    }
  }
  return bits;
}

} // namespace

Graph evaluate(const VertexWord& w, const Language& l) {
  l.require_symmetric();
  IndexedWord iw = index_word(w);
  auto pos = positions_by_letter(iw);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (l.contains(merged_projection(pos[i], pos[j])))
        edges.emplace_back(i, j);
  return Graph(iw.alphabet, edges);
}

CheckResult check(const VertexWord& w, const Language& l, const Graph& expected) {
  CheckResult r{false, evaluate(w, l), std::nullopt};
  if (r.produced == expected) {
    r.match = true;
    return r;
  }
  bool same_names = r.produced.vertices() == expected.vertices();
  if (r.produced.order() == expected.order() && (r.produced.order() <= 10 || !same_names))
    r.match = isomorphic(r.produced, expected);
  if (!r.match && same_names) {
    for (std::size_t i = 0; i < expected.order() && !r.differing; ++i)
      for (std::size_t j = i + 1; j < expected.order() && !r.differing; ++j)
        if (r.produced.adjacent(i, j) != expected.adjacent(i, j))
          r.differing = std::pair{expected.name(i), expected.name(j)};
  }
  return r;
}

FrequencyBounds uniform_bounds(std::size_t n, std::set<std::size_t> allowed) {
  return FrequencyBounds(n, std::move(allowed));
}

namespace {

constexpr std::size_t max_pair_length = 24;
constexpr std::size_t max_search_order = 16;

class WordSearch {
public:
  WordSearch(const Graph& g, const Language& l, const FrequencyBounds& bounds, SearchLimits limits)
      : g_(g), l_(l), bounds_(bounds), limits_(limits), n_(g.order()) {
    if (n_ > max_search_order)
      throw Error(ErrorKind::capacity, "word search is limited to " + std::to_string(max_search_order) + " vertices");
    if (bounds_.size() != n_)
      throw Error(ErrorKind::invalid_arguments, "one frequency set per vertex is required");
    for (const auto& b : bounds_)
      if (b.empty() || *b.begin() == 0)
        throw Error(ErrorKind::invalid_arguments, "every vertex needs a positive multiplicity");
    find_twins();
  }

  SearchResult run() {
    std::vector<std::vector<std::size_t>> vectors;
    std::vector<std::size_t> m(n_);
    collect(0, m, vectors);
    std::stable_sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) {
      return std::accumulate(a.begin(), a.end(), std::size_t{0}) < std::accumulate(b.begin(), b.end(), std::size_t{0});
    });
    for (const auto& mult : vectors) {
      if (!root_feasible(mult))
        continue;
      mult_ = mult;
      remaining_ = mult;
      total_ = std::accumulate(mult.begin(), mult.end(), std::size_t{0});
      seen_.assign(n_, 0);
      code_.assign(n_ * n_, 1);
      word_.clear();
      if (dfs())
        return {word_from_indices(g_.vertices(), word_), nodes_};
    }
    return {std::nullopt, nodes_};
  }

private:
  // Twins with identical bounds may be renamed freely; order them by
  // (multiplicity, first occurrence).
  void find_twins() {
    previous_twin_.assign(n_, -1);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u = v; u-- > 0;) {
        if (bounds_[u] != bounds_[v])
          continue;
        bool twins = true;
        for (std::size_t x = 0; x < n_ && twins; ++x)
          if (x != u && x != v && g_.adjacent(x, u) != g_.adjacent(x, v))
            twins = false;
        if (twins) {
          previous_twin_[v] = static_cast<int>(u);
          break;
        }
      }
    }
  }

  void collect(std::size_t v, std::vector<std::size_t>& m, std::vector<std::vector<std::size_t>>& out) {
    if (v == n_) {
      std::size_t sum = std::accumulate(m.begin(), m.end(), std::size_t{0});
      if (limits_.max_len == 0 || sum <= limits_.max_len)
        out.push_back(m);
      return;
    }
    for (std::size_t k : bounds_[v]) {
      if (previous_twin_[v] >= 0 && m[static_cast<std::size_t>(previous_twin_[v])] > k)
        continue;
      m[v] = k;
      collect(v + 1, m, out);
    }
  }

  const std::vector<std::uint8_t>& table(std::size_t cu, std::size_t cv) {
    auto key = std::pair{cu, cv};
    auto it = tables_.find(key);
    if (it != tables_.end())
      return it->second;
    std::size_t len = cu + cv;
    if (len > max_pair_length)
      throw Error(ErrorKind::capacity, "pair projections longer than " + std::to_string(max_pair_length));
    std::vector<std::uint8_t> flags(std::size_t{1} << (len + 1), 0);
    std::string w(cu, '0');
    w.append(cv, '1');
    do {
      std::uint8_t mark = l_.contains(w) ? 1 : 2;
      std::size_t code = 1;
      flags[code] |= mark;
      for (char c : w) {
        code = code << 1 | static_cast<std::size_t>(c == '1');
        flags[code] |= mark;
      }
    } while (std::next_permutation(w.begin(), w.end()));
    return tables_.emplace(key, std::move(flags)).first->second;
  }

  bool allowed(std::size_t u, std::size_t v, std::size_t code) {
    std::uint8_t f = table(mult_[u], mult_[v])[code];
    return g_.adjacent(u, v) ? (f & 1) != 0 : (f & 2) != 0;
  }

  bool root_feasible(const std::vector<std::size_t>& mult) {
    mult_ = mult;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (!allowed(u, v, 1))
          return false;
    return true;
  }

  bool dfs() {
    if (word_.size() == total_)
      return true;
    for (std::size_t x = 0; x < n_; ++x) {
      if (remaining_[x] == 0)
        continue;
      if (!seen_[x] && previous_twin_[x] >= 0) {
        auto p = static_cast<std::size_t>(previous_twin_[x]);
        if (mult_[p] == mult_[x] && !seen_[p])
          continue;
      }
      if (++nodes_ > limits_.budget)
        throw Error(ErrorKind::capacity, "search exceeded its budget of " + std::to_string(limits_.budget) + " nodes");
      bool ok = true;
      std::array<std::size_t, max_search_order> changed{};
      std::size_t count = 0;
      for (std::size_t y = 0; y < n_ && ok; ++y) {
        if (y == x)
          continue;
        std::size_t a = std::min(x, y), b = std::max(x, y);
        std::size_t& code = code_[a * n_ + b];
        code = code << 1 | static_cast<std::size_t>(x == b);
        changed[count++] = a * n_ + b;
        ok = allowed(a, b, code);
      }
      if (ok) {
        --remaining_[x];
        char was_seen = seen_[x];
        seen_[x] = 1;
        word_.push_back(static_cast<int>(x));
        if (dfs())
          return true;
        word_.pop_back();
        seen_[x] = was_seen;
        ++remaining_[x];
      }
      for (std::size_t c = 0; c < count; ++c)
        code_[changed[c]] >>= 1;
    }
    return false;
  }

  const Graph& g_;
  const Language& l_;
  const FrequencyBounds& bounds_;
  SearchLimits limits_;
  std::size_t n_;
  std::vector<int> previous_twin_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint8_t>> tables_;
  std::vector<std::size_t> mult_, remaining_;
  std::size_t total_ = 0;
  std::vector<char> seen_;
  std::vector<std::size_t> code_;
  std::vector<int> word_;
  std::uint64_t nodes_ = 0;
};

} // namespace

SearchResult search(const Graph& g, const Language& l, const FrequencyBounds& bounds, SearchLimits limits) {
  l.require_symmetric();
  return WordSearch(g, l, bounds, limits).run();
}

std::set<std::size_t> default_frequencies(const Language& l) {
  if (!l.finite_words())
    return {1, 2, 3};
  std::set<std::size_t> out = freq_and_trash(l).frequencies.values;
  std::size_t gap = 1;
  while (out.count(gap))
    ++gap;
  out.insert(gap);
  return out;
}

std::vector<ClassMember> enumerate_class(std::size_t n, const Language& l, const std::set<std::size_t>& freq,
                                         SearchLimits limits) {
  if (n == 0 || n > 6)
    throw Error(ErrorKind::capacity, "class listings are limited to orders 1..6");
  std::vector<ClassMember> out;
  for (const Graph& g : enumerate_graphs(n)) {
    auto r = search(g, l, uniform_bounds(n, freq), limits);
    if (r.word)
      out.push_back({g, *r.word});
  }
  return out;
}

std::vector<Part> decompose(const VertexWord& w, const Language& l) {
  Graph g = evaluate(w, l);
  auto freq = frequency_profile(w);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : g.edges()) {
    std::size_t a = freq.at(g.name(i)), b = freq.at(g.name(j));
    pairs.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Part> out;
  for (auto [k, m] : pairs) {
    std::set<Vertex> keep;
    for (const auto& [v, c] : freq)
      if (c == k || c == m)
        keep.insert(v);
    out.push_back({k, m, evaluate(project_set(w, keep), l)});
  }
  return out;
}

} // namespace langrep
