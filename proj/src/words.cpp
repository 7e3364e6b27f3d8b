#include "langrep/words.hpp"

#include "langrep/errors.hpp"

#include <algorithm>
#include <cctype>

namespace langrep {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::invalid_arguments: return "invalid-arguments";
  case ErrorKind::empty_projection: return "empty-projection";
  case ErrorKind::not_symmetric: return "not-symmetric";
  case ErrorKind::unsupported_combinator: return "unsupported-combinator";
  case ErrorKind::unsupported: return "unsupported";
  case ErrorKind::capacity: return "capacity";
  case ErrorKind::format: return "format";
  case ErrorKind::parse: return "parse";
  case ErrorKind::precondition: return "precondition";
  case ErrorKind::verification_failed: return "construction-verification-failed";
  }
  return "error";
}

Vertex::Vertex(std::string id) : id_(std::move(id)) {
  if (id_.empty())
    throw Error(ErrorKind::invalid_arguments, "empty vertex token");
  for (unsigned char c : id_)
    if (std::isspace(c) || c == ',')
      throw Error(ErrorKind::invalid_arguments, "vertex token '" + id_ + "' contains a separator");
}

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw Error(ErrorKind::invalid_arguments, "binary word contains '" + std::string(1, c) + "'");
}

std::size_t BinaryWord::count(char bit) const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), bit));
}

VertexWord::VertexWord(std::vector<Vertex> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw Error(ErrorKind::invalid_arguments, "vertex word must be nonempty");
}

std::vector<Vertex> VertexWord::alphabet() const {
  std::vector<Vertex> out(symbols_.begin(), symbols_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string VertexWord::str() const {
  bool single = std::all_of(symbols_.begin(), symbols_.end(),
                            [](const Vertex& v) { return v.id().size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!single && i > 0)
      out += ' ';
    out += symbols_[i].id();
  }
  return out;
}

IndexedWord index_word(const VertexWord& w) {
  IndexedWord out;
  out.alphabet = w.alphabet();
  out.letters.reserve(w.size());
  for (const Vertex& v : w.symbols()) {
    auto it = std::lower_bound(out.alphabet.begin(), out.alphabet.end(), v);
    out.letters.push_back(static_cast<int>(it - out.alphabet.begin()));
  }
  return out;
}

VertexWord word_from_indices(std::span<const Vertex> names, std::span<const int> letters) {
  std::vector<Vertex> symbols;
  symbols.reserve(letters.size());
  for (int i : letters)
    symbols.push_back(names[static_cast<std::size_t>(i)]);
  return VertexWord(std::move(symbols));
}

VertexWord parse_word(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty())
        tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    tokens.push_back(std::move(cur));
  if (tokens.empty())
    throw Error(ErrorKind::parse, "empty word");

  std::vector<Vertex> symbols;
  if (tokens.size() == 1) {
    for (char c : tokens.front())
      symbols.emplace_back(std::string(1, c));
  } else {
    for (auto& t : tokens)
      symbols.emplace_back(std::move(t));
  }
  return VertexWord(std::move(symbols));
}

BinaryWord project(const VertexWord& w, const Vertex& u, const Vertex& v) {
  if (u == v)
    throw Error(ErrorKind::invalid_arguments, "projection needs two distinct letters");
  std::string bits;
  for (const Vertex& x : w.symbols()) {
    if (x == u)
      bits += '0';
    else if (x == v)
      bits += '1';
  }
  return BinaryWord(std::move(bits));
}

VertexWord project_set(const VertexWord& w, const std::set<Vertex>& keep) {
  std::vector<Vertex> out;
  for (const Vertex& x : w.symbols())
    if (keep.count(x))
      out.push_back(x);
  if (out.empty())
    throw Error(ErrorKind::empty_projection, "no letter of the word survives the projection");
  return VertexWord(std::move(out));
}

std::string flip_bits(std::string_view bits) {
  std::string out(bits);
  for (char& c : out)
    c = c == '0' ? '1' : '0';
  return out;
}

std::string reversed_bits(std::string_view bits) {
  return std::string(bits.rbegin(), bits.rend());
}

BinaryWord complement_word(const BinaryWord& b) { return BinaryWord(flip_bits(b.bits())); }

BinaryWord normal_form(const BinaryWord& b) {
  BinaryWord c = complement_word(b);
  return std::min(b, c);
}

BinaryWord reverse(const BinaryWord& b) { return BinaryWord(reversed_bits(b.bits())); }

VertexWord reverse(const VertexWord& w) {
  std::vector<Vertex> out(w.symbols().rbegin(), w.symbols().rend());
  return VertexWord(std::move(out));
}

VertexWord concat(const VertexWord& a, const VertexWord& b) {
  std::vector<Vertex> out(a.symbols().begin(), a.symbols().end());
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return VertexWord(std::move(out));
}

std::map<Vertex, std::size_t> frequency_profile(const VertexWord& w) {
  std::map<Vertex, std::size_t> out;
  for (const Vertex& x : w.symbols())
    ++out[x];
  return out;
}

bool is_k_uniform(const VertexWord& w, std::size_t k) {
  auto profile = frequency_profile(w);
  return std::all_of(profile.begin(), profile.end(), [k](const auto& e) { return e.second == k; });
}

bool is_k_uniform(const BinaryWord& b, std::size_t k) {
  return b.count('0') == k && b.count('1') == k;
}

} // namespace langrep
