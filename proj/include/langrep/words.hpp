#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langrep {

// A vertex symbol: a nonempty token without whitespace or commas.
class Vertex {
public:
  explicit Vertex(std::string id);

  const std::string& id() const noexcept { return id_; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex&, const Vertex&) = default;

private:
  std::string id_;
};

// A word over {0,1}, possibly empty.
class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::string bits);

  std::string_view bits() const noexcept { return bits_; }
  const std::string& str() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::size_t count(char bit) const noexcept;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
  std::string bits_;
};

// A nonempty word over vertex symbols.
class VertexWord {
public:
  explicit VertexWord(std::vector<Vertex> symbols);

  std::span<const Vertex> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const Vertex& operator[](std::size_t i) const { return symbols_[i]; }

  // Sorted, deduplicated.
  std::vector<Vertex> alphabet() const;

  // Contiguous when every token is one character, space separated otherwise.
  std::string str() const;

  friend bool operator==(const VertexWord&, const VertexWord&) = default;

private:
  std::vector<Vertex> symbols_;
};

// Letters as dense indices into the sorted alphabet; the form the engines use.
struct IndexedWord {
  std::vector<Vertex> alphabet;
  std::vector<int> letters;
};

IndexedWord index_word(const VertexWord& w);
VertexWord word_from_indices(std::span<const Vertex> names, std::span<const int> letters);

// Tokens separated by whitespace or commas; a single token made of
// one-character symbols only (e.g. "14213243") is split per character.
VertexWord parse_word(std::string_view text);

BinaryWord project(const VertexWord& w, const Vertex& u, const Vertex& v);
VertexWord project_set(const VertexWord& w, const std::set<Vertex>& keep);

BinaryWord complement_word(const BinaryWord& b);
BinaryWord normal_form(const BinaryWord& b);
BinaryWord reverse(const BinaryWord& b);
VertexWord reverse(const VertexWord& w);
VertexWord concat(const VertexWord& a, const VertexWord& b);

std::map<Vertex, std::size_t> frequency_profile(const VertexWord& w);
bool is_k_uniform(const VertexWord& w, std::size_t k);
bool is_k_uniform(const BinaryWord& b, std::size_t k);

// Helpers shared by the string-level engines.
std::string flip_bits(std::string_view bits);
std::string reversed_bits(std::string_view bits);

} // namespace langrep
