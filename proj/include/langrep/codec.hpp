#pragma once

#include "langrep/graph.hpp"
#include "langrep/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace langrep {

// sparse: complement-of-copy word, 4n + 2m symbols.
// dense: copy word of the graph itself.
enum class CodecMode : std::uint8_t { sparse = 0, dense = 1 };

std::string_view mode_name(CodecMode m) noexcept;
CodecMode parse_mode(std::string_view text);

// Layout: "LGR1", mode byte, varint n, varint word length, symbols packed
// big-endian at symbol_width(n) bits each and zero-padded to a byte, then
// optionally n names, each a varint byte count followed by UTF-8.
struct EncodedGraph {
  std::vector<std::uint8_t> bytes;
};

std::size_t symbol_width(std::size_t n) noexcept;

EncodedGraph encode(const Graph& g, CodecMode mode, bool with_names = true);
// Unnamed encodings decode onto default_names(n).
Graph decode(std::span<const std::uint8_t> bytes);

// Read-only view over an encoding; validates everything except the payload
// symbols, which are checked as they are read.
class EncodedView {
public:
  explicit EncodedView(std::span<const std::uint8_t> bytes);

  CodecMode mode() const noexcept { return mode_; }
  std::size_t order() const noexcept { return n_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t payload_bits() const noexcept { return length_ * width_; }
  bool named() const noexcept { return !names_.empty(); }
  std::span<const Vertex> names() const noexcept { return names_; }

  std::size_t symbol(std::size_t i) const;
  VertexWord word() const;
  // Accepts a stored name or, for unnamed encodings, a default name or an index.
  std::size_t resolve(std::string_view token) const;

  // Two scans of the payload, no allocation.
  bool adjacent(std::size_t u, std::size_t v) const;

private:
  std::span<const std::uint8_t> bytes_;
  CodecMode mode_ = CodecMode::sparse;
  std::size_t n_ = 0;
  std::size_t length_ = 0;
  std::size_t width_ = 1;
  std::size_t payload_ = 0; // byte offset
  std::vector<Vertex> names_;
};

} // namespace langrep
