#include "langrep/codec.hpp"

#include "langrep/constructions.hpp"
#include "langrep/errors.hpp"
#include "langrep/language.hpp"
#include "langrep/represent.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>

namespace langrep {

namespace {

constexpr std::array<std::uint8_t, 4> magic{'L', 'G', 'R', '1'};

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint64_t get_varint(std::span<const std::uint8_t> bytes, std::size_t& at) {
  std::size_t start = at;
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    if (at >= bytes.size())
      throw FormatError(at, "truncated varint");
    std::uint8_t b = bytes[at++];
    if (shift == 63 && b > 1)
      throw FormatError(start, "varint overflows 64 bits");
    v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80))
      return v;
  }
  throw FormatError(start, "varint overflows 64 bits");
}

} // namespace

std::string_view mode_name(CodecMode m) noexcept { return m == CodecMode::sparse ? "sparse" : "dense"; }

CodecMode parse_mode(std::string_view text) {
  if (text == "sparse")
    return CodecMode::sparse;
  if (text == "dense")
    return CodecMode::dense;
  throw Error(ErrorKind::invalid_arguments, "unknown codec mode '" + std::string(text) + "'");
}

std::size_t symbol_width(std::size_t n) noexcept {
  return n <= 2 ? 1 : static_cast<std::size_t>(std::bit_width(n - 1));
}

EncodedGraph encode(const Graph& g, CodecMode mode, bool with_names) {
  VertexWord w = mode == CodecMode::sparse ? build_copy_complement(g) : build_copy(g);
  const std::size_t n = g.order();
  const std::size_t width = symbol_width(n);
  if (mode == CodecMode::sparse && w.size() != 4 * n + 2 * g.edge_count())
    throw Error(ErrorKind::verification_failed, "sparse word length breaks the 4n + 2m law");

  EncodedGraph e;
  e.bytes.assign(magic.begin(), magic.end());
  e.bytes.push_back(static_cast<std::uint8_t>(mode));
  put_varint(e.bytes, n);
  put_varint(e.bytes, w.size());
  const std::size_t payload = e.bytes.size();
  e.bytes.resize(payload + (w.size() * width + 7) / 8, 0);
  std::size_t bit = 0;
  for (const Vertex& v : w.symbols()) {
    std::size_t index = g.require_index(v);
    for (std::size_t k = width; k-- > 0; ++bit)
      if (index >> k & 1)
        e.bytes[payload + bit / 8] |= static_cast<std::uint8_t>(0x80 >> (bit % 8));
  }
  if (bit != w.size() * width || (e.bytes.size() - payload) * 8 < bit)
    throw Error(ErrorKind::verification_failed, "payload size mismatch");
  if (with_names)
    for (const Vertex& v : g.vertices()) {
      put_varint(e.bytes, v.id().size());
      e.bytes.insert(e.bytes.end(), v.id().begin(), v.id().end());
    }
  return e;
}

EncodedView::EncodedView(std::span<const std::uint8_t> bytes) : bytes_(bytes) {
  for (std::size_t i = 0; i < magic.size(); ++i)
    if (i >= bytes.size() || bytes[i] != magic[i])
      throw FormatError(i, "bad magic");
  std::size_t at = magic.size();
  if (at >= bytes.size())
    throw FormatError(at, "missing mode byte");
  if (bytes[at] > 1)
    throw FormatError(at, "unknown mode " + std::to_string(bytes[at]));
  mode_ = static_cast<CodecMode>(bytes[at++]);
  std::size_t n_at = at;
  std::uint64_t n = get_varint(bytes, at);
  if (n == 0 || n > (std::uint64_t{1} << 32))
    throw FormatError(n_at, "vertex count out of range");
  std::size_t len_at = at;
  std::uint64_t len = get_varint(bytes, at);
  n_ = static_cast<std::size_t>(n);
  width_ = symbol_width(n_);
  if (len > (bytes.size() - at) * 8 / width_)
    throw FormatError(bytes.size(), "truncated payload for " + std::to_string(len) + " symbols declared at byte " +
                                        std::to_string(len_at));
  length_ = static_cast<std::size_t>(len);
  payload_ = at;
  std::size_t bits = length_ * width_;
  std::size_t end = payload_ + (bits + 7) / 8;
  if (bits % 8 && (bytes[end - 1] & (0xffu >> (bits % 8))))
    throw FormatError(end - 1, "nonzero padding bits");
  at = end;
  if (at == bytes.size())
    return;
  names_.reserve(std::min<std::size_t>(n_, bytes.size() - at));
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t name_at = at;
    std::uint64_t size = get_varint(bytes, at);
    if (size > bytes.size() - at)
      throw FormatError(name_at, "truncated name");
    try {
      names_.emplace_back(std::string(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                                      bytes.begin() + static_cast<std::ptrdiff_t>(at + size)));
    } catch (const Error& e) {
      throw FormatError(name_at, e.what());
    }
    if (i > 0 && !(names_[i - 1] < names_[i]))
      throw FormatError(name_at, "names must be strictly increasing");
    at += static_cast<std::size_t>(size);
  }
  if (at != bytes.size())
    throw FormatError(at, "trailing bytes after name table");
}

std::size_t EncodedView::symbol(std::size_t i) const {
  if (i >= length_)
    throw Error(ErrorKind::invalid_arguments, "symbol position out of range");
  std::size_t value = 0;
  std::size_t bit = i * width_;
  for (std::size_t k = 0; k < width_; ++k, ++bit)
    value = value << 1 | ((bytes_[payload_ + bit / 8] >> (7 - bit % 8)) & 1u);
  if (value >= n_)
    throw FormatError(payload_ + (i * width_) / 8, "symbol " + std::to_string(value) + " is not below n");
  return value;
}

VertexWord EncodedView::word() const {
  std::vector<Vertex> all = named() ? names_ : default_names(n_);
  std::vector<Vertex> out;
  out.reserve(length_);
  std::vector<char> seen(n_, 0);
  for (std::size_t i = 0; i < length_; ++i) {
    std::size_t s = symbol(i);
    seen[s] = 1;
    out.push_back(all[s]);
  }
  auto missing = std::find(seen.begin(), seen.end(), 0);
  if (missing != seen.end())
    throw FormatError(payload_, "vertex " + std::to_string(missing - seen.begin()) + " never occurs in the payload");
  return VertexWord(std::move(out));
}

std::size_t EncodedView::resolve(std::string_view token) const {
  std::vector<Vertex> all = named() ? names_ : default_names(n_);
  auto it = std::lower_bound(all.begin(), all.end(), Vertex(std::string(token)));
  if (it != all.end() && it->id() == token)
    return static_cast<std::size_t>(it - all.begin());
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
  if (!named() && ec == std::errc() && ptr == token.data() + token.size() && index < n_)
    return index;
  throw Error(ErrorKind::invalid_arguments, "unknown vertex '" + std::string(token) + "'");
}

bool EncodedView::adjacent(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_ || u == v)
    throw Error(ErrorKind::invalid_arguments, "adjacency needs two distinct vertices below n");
  std::size_t total = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    std::size_t s = symbol(i);
    total += s == u || s == v;
  }
  auto hit = [&](std::size_t& at) {
    std::size_t s;
    while ((s = symbol(at)) != u && s != v)
      ++at;
    ++at;
    return s;
  };
  // The projection is a copy word iff its two halves agree letter by letter.
  bool copy = total % 2 == 0;
  if (copy && total > 0) {
    std::size_t front = 0, back = 0;
    for (std::size_t k = 0; k < total / 2; ++k)
      hit(back);
    for (std::size_t k = 0; k < total / 2 && copy; ++k)
      copy = hit(front) == hit(back);
  }
  return mode_ == CodecMode::dense ? copy : !copy;
}

Graph decode(std::span<const std::uint8_t> bytes) {
  EncodedView view(bytes);
  VertexWord w = view.word();
  Graph copies = evaluate(w, Language::builtin(Builtin::copy));
  return view.mode() == CodecMode::dense ? copies : complement(copies);
}

} // namespace langrep
