#include "langrep/decide.hpp"

#include "langrep/errors.hpp"

#include <functional>

namespace langrep {

namespace {

constexpr std::size_t enumeration_length = 14;

bool uses_both(std::string_view bits) {
  return bits.find('0') != std::string_view::npos && bits.find('1') != std::string_view::npos;
}

std::optional<std::string> first_word(const std::function<bool(std::string_view)>& pred, std::size_t max_len) {
  std::string w;
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      w.assign(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if (code >> (len - 1 - i) & 1)
          w[i] = '1';
      if (pred(w))
        return w;
    }
  }
  return std::nullopt;
}

Verdict finish(Property p, std::optional<std::string> found, const std::function<bool(std::string_view)>& member) {
  if (!found)
    return {p, true, std::nullopt};
  if (!uses_both(*found) || !member(*found))
    throw Error(ErrorKind::verification_failed, "witness " + *found + " is not a two-letter member");
  return {p, false, BinaryWord(*found)};
}

} // namespace

std::string_view property_name(Property p) noexcept {
  return p == Property::bounded_treewidth ? "bounded-treewidth" : "bounded-degeneracy";
}

Property parse_property(std::string_view text) {
  if (text == "treewidth" || text == "bounded-treewidth")
    return Property::bounded_treewidth;
  if (text == "degeneracy" || text == "bounded-degeneracy")
    return Property::bounded_degeneracy;
  throw Error(ErrorKind::invalid_arguments, "unknown property '" + std::string(text) + "'");
}

// Both properties reduce to the same emptiness test.
Verdict decide(const Cfg& g, Property p) {
  Cfg both = intersect_regular(g, Dfa::both_letters());
  return finish(p, is_empty(both) ? std::nullopt : shortest_word(both),
                [&](std::string_view b) { return cfg_contains(g, b); });
}

Verdict decide(const Dfa& d, Property p) {
  return finish(p, product(d, Dfa::both_letters(), false).shortest_accepted(),
                [&](std::string_view b) { return d.accepts(b); });
}

Verdict decide(const WordSet& words, Property p) {
  std::optional<std::string> found;
  for (const auto& w : words)
    if (uses_both(w) && (!found || w.size() < found->size()))
      found = w;
  return finish(p, found, [&](std::string_view b) { return words.count(b) > 0; });
}

Verdict decide(const Language& l, Property p) {
  if (const WordSet* f = l.finite_words())
    return decide(*f, p);
  if (const Cfg* g = l.cfg())
    return decide(*g, p);
  if (const Dfa* d = l.dfa())
    return decide(*d, p);
  auto op = l.op();
  if (op == Language::Op::hull || op == Language::Op::reverse) {
    Verdict inner = decide(l.operands().front(), p);
    if (inner.witness && op == Language::Op::reverse)
      inner.witness = reverse(*inner.witness);
    return inner;
  }
  auto member = [&](std::string_view b) { return l.contains(b); };
  auto found = first_word([&](std::string_view b) { return uses_both(b) && member(b); }, enumeration_length);
  if (!found)
    throw Error(ErrorKind::unsupported, "no decision procedure for " + l.str());
  return finish(p, found, member);
}

std::string_view triviality_name(Triviality t) noexcept {
  switch (t) {
  case Triviality::null_graphs: return "null-graphs";
  case Triviality::complete_graphs: return "complete-graphs";
  case Triviality::nontrivial: return "nontrivial";
  case Triviality::undetermined: return "undetermined";
  }
  return "undetermined";
}

Triviality classify(const Language& l) {
  bool exact = l.finite_words() || l.cfg() || l.dfa();
  if (exact && decide(l, Property::bounded_treewidth).answer)
    return Triviality::null_graphs;
  if (l.finite_words())
    return Triviality::nontrivial;
  if (const Dfa* d = l.dfa()) {
    bool full = !product(d->complemented(), Dfa::both_letters(), false).shortest_accepted();
    return full ? Triviality::complete_graphs : Triviality::nontrivial;
  }
  bool has_member = !exact && first_word([&](std::string_view b) { return uses_both(b) && l.contains(b); },
                                         enumeration_length);
  bool has_gap = first_word([&](std::string_view b) { return uses_both(b) && !l.contains(b); }, enumeration_length)
                     .has_value();
  if (has_gap && (exact || has_member))
    return Triviality::nontrivial;
  return Triviality::undetermined;
}

} // namespace langrep
