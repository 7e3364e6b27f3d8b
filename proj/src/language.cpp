#include "langrep/language.hpp"

#include "langrep/errors.hpp"
#include "langrep/words.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace langrep {

struct Language::Node {
  Kind kind = Kind::finite;
  std::string label;
  WordSet words;
  std::optional<Dfa> automaton;
  std::optional<Cfg> grammar;
  bool attested = false;
  Builtin tag = Builtin::palindrome;
  int k = 0;
  FrequencySet freq;
  Op op = Op::negate;
  std::vector<Language> kids;
};

namespace {

using NodePtr = std::shared_ptr<Language::Node>;

std::string word_label(const std::string& w) { return w.empty() ? "e" : w; }

std::string set_label(const WordSet& words, char open, char close) {
  std::string out(1, open);
  bool first = true;
  for (const auto& w : words) {
    if (!first)
      out += ',';
    first = false;
    out += word_label(w);
  }
  return out + close;
}

std::string_view op_name(Language::Op op) {
  switch (op) {
  case Language::Op::negate: return "not";
  case Language::Op::both: return "and";
  case Language::Op::either: return "or";
  case Language::Op::hull: return "hull";
  case Language::Op::reverse: return "rev";
  }
  return "?";
}

Language lazy(Language::Op op, std::vector<Language> kids) {
  auto n = std::make_shared<Language::Node>();
  n->kind = Language::Kind::combinator;
  n->op = op;
  n->label = std::string(op_name(op)) + "(";
  for (std::size_t i = 0; i < kids.size(); ++i)
    n->label += (i ? "," : "") + kids[i].str();
  n->label += ")";
  n->kids = std::move(kids);
  return Language(std::move(n));
}

Language relabel(Language l, std::string label) {
  auto n = std::make_shared<Language::Node>(*l.node());
  n->label = std::move(label);
  return Language(std::move(n));
}

std::optional<std::string> asymmetry_witness(const WordSet& words) {
  for (const auto& w : words)
    if (!words.count(flip_bits(w)))
      return w;
  return std::nullopt;
}

bool is_lyndon_under(std::string_view s, bool zero_first) {
  const std::size_t n = s.size();
  if (n == 0)
    return false;
  auto rank = [zero_first](char c) { return (c == '0') == zero_first ? 0 : 1; };
  std::size_t j = 1, k = 0;
  while (j < n && rank(s[k]) <= rank(s[j])) {
    if (rank(s[k]) < rank(s[j]))
      k = 0;
    else
      ++k;
    ++j;
  }
  return j == n && k == 0;
}

std::size_t max_overlapping(std::string_view s, char c) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == c && s[i + 1] == c)
      ++count;
  return count;
}

std::size_t longest_run(std::string_view s, char c) {
  std::size_t best = 0, run = 0;
  for (char x : s) {
    run = x == c ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

} // namespace

bool builtin_contains(Builtin tag, int k, std::string_view s) {
  auto zeros = static_cast<std::size_t>(std::count(s.begin(), s.end(), '0'));
  auto ones = s.size() - zeros;
  switch (tag) {
  case Builtin::palindrome:
    return !s.empty() && std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
  case Builtin::copy:
    return s.size() % 2 == 0 && s.substr(0, s.size() / 2) == s.substr(s.size() / 2);
  case Builtin::lyndon:
    return is_lyndon_under(s, true) || is_lyndon_under(s, false);
  case Builtin::lyndon_odd:
    return s.size() % 2 == 1 && (is_lyndon_under(s, true) || is_lyndon_under(s, false));
  case Builtin::dyck: {
    if (zeros != ones)
      return false;
    long level = 0, low = 0, high = 0;
    for (char c : s) {
      level += c == '1' ? 1 : -1;
      low = std::min(low, level);
      high = std::max(high, level);
    }
    return low >= 0 || high <= 0;
  }
  case Builtin::wrep:
    return max_overlapping(s, '0') == 0 && max_overlapping(s, '1') == 0;
  case Builtin::k11:
    return max_overlapping(s, '0') <= static_cast<std::size_t>(k) &&
           max_overlapping(s, '1') <= static_cast<std::size_t>(k);
  case Builtin::no_kk:
    return longest_run(s, '0') < static_cast<std::size_t>(k) && longest_run(s, '1') < static_cast<std::size_t>(k);
  case Builtin::balanced:
    return zeros == ones;
  case Builtin::zero_n_one_n: {
    if (zeros != ones)
      return false;
    auto half = static_cast<std::ptrdiff_t>(s.size() / 2);
    return std::all_of(s.begin(), s.begin() + half, [&](char c) { return c == s[0]; }) &&
           std::all_of(s.begin() + half, s.end(), [&](char c) { return c != s[0]; });
  }
  case Builtin::uniform:
    return zeros == static_cast<std::size_t>(k) && ones == static_cast<std::size_t>(k);
  case Builtin::odd_counts:
    return zeros % 2 == 1 && ones % 2 == 1;
  case Builtin::even_counts:
    return zeros % 2 == 0 && ones % 2 == 0;
  }
  return false;
}

std::string builtin_name(Builtin tag, int k) {
  switch (tag) {
  case Builtin::palindrome: return "palindrome";
  case Builtin::copy: return "copy";
  case Builtin::lyndon: return "lyndon";
  case Builtin::lyndon_odd: return "lyndon-odd";
  case Builtin::dyck: return "dyck";
  case Builtin::wrep: return "wrep";
  case Builtin::k11: return "k11(" + std::to_string(k) + ")";
  case Builtin::no_kk: return "no-kk(" + std::to_string(k) + ")";
  case Builtin::balanced: return "balanced";
  case Builtin::zero_n_one_n: return "0n1n";
  case Builtin::uniform: return "uniform(" + std::to_string(k) + ")";
  case Builtin::odd_counts: return "odd-counts";
  case Builtin::even_counts: return "even-counts";
  }
  return "?";
}

Language Language::finite(WordSet words) {
  for (const auto& w : words)
    BinaryWord{w};
  auto n = std::make_shared<Node>();
  n->kind = Kind::finite;
  n->label = set_label(words, '{', '}');
  n->words = std::move(words);
  return Language(std::move(n));
}

Language Language::regular(Dfa d, bool symmetric, std::string label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::regular;
  n->label = label.empty() ? "dfa(" + std::to_string(d.size()) + ")" : std::move(label);
  n->automaton = std::move(d);
  n->attested = symmetric;
  return Language(std::move(n));
}

Language Language::grammar(Cfg g, bool symmetric, std::string label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::grammar;
  n->label = label.empty() ? "cfg(" + std::to_string(g.nonterminals().size()) + ")" : std::move(label);
  n->grammar = std::move(g);
  n->attested = symmetric;
  return Language(std::move(n));
}

Language Language::builtin(Builtin tag, int k) {
  if (k < 0 || ((tag == Builtin::no_kk) && k < 1))
    throw Error(ErrorKind::invalid_arguments, "bad parameter for " + builtin_name(tag, k));
  auto n = std::make_shared<Node>();
  n->kind = Kind::builtin;
  n->tag = tag;
  n->k = k;
  n->label = builtin_name(tag, k);
  return Language(std::move(n));
}

Language Language::trash(FrequencySet f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::trash;
  n->label = "trash";
  n->freq = std::move(f);
  return Language(std::move(n));
}

Language Language::everything() { return regular(Dfa::everything(), true, "all"); }

bool Language::contains(std::string_view bits) const {
  const Node& n = *node_;
  switch (n.kind) {
  case Kind::finite: return n.words.find(bits) != n.words.end();
  case Kind::regular: return n.automaton->accepts(bits);
  case Kind::grammar: return cfg_contains(*n.grammar, bits);
  case Kind::builtin: return builtin_contains(n.tag, n.k, bits);
  case Kind::trash: {
    auto zeros = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), '0'));
    return !n.freq.contains(zeros) || !n.freq.contains(bits.size() - zeros);
  }
  case Kind::combinator:
    switch (n.op) {
    case Op::negate: return !n.kids[0].contains(bits);
    case Op::both:
      return std::all_of(n.kids.begin(), n.kids.end(), [&](const Language& l) { return l.contains(bits); });
    case Op::either:
      return std::any_of(n.kids.begin(), n.kids.end(), [&](const Language& l) { return l.contains(bits); });
    case Op::hull: return n.kids[0].contains(bits) || n.kids[0].contains(flip_bits(bits));
    case Op::reverse: return n.kids[0].contains(reversed_bits(bits));
    }
  }
  return false;
}

Language::Kind Language::kind() const noexcept { return node_->kind; }

bool Language::symmetric() const {
  const Node& n = *node_;
  switch (n.kind) {
  case Kind::finite: return !asymmetry_witness(n.words);
  case Kind::regular:
  case Kind::grammar: return n.attested;
  case Kind::builtin:
  case Kind::trash: return true;
  case Kind::combinator:
    if (n.op == Op::hull)
      return true;
    return std::all_of(n.kids.begin(), n.kids.end(), [](const Language& l) { return l.symmetric(); });
  }
  return false;
}

void Language::require_symmetric() const {
  if (symmetric())
    return;
  std::string detail = str() + " is not closed under complementing bits";
  if (node_->kind == Kind::finite)
    detail += "; " + word_label(*asymmetry_witness(node_->words)) + " lacks its complement";
  else
    detail += "; wrap it in hull()";
  throw Error(ErrorKind::not_symmetric, detail);
}

bool Language::involves_grammar() const {
  if (node_->kind == Kind::grammar)
    return true;
  return std::any_of(node_->kids.begin(), node_->kids.end(), [](const Language& l) { return l.involves_grammar(); });
}

const WordSet* Language::finite_words() const noexcept {
  return node_->kind == Kind::finite ? &node_->words : nullptr;
}
const Dfa* Language::dfa() const noexcept { return node_->automaton ? &*node_->automaton : nullptr; }
const Cfg* Language::cfg() const noexcept { return node_->grammar ? &*node_->grammar : nullptr; }

std::optional<Language::Op> Language::op() const noexcept {
  if (node_->kind != Kind::combinator)
    return std::nullopt;
  return node_->op;
}
std::span<const Language> Language::operands() const noexcept { return node_->kids; }

std::string Language::str() const { return node_->label; }

WordSet hull_words(const WordSet& words) {
  WordSet out = words;
  for (const auto& w : words)
    out.insert(flip_bits(w));
  return out;
}

Language hull(const Language& l) {
  std::string label = "hull(" + l.str() + ")";
  if (const WordSet* f = l.finite_words())
    return relabel(Language::finite(hull_words(*f)), set_label(*f, '<', '>'));
  if (l.kind() == Language::Kind::regular)
    return Language::regular(product(*l.dfa(), l.dfa()->flipped(), true), true, label);
  if (l.kind() == Language::Kind::grammar)
    return Language::grammar(union_grammar(*l.cfg(), flip_terminals(*l.cfg())), true, label);
  return lazy(Language::Op::hull, {l});
}

Language complement(const Language& l) {
  if (l.involves_grammar())
    throw Error(ErrorKind::unsupported_combinator, "complement is not available for grammars");
  std::string label = "not(" + l.str() + ")";
  if (const WordSet* f = l.finite_words())
    return Language::regular(Dfa::from_words(*f).complemented(), l.symmetric(), label);
  if (l.kind() == Language::Kind::regular)
    return Language::regular(l.dfa()->complemented(), l.symmetric(), label);
  return lazy(Language::Op::negate, {l});
}

Language intersect(const Language& a, const Language& b) {
  if (a.involves_grammar() || b.involves_grammar())
    throw Error(ErrorKind::unsupported_combinator, "intersection is not available for grammars");
  std::string label = "and(" + a.str() + "," + b.str() + ")";
  auto filter = [&](const WordSet& f, const Language& other) {
    WordSet out;
    for (const auto& w : f)
      if (other.contains(w))
        out.insert(w);
    return relabel(Language::finite(std::move(out)), label);
  };
  if (const WordSet* f = a.finite_words())
    return filter(*f, b);
  if (const WordSet* f = b.finite_words())
    return filter(*f, a);
  if (a.kind() == Language::Kind::regular && b.kind() == Language::Kind::regular)
    return Language::regular(product(*a.dfa(), *b.dfa(), false), a.symmetric() && b.symmetric(), label);
  return lazy(Language::Op::both, {a, b});
}

Language unite(const Language& a, const Language& b) {
  std::string label = "or(" + a.str() + "," + b.str() + ")";
  const WordSet* fa = a.finite_words();
  const WordSet* fb = b.finite_words();
  if (fa && fb) {
    WordSet out = *fa;
    out.insert(fb->begin(), fb->end());
    return relabel(Language::finite(std::move(out)), label);
  }
  auto as_dfa = [](const Language& l) -> std::optional<Dfa> {
    if (const WordSet* f = l.finite_words())
      return Dfa::from_words(*f);
    if (l.kind() == Language::Kind::regular)
      return *l.dfa();
    return std::nullopt;
  };
  auto da = as_dfa(a), db = as_dfa(b);
  if (da && db)
    return Language::regular(product(*da, *db, true), a.symmetric() && b.symmetric(), label);
  return lazy(Language::Op::either, {a, b});
}

Language reverse(const Language& l) {
  std::string label = "rev(" + l.str() + ")";
  if (const WordSet* f = l.finite_words()) {
    WordSet out;
    for (const auto& w : *f)
      out.insert(reversed_bits(w));
    return relabel(Language::finite(std::move(out)), label);
  }
  if (l.kind() == Language::Kind::grammar)
    return Language::grammar(reverse_productions(*l.cfg()), l.symmetric(), label);
  return lazy(Language::Op::reverse, {l});
}

WordSet shuffle_finite(const WordSet& a, const WordSet& b) {
  WordSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      // choose which positions come from x
      std::string mask(x.size(), '0');
      mask.append(y.size(), '1');
      do {
        std::string w;
        std::size_t i = 0, j = 0;
        for (char m : mask)
          w += m == '0' ? x[i++] : y[j++];
        out.insert(std::move(w));
      } while (std::next_permutation(mask.begin(), mask.end()));
    }
  }
  return out;
}

TrashSplit freq_and_trash(const Language& l) {
  const WordSet* f = l.finite_words();
  if (!f)
    throw Error(ErrorKind::unsupported, "frequencies are computed for finite languages only");
  FrequencySet freq;
  for (const auto& w : *f) {
    auto zeros = static_cast<std::size_t>(std::count(w.begin(), w.end(), '0'));
    for (std::size_t c : {zeros, w.size() - zeros})
      if (c >= 1)
        freq.values.insert(c);
  }
  Language trash = Language::trash(freq);
  Language extended = relabel(unite(l, trash), "trash-ext(" + l.str() + ")");
  return {freq, trash, extended};
}

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        text_ += c;
  }

  Language parse() {
    Language l = expr();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return l;
  }

private:
  Language expr() {
    if (pos_ >= text_.size())
      fail("unexpected end");
    char c = text_[pos_];
    if (c == '<' || c == '{') {
      WordSet words = word_list(c == '<' ? '>' : '}');
      return c == '<' ? hull(Language::finite(std::move(words))) : Language::finite(std::move(words));
    }
    if (text_.compare(pos_, 3, "re:") == 0) {
      pos_ += 3;
      std::size_t begin = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        char x = text_[pos_];
        if (x == ',' && depth == 0)
          break;
        if (x == ')') {
          if (depth == 0)
            break;
          --depth;
        } else if (x == '(') {
          ++depth;
        }
        ++pos_;
      }
      std::string expr = text_.substr(begin, pos_ - begin);
      Dfa d = Dfa::from_regex(expr);
      return Language::regular(d, d.equivalent(d.flipped()), "re:" + expr);
    }
    std::string name = identifier();
    if (name.empty())
      fail("expected a language");
    if (name == "not" || name == "hull" || name == "rev" || name == "trash-ext") {
      auto kids = arguments();
      if (kids.size() != 1)
        fail(name + " takes one argument");
      if (name == "not")
        return complement(kids[0]);
      if (name == "hull")
        return hull(kids[0]);
      if (name == "rev")
        return reverse(kids[0]);
      return freq_and_trash(kids[0]).extended;
    }
    if (name == "and" || name == "or") {
      auto kids = arguments();
      if (kids.size() < 2)
        fail(name + " takes at least two arguments");
      Language acc = kids[0];
      for (std::size_t i = 1; i < kids.size(); ++i)
        acc = name == "and" ? intersect(acc, kids[i]) : unite(acc, kids[i]);
      return acc;
    }
    if (name == "all")
      return Language::everything();
    if (name == "halfline")
      return relabel(hull(Language::finite({"01", "011", "0101", "0011", "0110"})), "halfline");
    static const std::vector<std::pair<std::string_view, Builtin>> plain{
        {"palindrome", Builtin::palindrome}, {"copy", Builtin::copy},
        {"lyndon", Builtin::lyndon},         {"lyndon-odd", Builtin::lyndon_odd},
        {"dyck", Builtin::dyck},             {"wrep", Builtin::wrep},
        {"balanced", Builtin::balanced},     {"0n1n", Builtin::zero_n_one_n},
        {"odd-counts", Builtin::odd_counts}, {"even-counts", Builtin::even_counts}};
    for (const auto& [n, tag] : plain)
      if (name == n)
        return Language::builtin(tag);
    static const std::vector<std::pair<std::string_view, Builtin>> param{
        {"uniform", Builtin::uniform}, {"k11", Builtin::k11}, {"no-kk", Builtin::no_kk}};
    for (const auto& [n, tag] : param) {
      if (name == n) {
        expect('(');
        int k = number();
        expect(')');
        return Language::builtin(tag, k);
      }
    }
    fail("unknown language '" + name + "'");
  }

  std::vector<Language> arguments() {
    expect('(');
    std::vector<Language> kids{expr()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      kids.push_back(expr());
    }
    expect(')');
    return kids;
  }

  WordSet word_list(char close) {
    ++pos_;
    WordSet words;
    if (pos_ < text_.size() && text_[pos_] == close) {
      ++pos_;
      return words;
    }
    for (;;) {
      std::string w;
      while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1' || text_[pos_] == 'e')) {
        if (text_[pos_] != 'e')
          w += text_[pos_];
        ++pos_;
      }
      words.insert(std::move(w));
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(close);
      return words;
    }
  }

  std::string identifier() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
      ++pos_;
    return text_.substr(begin, pos_ - begin);
  }

  int number() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (begin == pos_ || pos_ - begin > 6)
      fail("expected a small number");
    return std::stoi(text_.substr(begin, pos_ - begin));
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, "language spec: " + what + " at position " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

} // namespace

Language parse_language(std::string_view text) { return SpecParser(text).parse(); }

} // namespace langrep
