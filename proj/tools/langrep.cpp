#include "langrep/classes.hpp"
#include "langrep/codec.hpp"
#include "langrep/constructions.hpp"
#include "langrep/decide.hpp"
#include "langrep/errors.hpp"
#include "langrep/represent.hpp"
#include "langrep/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace langrep;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct Global {
  bool as_json = false;
  std::uint64_t seed = SelftestOptions{}.seed;
};

std::string slurp(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::invalid_arguments, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::uint8_t> slurp_bytes(const std::string& path) {
  std::string s = slurp(path);
  return {s.begin(), s.end()};
}

json graph_json(const Graph& g) { return json::parse(to_json(g)); }

std::string render(const Graph& g, const std::string& format) {
  if (format == "dot")
    return to_dot(g);
  if (format == "json")
    return to_json(g) + "\n";
  return to_edge_list(g);
}

// "2", "1,2,3", "1-3" or "1..3", comma separated pieces.
std::set<std::size_t> parse_freq(const std::string& text) {
  std::set<std::size_t> out;
  std::stringstream ss(text);
  std::string piece;
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw Error(ErrorKind::invalid_arguments, "bad multiplicity '" + std::string(s) + "'");
    return v;
  };
  while (std::getline(ss, piece, ',')) {
    auto dots = piece.find("..");
    auto dash = piece.find('-');
    if (dots != std::string::npos || dash != std::string::npos) {
      std::size_t cut = dots != std::string::npos ? dots : dash;
      std::size_t lo = number(std::string_view(piece).substr(0, cut));
      std::size_t hi = number(std::string_view(piece).substr(cut + (dots != std::string::npos ? 2 : 1)));
      if (hi < lo || hi - lo > 64)
        throw Error(ErrorKind::invalid_arguments, "bad multiplicity range '" + piece + "'");
      for (std::size_t k = lo; k <= hi; ++k)
        out.insert(k);
    } else {
      out.insert(number(piece));
    }
  }
  if (out.empty())
    throw Error(ErrorKind::invalid_arguments, "empty multiplicity set");
  return out;
}

json freq_json(const std::set<std::size_t>& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

void emit(const Global& g, const json& j, const std::string& text) {
  if (g.as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int cmd_eval(const Global& g, const std::string& lang, const std::string& word, const std::string& out) {
  Graph r = evaluate(parse_word(word), parse_language(lang));
  emit(g, {{"graph", graph_json(r)}}, render(r, out));
  return exit_ok;
}

int cmd_check(const Global& g, const std::string& lang, const std::string& word, const std::string& file) {
  auto r = check(parse_word(word), parse_language(lang), parse_graph(slurp(file)));
  json j{{"match", r.match}, {"produced", graph_json(r.produced)}};
  std::string text = r.match ? "match\n" : "mismatch\n";
  if (r.differing) {
    j["differing"] = {r.differing->first.id(), r.differing->second.id()};
    text = "mismatch at " + r.differing->first.id() + " " + r.differing->second.id() + "\n";
  }
  emit(g, j, text);
  return r.match ? exit_ok : exit_negative;
}

int cmd_search(const Global& g, const std::string& lang, const std::string& file, const std::string& freq,
               std::size_t uniform, std::uint64_t budget, std::size_t max_len) {
  if (freq.empty() == (uniform == 0))
    throw Error(ErrorKind::invalid_arguments, "give exactly one of --freq and --uniform");
  Graph graph = parse_graph(slurp(file));
  auto allowed = uniform ? std::set<std::size_t>{uniform} : parse_freq(freq);
  auto r = search(graph, parse_language(lang), uniform_bounds(graph.order(), allowed), {max_len, budget});
  json j{{"found", r.word.has_value()}, {"nodes", r.nodes}, {"freq", freq_json(allowed)}};
  if (r.word)
    j["word"] = r.word->str();
  emit(g, j, r.word ? r.word->str() + "\n" : "none\n");
  return r.word ? exit_ok : exit_negative;
}

int cmd_build(const Global& g, const std::string& tag, const std::string& file, bool cert) {
  const Recipe& recipe = find_recipe(tag);
  Graph graph = parse_graph(slurp(file));
  VertexWord w = recipe.build(graph);
  bool match = check(w, parse_language(recipe.language), graph).match;
  json j{{"recipe", recipe.name}, {"language", recipe.language}, {"word", w.str()}};
  if (recipe.tag)
    j["class"] = std::string(tag_name(*recipe.tag));
  std::string text = w.str() + "\n";
  if (cert) {
    j["verdict"] = match ? "match" : "mismatch";
    text = j.dump(2) + "\n";
  }
  emit(g, j, text);
  return match ? exit_ok : exit_negative;
}

int cmd_decompose(const Global& g, const std::string& lang, const std::string& word) {
  json parts = json::array();
  std::string text;
  for (const Part& p : decompose(parse_word(word), parse_language(lang))) {
    parts.push_back({{"k", p.k}, {"l", p.l}, {"graph", graph_json(p.subgraph)}});
    text += "part " + std::to_string(p.k) + " " + std::to_string(p.l) + "\n" + to_edge_list(p.subgraph);
  }
  emit(g, {{"parts", parts}}, text.empty() ? "no parts\n" : text);
  return exit_ok;
}

int cmd_decide(const std::string& cfg, const std::string& lang, const std::string& property) {
  if (cfg.empty() == lang.empty())
    throw Error(ErrorKind::invalid_arguments, "give exactly one of --cfg and --lang");
  Language l = cfg.empty() ? parse_language(lang) : Language::grammar(parse_cfg(slurp(cfg)), false);
  Verdict v = decide(l, parse_property(property));
  json j{{"property", std::string(property_name(v.property))},
         {"answer", v.answer},
         {"witness", v.witness ? json(v.witness->str()) : json(nullptr)},
         {"triviality", std::string(triviality_name(classify(l)))}};
  // The verdict is JSON in both modes.
  std::cout << j.dump() << "\n";
  return v.answer ? exit_ok : exit_negative;
}

int cmd_encode(const Global& g, const std::string& file, const std::string& mode, const std::string& out,
               bool anonymous) {
  Graph graph = parse_graph(slurp(file));
  auto e = encode(graph, parse_mode(mode), !anonymous);
  EncodedView view(e.bytes);
  if (out.empty() || out == "-") {
    std::cout.write(reinterpret_cast<const char*>(e.bytes.data()), static_cast<std::streamsize>(e.bytes.size()));
    return exit_ok;
  }
  std::ofstream f(out, std::ios::binary);
  f.write(reinterpret_cast<const char*>(e.bytes.data()), static_cast<std::streamsize>(e.bytes.size()));
  if (!f)
    throw Error(ErrorKind::invalid_arguments, "cannot write " + out);
  json j{{"mode", mode},      {"vertices", graph.order()},   {"edges", graph.edge_count()},
         {"symbols", view.length()}, {"payload_bits", view.payload_bits()}, {"bytes", e.bytes.size()}};
  emit(g, j,
       std::to_string(e.bytes.size()) + " bytes, " + std::to_string(view.length()) + " symbols of " +
           std::to_string(view.width()) + " bits\n");
  return exit_ok;
}

int cmd_decode(const Global& g, const std::string& in, const std::string& out) {
  Graph graph = decode(slurp_bytes(in));
  emit(g, {{"graph", graph_json(graph)}}, render(graph, out));
  return exit_ok;
}

int cmd_adjacent(const Global& g, const std::string& in, const std::string& u, const std::string& v) {
  auto bytes = slurp_bytes(in);
  EncodedView view(bytes);
  bool adj = view.adjacent(view.resolve(u), view.resolve(v));
  emit(g, {{"adjacent", adj}}, adj ? "true\n" : "false\n");
  return adj ? exit_ok : exit_negative;
}

int cmd_classes(const Global& g, std::size_t order, const std::string& lang, const std::string& freq,
                std::uint64_t budget) {
  Language l = parse_language(lang);
  auto allowed = freq.empty() ? default_frequencies(l) : parse_freq(freq);
  auto members = enumerate_class(order, l, allowed, {0, budget});
  json list = json::array();
  std::string text;
  for (const auto& m : members) {
    list.push_back({{"graph", graph_json(m.graph)}, {"word", m.word.str()}});
    text += "word " + m.word.str() + "\n" + to_edge_list(m.graph);
  }
  json j{{"order", order}, {"language", l.str()}, {"freq", freq_json(allowed)}, {"count", members.size()},
         {"members", list}};
  emit(g, j, text + std::to_string(members.size()) + " graphs\n");
  return members.empty() ? exit_negative : exit_ok;
}

json result_json(const SuiteResult& r) {
  json j{{"name", r.name},       {"pass", r.passed()},   {"exact", r.exact},
         {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}, {"within_budget", r.within_budget()},
         {"checks", r.checks}};
  if (!r.failure.empty())
    j["failure"] = r.failure;
  return j;
}

int cmd_selftest(const Global& g, std::vector<std::string> names, const std::string& probe, std::size_t cases) {
  SelftestOptions options;
  options.seed = g.seed;
  if (cases)
    options.property_cases = cases;
  std::vector<SuiteResult> results;
  if (!probe.empty()) {
    results.push_back(probe_language(parse_language(probe), options));
  } else {
    if (names.empty())
      names.assign(suite_names().begin(), suite_names().end());
    for (const auto& n : names)
      results.push_back(run_suite(n, options));
  }
  bool all = true;
  json suites = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    suites.push_back(result_json(r));
  }
  // The report is JSON in both modes.
  std::cout << json{{"pass", all}, {"seed", options.seed}, {"suites", suites}}.dump(g.as_json ? -1 : 2) << "\n";
  return all ? exit_ok : exit_negative;
}

void report(const Global& g, const Error& e) {
  if (g.as_json)
    std::cout << json{{"error", {{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}}}}.dump() << "\n";
  std::cerr << "langrep: " << e.what() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs represented by binary languages over words"};
  app.require_subcommand(1);
  Global global;
  app.add_flag("--json", global.as_json, "machine-readable output");
  app.add_option("--seed", global.seed, "seed for randomized checks");

  std::string lang, word, graph_file, out_format = "edges", freq, tag, cfg, property = "treewidth", mode = "sparse",
                                      out_file, in_file, u, v, probe;
  std::size_t uniform = 0, order = 0, max_len = 0, cases = 0;
  std::uint64_t budget = SearchLimits{}.budget;
  bool emit_word = false, emit_cert = false, anonymous = false;
  std::vector<std::string> suites;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* eval = sub("eval", "graph of a word under a language");
  eval->add_option("--lang", lang)->required();
  eval->add_option("--word", word)->required();
  eval->add_option("--out", out_format)->check(CLI::IsMember({"dot", "json", "edges"}));

  auto* chk = sub("check", "compare a word's graph with a given graph");
  chk->add_option("--lang", lang)->required();
  chk->add_option("--word", word)->required();
  chk->add_option("--graph", graph_file)->required();

  auto* srch = sub("search", "bounded search for a representing word");
  srch->add_option("--lang", lang)->required();
  srch->add_option("--graph", graph_file)->required();
  srch->add_option("--freq", freq, "multiplicities, e.g. 1,2 or 1-3");
  srch->add_option("--uniform", uniform);
  srch->add_option("--budget", budget);
  srch->add_option("--max-len", max_len);

  auto* build = sub("build", "construct a representing word for a class member");
  build->add_option("--class", tag)->required();
  build->add_option("--graph", graph_file)->required();
  auto* ew = build->add_flag("--emit-word", emit_word);
  build->add_flag("--emit-cert", emit_cert)->excludes(ew);

  auto* dec = sub("decompose", "split a word's graph by multiplicity pairs");
  dec->add_option("--lang", lang)->required();
  dec->add_option("--word", word)->required();

  auto* decide_cmd = sub("decide", "bounded treewidth or degeneracy of a language's graph class");
  decide_cmd->add_option("--cfg", cfg);
  decide_cmd->add_option("--lang", lang);
  decide_cmd->add_option("--property", property)
      ->check(CLI::IsMember({"treewidth", "degeneracy", "bounded-treewidth", "bounded-degeneracy"}));

  auto* enc = sub("encode", "compact binary encoding of a graph");
  enc->add_option("--graph", graph_file)->required();
  enc->add_option("--mode", mode)->check(CLI::IsMember({"sparse", "dense"}));
  enc->add_option("-o,--output", out_file);
  enc->add_flag("--anonymous", anonymous, "omit the name table");

  auto* dcd = sub("decode", "graph from an encoding");
  dcd->add_option("input", in_file)->required();
  dcd->add_option("--out", out_format)->check(CLI::IsMember({"dot", "json", "edges"}));

  auto* adj = sub("adjacent", "single pair query on an encoding");
  adj->add_option("input", in_file)->required();
  adj->add_option("u", u)->required();
  adj->add_option("v", v)->required();

  auto* cls = sub("classes", "all represented graphs of one order");
  cls->add_option("--order", order)->required()->check(CLI::Range(1, 6));
  cls->add_option("--lang", lang)->required();
  cls->add_option("--freq", freq);
  cls->add_option("--budget", budget);

  auto* st = sub("selftest", "acceptance suites");
  st->add_option("--suite", suites)->check(CLI::IsMember(std::vector<std::string>(suite_names().begin(), suite_names().end())));
  st->add_option("--probe", probe, "run the generic invariants on one language");
  st->add_option("--cases", cases, "randomized cases per invariant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*eval)
      return cmd_eval(global, lang, word, out_format);
    if (*chk)
      return cmd_check(global, lang, word, graph_file);
    if (*srch)
      return cmd_search(global, lang, graph_file, freq, uniform, budget, max_len);
    if (*build)
      return cmd_build(global, tag, graph_file, emit_cert);
    if (*dec)
      return cmd_decompose(global, lang, word);
    if (*decide_cmd)
      return cmd_decide(cfg, lang, property);
    if (*enc)
      return cmd_encode(global, graph_file, mode, out_file, anonymous);
    if (*dcd)
      return cmd_decode(global, in_file, out_format);
    if (*adj)
      return cmd_adjacent(global, in_file, u, v);
    if (*cls)
      return cmd_classes(global, order, lang, freq, budget);
    if (*st)
      return cmd_selftest(global, suites, probe, cases);
  } catch (const Error& e) {
    report(global, e);
    return e.kind() == ErrorKind::precondition ? exit_negative : exit_usage;
  } catch (const std::exception& e) {
    report(global, Error(ErrorKind::invalid_arguments, e.what()));
    return exit_usage;
  }
  return exit_usage;
}
