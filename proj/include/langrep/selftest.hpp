#pragma once

#include "langrep/language.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langrep {

struct SelftestOptions {
  std::uint64_t seed = 20240601;
  std::size_t property_cases = 10'000; // per invariant
  std::size_t codec_random = 1'000;
  std::size_t codec_queries = 10'000;
  std::size_t table_order = 5;
};

struct SuiteResult {
  std::string name;
  bool exact = false;         // every check agreed
  double seconds = 0;
  double budget_seconds = 0;
  std::size_t checks = 0;
  std::string failure;        // first failing invariant or case, empty on success

  bool within_budget() const { return seconds <= budget_seconds; }
  bool passed() const { return exact && within_budget(); }
};

// In acceptance order: figure-vectors, example-families, universal-builders,
// characterizations-n5, negative-vector, properties, counterexamples,
// decision, codec, enumeration.
std::span<const std::string_view> suite_names();
SuiteResult run_suite(std::string_view name, const SelftestOptions& options);

// The language-agnostic invariants (symmetry, hereditarity, complement
// duality, boolean compatibility, reversal, twin insertion) on one language.
SuiteResult probe_language(const Language& l, const SelftestOptions& options);

} // namespace langrep
