#include "langrep/selftest.hpp"

#include <cstdio>

int main() {
  langrep::SelftestOptions options;
  int failed = 0;
  int number = 0;
  for (std::string_view name : langrep::suite_names()) {
    auto r = langrep::run_suite(name, options);
    ++number;
    std::printf("criterion %2d %-22s %s  %8.2fs / %6.0fs  %zu checks%s%s\n", number, r.name.c_str(),
                r.passed() ? "PASS" : "FAIL", r.seconds, r.budget_seconds, r.checks,
                r.failure.empty() ? "" : "  first failure: ", r.failure.c_str());
    if (!r.exact)
      std::printf("             mismatch\n");
    else if (!r.within_budget())
      std::printf("             over time budget\n");
    std::fflush(stdout);
    failed += !r.passed();
  }
  return failed == 0 ? 0 : 1;
}
