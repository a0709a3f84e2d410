#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace minrep {

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, for the log

  bool ok() const { return failed == 0; }
};

inline constexpr std::int64_t kDefaultSelftestGrid = 30;

// Suites: "monic", "lemmas", "ratios", "qseries", or "all". Grid-based
// suites sweep coprime p, q <= grid; the qseries suite works to the given
// truncation order. Throws InvalidCase for an unknown suite name.
std::vector<SuiteReport> run_selftest(std::string_view suite, std::int64_t grid,
                                      std::size_t order);

SuiteReport selftest_monic(std::int64_t grid);
SuiteReport selftest_lemmas(std::int64_t grid);
SuiteReport selftest_ratios(std::int64_t grid);
SuiteReport selftest_qseries(std::size_t order);

}  // namespace minrep
