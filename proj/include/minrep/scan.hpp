#pragma once

#include "minrep/analysis.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace minrep {

// One row filter such as "verdict=noncongruence", "dim<=3" or "level>100".
// verdict only supports '='; dim and level accept =, <, <=, >, >=.
struct ScanFilter {
  enum class Field { Verdict, Dim, Level };
  enum class Op { Eq, Lt, Le, Gt, Ge };
  Field field;
  Op op;
  std::string value;

  bool accepts(const AnalysisRecord& rec) const;
};

// Throws ParseError.
ScanFilter parse_scan_filter(std::string_view text);

enum class ScanFormat { Csv, Jsonl };

struct ScanOptions {
  std::int64_t p_max = 0;
  std::int64_t q_max = 0;
  std::vector<ScanFilter> filters;
  ScanFormat format = ScanFormat::Csv;
  unsigned jobs = 1;
};

struct ScanCell {
  MinimalModel model;
  ModuleLabel label;
};

// Every acting label of every model V(p,q) with p odd, 3 <= p <= p_max,
// 2 <= q <= q_max, gcd(p,q) = 1, in ascending (p, q, m, n) order.
// Throws OutOfRange unless both bounds are >= 2.
std::vector<ScanCell> scan_cells(std::int64_t p_max, std::int64_t q_max);

// Calls fn(i) for every i in [0, count) on `jobs` threads. fn must only
// write to storage owned by index i.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

// Runs the scan and writes lines (header included for csv) in cell order.
void run_scan(const ScanOptions& options, const std::function<void(const std::string&)>& emit);

// Convenience wrapper that concatenates the emitted lines.
std::string scan_to_string(const ScanOptions& options);

}  // namespace minrep
