#include "minrep/scan.hpp"

#include "minrep/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <thread>

namespace minrep {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

template <class A, class B>
bool compare_with(ScanFilter::Op op, const A& lhs, const B& rhs) {
  switch (op) {
    case ScanFilter::Op::Eq: return lhs == rhs;
    case ScanFilter::Op::Lt: return lhs < rhs;
    case ScanFilter::Op::Le: return lhs <= rhs;
    case ScanFilter::Op::Gt: return lhs > rhs;
    case ScanFilter::Op::Ge: return lhs >= rhs;
  }
  return false;
}

bool is_integer_text(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

constexpr std::size_t kBatch = 2048;

}  // namespace

bool ScanFilter::accepts(const AnalysisRecord& rec) const {
  switch (field) {
    case Field::Verdict: return lower(status_name(rec.verdict.status)) == value;
    case Field::Dim: return compare_with(op, rec.s, std::stoll(value));
    case Field::Level: return compare_with(op, rec.level.N, Integer(value));
  }
  return false;
}

ScanFilter parse_scan_filter(std::string_view text) {
  const auto at = text.find_first_of("<>=");
  if (at == std::string_view::npos) {
    throw error(errc::ParseError, "filter '" + std::string(text) + "' has no comparison");
  }
  const std::string key = lower(text.substr(0, at));
  std::string_view rest = text.substr(at);
  ScanFilter f{};
  if (rest.substr(0, 2) == "<=") {
    f.op = ScanFilter::Op::Le;
    rest.remove_prefix(2);
  } else if (rest.substr(0, 2) == ">=") {
    f.op = ScanFilter::Op::Ge;
    rest.remove_prefix(2);
  } else if (rest[0] == '<') {
    f.op = ScanFilter::Op::Lt;
    rest.remove_prefix(1);
  } else if (rest[0] == '>') {
    f.op = ScanFilter::Op::Gt;
    rest.remove_prefix(1);
  } else {
    f.op = ScanFilter::Op::Eq;
    rest.remove_prefix(rest.substr(0, 2) == "==" ? 2 : 1);
  }
  f.value = lower(rest);
  if (key == "verdict") {
    f.field = ScanFilter::Field::Verdict;
    const bool known = f.value == "congruence" || f.value == "noncongruence" || f.value == "unknown";
    if (f.op != ScanFilter::Op::Eq || !known) {
      throw error(errc::ParseError, "verdict filter must be verdict=congruence|noncongruence|unknown");
    }
  } else if (key == "dim" || key == "level") {
    f.field = key == "dim" ? ScanFilter::Field::Dim : ScanFilter::Field::Level;
    if (!is_integer_text(f.value)) {
      throw error(errc::ParseError, "filter '" + std::string(text) + "' needs an integer");
    }
  } else {
    throw error(errc::ParseError, "unknown filter field '" + key + "'");
  }
  return f;
}

std::vector<ScanCell> scan_cells(std::int64_t p_max, std::int64_t q_max) {
  if (p_max < 2 || q_max < 2) {
    throw error(errc::OutOfRange, "scan bounds must be at least 2");
  }
  std::vector<ScanCell> cells;
  for (std::int64_t p = 3; p <= p_max; p += 2) {
    for (std::int64_t q = 2; q <= q_max; ++q) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      const MinimalModel model = validate_model(p, q);
      for (const auto& label : acting_labels(model)) {
        cells.push_back({model, label});
      }
    }
  }
  return cells;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

void run_scan(const ScanOptions& options, const std::function<void(const std::string&)>& emit) {
  const std::vector<ScanCell> cells = scan_cells(options.p_max, options.q_max);
  if (options.format == ScanFormat::Csv) {
    emit(csv_header());
  }
  std::vector<std::string> lines;
  for (std::size_t start = 0; start < cells.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, cells.size() - start);
    lines.assign(count, std::string());
    parallel_for(count, options.jobs, [&](std::size_t i) {
      const ScanCell& cell = cells[start + i];
      const AnalysisRecord rec = analyze(cell.model, cell.label);
      for (const auto& f : options.filters) {
        if (!f.accepts(rec)) {
          return;
        }
      }
      lines[i] = options.format == ScanFormat::Csv ? to_csv_row(rec) : to_json_line(rec);
    });
    for (const auto& line : lines) {
      if (!line.empty()) {
        emit(line);
      }
    }
  }
}

std::string scan_to_string(const ScanOptions& options) {
  std::string out;
  run_scan(options, [&](const std::string& line) {
    out += line;
    out += '\n';
  });
  return out;
}

}  // namespace minrep
