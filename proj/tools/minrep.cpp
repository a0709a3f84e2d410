#include "minrep/analysis.hpp"
#include "minrep/error.hpp"
#include "minrep/operators.hpp"
#include "minrep/scan.hpp"
#include "minrep/selftest.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <thread>
#include <utility>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int report(const minrep::error& e, int code) {
  std::cerr << "minrep: " << e.what() << '\n';
  return code;
}

struct AnalyzeArgs {
  std::int64_t p = 0, q = 0, m = 0, n = 0;
  std::string format = "json";
};

int run_analyze(const AnalyzeArgs& a) {
  std::int64_t p = a.p, q = a.q, m = a.m, n = a.n;
  if (p % 2 == 0) {
    std::swap(p, q);
    std::swap(m, n);
  }
  const minrep::MinimalModel model = minrep::validate_model(p, q);
  const minrep::ModuleLabel label = minrep::canonical_label(model, m, n);
  const minrep::AnalysisRecord rec = minrep::analyze(model, label);
  std::cout << (a.format == "table" ? minrep::to_table(rec) : minrep::to_json_pretty(rec) + "\n");
  return kExitOk;
}

struct ScanArgs {
  std::int64_t p_max = 0, q_max = 0;
  std::vector<std::string> filters;
  std::string format = "csv";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

int run_scan(const ScanArgs& a) {
  minrep::ScanOptions opts;
  opts.p_max = a.p_max;
  opts.q_max = a.q_max;
  opts.format = a.format == "jsonl" ? minrep::ScanFormat::Jsonl : minrep::ScanFormat::Csv;
  opts.jobs = a.jobs;
  for (const auto& f : a.filters) {
    opts.filters.push_back(minrep::parse_scan_filter(f));
  }
  minrep::run_scan(opts, [](const std::string& line) { std::cout << line << '\n'; });
  return kExitOk;
}

struct QSeriesArgs {
  std::string expr = "1";
  std::string series;
  std::optional<std::size_t> order;
};

int run_qseries(const QSeriesArgs& a) {
  const std::size_t order = a.order ? *a.order : minrep::truncation_from_env();
  const minrep::ModularForm f = minrep::parse_builtin_series(a.series, order);
  const minrep::ModularOperator op = minrep::parse_operator(a.expr, order);
  const auto out = minrep::apply(op, std::vector<minrep::ModularForm>{f});
  std::cout << out.front().series.str() << '\n';
  return kExitOk;
}

struct SelftestArgs {
  std::string suite = "all";
  std::int64_t grid = minrep::kDefaultSelftestGrid;
};

int run_selftest(const SelftestArgs& a) {
  const auto reports = minrep::run_selftest(a.suite, a.grid, minrep::truncation_from_env());
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.name << ": " << r.checked - r.failed << "/" << r.checked << " passed\n";
    for (const auto& f : r.failures) {
      std::cout << "  FAIL " << f << '\n';
    }
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data of Virasoro minimal model intertwining operators"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Full record for one module L(m,n) of V(p,q)");
  cmd_analyze->add_option("--p", analyze.p, "first model parameter")->required();
  cmd_analyze->add_option("--q", analyze.q, "second model parameter")->required();
  cmd_analyze->add_option("--m", analyze.m, "Kac label m")->required();
  cmd_analyze->add_option("--n", analyze.n, "Kac label n")->required();
  cmd_analyze->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "table"}));

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "Records for every acting label on a grid");
  cmd_scan->add_option("--p-max", scan.p_max)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  cmd_scan->add_option("--q-max", scan.q_max)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  cmd_scan->add_option("--filter", scan.filters, "verdict=..., dim<=..., level>=...");
  cmd_scan->add_option("--format", scan.format)->check(CLI::IsMember({"csv", "jsonl"}));
  cmd_scan->add_option("--jobs", scan.jobs)->check(CLI::PositiveNumber);

  QSeriesArgs qs;
  auto* cmd_qseries = app.add_subcommand("qseries", "Apply a differential operator to a builtin series");
  cmd_qseries->add_option("--expr", qs.expr, "e.g. \"G4*D^2 - 1/3*G6\"");
  cmd_qseries->add_option("--apply", qs.series, "eta, eta^w or G<k>")->required();
  cmd_qseries->add_option("--order", qs.order, "truncation order T");

  SelftestArgs st;
  auto* cmd_selftest = app.add_subcommand("selftest", "Run the built-in verification suites");
  cmd_selftest->add_option("--suite", st.suite)
      ->check(CLI::IsMember({"all", "monic", "lemmas", "ratios", "qseries"}));
  cmd_selftest->add_option("--grid", st.grid)->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(analyze);
    if (cmd_scan->parsed()) return run_scan(scan);
    if (cmd_qseries->parsed()) return run_qseries(qs);
    if (cmd_selftest->parsed()) return run_selftest(st);
  } catch (const minrep::error& e) {
    switch (e.code()) {
      case minrep::errc::ParseError:
        // Outside qseries a parse failure means a bad flag value.
        return report(e, cmd_qseries->parsed() ? kExitParse : kExitUsage);
      case minrep::errc::InhomogeneousOperator:
      case minrep::errc::WeightMismatch:
        return report(e, kExitParse);
      default:
        return report(e, kExitValidation);
    }
  }
  return kExitUsage;
}
