#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sptkit/apfloat.hpp"
#include "sptkit/bounds.hpp"
#include "sptkit/exactform.hpp"
#include "sptkit/parallel.hpp"
#include "sptkit/qseries.hpp"
#include "sptkit/trace.hpp"
#include "sptkit/verify.hpp"

namespace {

using nlohmann::json;
using namespace sptkit;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecision = 3 };

struct RunConfig {
  long precision_bits = 0;  // 0: pick per n
  double tolerance = 1e-6;
  unsigned threads = 0;
  std::string format;  // empty: the command's own default
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long precision_for(const RunConfig& cfg, long n) {
  return cfg.precision_bits > 0 ? cfg.precision_bits : std::max(128L, default_precision(n));
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw UsageError("range must look like a..b");
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const long lo = std::stol(lo_text, &used);
    if (used != lo_text.size()) throw UsageError("bad range start");
    const long hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) throw UsageError("bad range end");
    if (lo < 1 || hi < lo) throw UsageError("range must satisfy 1 <= a <= b");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "'");
  }
}

void print_rows(const RunConfig& cfg, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      out.push_back(obj);
    }
    std::cout << json{{"schema", "sptkit/1"}, {"rows", out}}.dump(2) << "\n";
    return;
  }
  const char* sep = cfg.format == "csv" ? "," : " ";
  auto join = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += sep;
      // Text output marks undefined cells with "-".
      line += cells[i].empty() && cfg.format == "text" ? "-" : cells[i];
    }
    return line;
  };
  std::cout << join(header) << "\n";
  for (const auto& row : rows) std::cout << join(row) << "\n";
}

int cmd_value(const RunConfig& cfg, const std::string& kind, long n) {
  mpz_class value;
  if (kind == "p") {
    if (n < 0) throw UsageError("p(n) needs n >= 0");
    value = partition_p(n);
  } else if (kind == "spt") {
    if (n < 1) throw UsageError("spt(n) needs n >= 1");
    value = spt(n);
  } else {
    if (n < 1) throw UsageError("traceS_exact(n) needs n >= 1");
    value = trace_S_exact(n);
  }
  if (cfg.format == "json") {
    std::cout << json{{"schema", "sptkit/1"}, {"kind", kind}, {"n", n}, {"value", value.get_str()}}.dump(2)
              << "\n";
  } else {
    std::cout << value.get_str() << "\n";
  }
  return kOk;
}

int cmd_trace(const RunConfig& cfg, long n) {
  if (n < 1) throw UsageError("trace needs n >= 1");
  const TraceResult r = trace_S(n, cfg.tolerance, cfg.precision_bits);
  const bool rounds = r.residual < 0.5 && r.success;
  const std::vector<std::string> header = {"n", "value", "tail_bound", "exact", "residual", "rounds_to_exact"};
  std::ostringstream tail;
  tail << r.tail_bound;
  std::ostringstream resid;
  resid << r.residual;
  const std::vector<std::string> row = {std::to_string(n), r.value.to_string(30), tail.str(),
                                        r.exact.get_str(), resid.str(), rounds ? "true" : "false"};
  if (cfg.format == "json") {
    json out{{"schema", "sptkit/1"},  {"n", n},
             {"value", r.value.to_string(30)}, {"tail_bound", r.tail_bound},
             {"exact", r.exact.get_str()},     {"residual", r.residual},
             {"rounds_to_exact", rounds},      {"truncation", r.truncation},
             {"forms", r.forms},               {"precision_bits", r.precision}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_rows(cfg, header, {row});
  }
  return rounds ? kOk : kVerifyFailed;
}

int cmd_verify(const RunConfig& cfg, const std::string& which) {
  std::vector<ConjectureReport> reports;
  if (which == "all") {
    reports = verify_all();
  } else {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(which, &used);
      if (used != which.size()) id = 0;
    } catch (const std::logic_error&) {
    }
    if (id < 1 || id > 6) throw UsageError("conjecture must be 1..6 or all");
    reports.push_back(verify_chen(id));
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed;

  if (cfg.format == "json") {
    if (reports.size() == 1) {
      std::cout << to_json(reports.front(), cfg.timing).dump(2) << "\n";
    } else {
      json out{{"schema", "sptkit/1"}, {"status", all_pass ? "pass" : "fail"}, {"reports", json::array()}};
      for (const auto& r : reports) out["reports"].push_back(to_json(r, cfg.timing));
      std::cout << out.dump(2) << "\n";
    }
  } else {
    std::vector<std::string> header = {"conjecture", "status", "threshold", "claimed", "scan_lo", "scan_hi", "failures"};
    if (cfg.timing) header.push_back("runtime_seconds");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
      const auto& t = r.analytic_threshold;
      std::vector<std::string> row = {
          std::to_string(r.conjecture_id), r.passed ? "pass" : "fail",
          t ? std::to_string(t->verified_threshold) : "",
          t && t->claimed_threshold ? std::to_string(*t->claimed_threshold) : "",
          std::to_string(r.exact_scan_lo), std::to_string(r.exact_scan_hi), std::to_string(r.failures.size())};
      if (cfg.timing) {
        std::ostringstream s;
        s << r.runtime_seconds;
        row.push_back(s.str());
      }
      rows.push_back(row);
    }
    print_rows(cfg, header, rows);
  }
  return all_pass ? kOk : kVerifyFailed;
}

std::string cell(const std::optional<Apfloat>& x) { return x ? x->to_string(15) : ""; }

int cmd_table(const RunConfig& cfg, const std::string& kind, const std::string& range) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (kind == "bounds") {
    const auto [lo, hi] = parse_range(range.empty() ? "1..10" : range);
    header = {"n", "lambda", "q", "M", "g", "F_lower", "F_upper", "spt2_lower", "spt2_upper"};
    for (long n = lo; n <= hi; ++n) {
      const BoundsProfile b = bounds_profile(n, precision_for(cfg, n));
      rows.push_back({std::to_string(n), b.lambda.to_string(15), b.q.to_string(15), b.M.to_string(15),
                      cell(b.g), cell(b.F_lower), cell(b.F_upper), cell(b.spt2_lower), cell(b.spt2_upper)});
    }
  } else if (kind == "thresholds") {
    if (!range.empty()) throw UsageError("table thresholds takes no range");
    header = {"predicate", "claimed", "verified", "scan_floor", "scan_ceiling", "matches_claim"};
    for (const ThresholdRecord& r : reproduce_thresholds()) {
      rows.push_back({r.predicate_name, r.claimed_threshold ? std::to_string(*r.claimed_threshold) : "",
                      std::to_string(r.verified_threshold), std::to_string(r.scan_floor),
                      std::to_string(r.scan_ceiling), r.matches_claim() ? "true" : "false"});
    }
  } else {
    if (!range.empty()) throw UsageError("table Ca takes no range");
    header = {"a", "C_a"};
    for (const CaEntry& e : c_a_table()) rows.push_back({std::to_string(e.a), e.rounded});
  }
  print_rows(cfg, header, rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact values, singular-moduli traces, effective bounds and conjecture checks for spt(n)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--prec", cfg.precision_bits, "Working precision in bits (default: chosen from n)")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--tolerance", cfg.tolerance, "Error budget for trace")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--timing", cfg.timing, "Include runtimes in reports");

  std::string kind;
  long n = 0;
  auto* value = app.add_subcommand("value", "Print an exact integer");
  value->add_option("kind", kind, "p, spt or traceS_exact")
      ->required()
      ->check(CLI::IsMember({"p", "spt", "traceS_exact"}));
  value->add_option("n", n, "Index")->required();

  auto* trace = app.add_subcommand("trace", "Evaluate S(n) numerically");
  trace->add_option("n", n, "Index")->required();

  std::string which;
  auto* verify = app.add_subcommand("verify", "Check one conjecture (1..6) or all");
  verify->add_option("conjecture", which, "1..6 or all")->required();

  std::string table_kind;
  std::string range;
  auto* table = app.add_subcommand("table", "Print a table");
  table->add_option("kind", table_kind, "bounds, thresholds or Ca")
      ->required()
      ->check(CLI::IsMember({"bounds", "thresholds", "Ca"}));
  table->add_option("range", range, "a..b (bounds only)");

  for (auto* sub : {value, trace, verify, table}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (cfg.format.empty()) {
    cfg.format = value->parsed() ? "text" : table->parsed() ? "csv" : "json";
  }
  set_thread_count(cfg.threads);
  try {
    if (value->parsed()) return cmd_value(cfg, kind, n);
    if (trace->parsed()) return cmd_trace(cfg, n);
    if (verify->parsed()) return cmd_verify(cfg, which);
    return cmd_table(cfg, table_kind, range);
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return kPrecision;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
