#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqnorm/space.hpp"

namespace seqnorm {

/// One acceptance check: a named criterion with a pass/fail verdict and a
/// short detail string (worst ratio, failing cell, ...).
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// CSV with a mandatory header row, comma separator, 17 significant digits,
/// LF line endings. Deterministic byte-for-byte given identical inputs.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const;
  void write(const std::string& path) const;
  static std::string num(double v);

 private:
  std::string body_;
  std::size_t columns_ = 0;
};

struct ReportOptions {
  std::uint64_t seed = 42;
  std::string out_dir = "seqnorm-report";
  bool quick = false;  // trims the big sweeps (used by smoke tests)
};

/// Runs the full verification suite, writes one CSV artifact per experiment
/// plus summary.txt, and returns the per-criterion verdicts.
std::vector<CheckResult> report_all(const ReportOptions& options);

}  // namespace seqnorm
