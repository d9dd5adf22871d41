#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sieved/params.hpp"

namespace sieved {

/// One measured quantity inside a suite. Informational details are recorded
/// but never affect the verdict.
struct CheckDetail {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool gating = true;
  std::string note;
};

/// Outcome of a verification suite. pass is true iff every gating detail is
/// within its tolerance; max_residual is the largest gating residual.
struct CheckReport {
  std::string suite;
  JacobiParams params;
  int N = 1;
  int n_max = 0;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
  int samples = 0;
  double max_residual = 0.0;
  bool pass = true;
  std::vector<CheckDetail> details;

  /// Gating check with the suite tolerance.
  void add(const std::string& name, double residual, const std::string& note = "");
  /// Gating check with its own tolerance.
  void add(const std::string& name, double residual, double tol, const std::string& note = "");
  /// Recorded only.
  void info(const std::string& name, double value, const std::string& note = "");
  /// Folds another report's details in, prefixing their names.
  void merge(const CheckReport& other, const std::string& prefix);
};

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& s);

std::string to_json(const CheckReport& r, int indent = 2);
std::string to_csv(const CheckReport& r);
std::string to_text(const CheckReport& r);
std::string serialize(const CheckReport& r, ReportFormat f);

/// Locale-independent shortest round-trip rendering of a double.
std::string format_double(double v);

}  // namespace sieved
