#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sieved/params.hpp"
#include "sieved/report.hpp"

namespace sieved::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// Rows indexed by n; every cell is already rendered.
struct Table {
  std::string kind;
  JacobiParams params;
  int N = 1;
  int n_max = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct TableRequest {
  std::string kind;  // verblunsky | psi | recurrence-u | eigenvalues
  JacobiParams params;
  int N = 1;
  int n_max = 10;
  std::string family = "sieved-ultra-1";  // recurrence-u only
  std::string variant = "corrected";     // recurrence-u only
};

const std::vector<std::string>& table_kinds();
Table build_table(const TableRequest& req);
std::string serialize(const Table& t, ReportFormat f);

/// Several reports in input order: a JSON array, one CSV header, or
/// concatenated text. A single report serializes as itself.
std::string serialize_many(const std::vector<CheckReport>& reports, ReportFormat f);

/// Full command line. Output goes to `out` (or --out), diagnostics to `err`.
/// SIEVED_<FLAG> environment variables supply defaults for the flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sieved::cli
