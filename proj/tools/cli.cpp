#include "cli.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "sieved/errors.hpp"
#include "sieved/verification.hpp"

namespace sieved::cli {

namespace {

struct Common {
  double alpha = 0.0;
  double beta = 0.0;
  int N = 1;
  int n_max = -1;  // per-command default
  int samples = 0;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string out;
  int workers = 1;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--alpha", c.alpha, "Jacobi parameter alpha")->envname("SIEVED_ALPHA");
  app->add_option("--beta", c.beta, "Jacobi parameter beta")->envname("SIEVED_BETA");
  app->add_option("--N", c.N, "sieve order N >= 1")->envname("SIEVED_N");
  app->add_option("--nmax", c.n_max, "largest index n")->envname("SIEVED_NMAX");
  app->add_option("--samples", c.samples, "samples per identity (default 2*span+17)")->envname("SIEVED_SAMPLES");
  app->add_option("--tol", c.tol, "residual tolerance")->envname("SIEVED_TOL");
  app->add_option("--seed", c.seed, "panel seed")->envname("SIEVED_SEED");
  app->add_option("--format", c.format, "json | csv | text")
      ->envname("SIEVED_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", c.out, "write to this file instead of stdout")->envname("SIEVED_OUT");
  app->add_option("--workers", c.workers, "suites run concurrently")->envname("SIEVED_WORKERS");
}

void validate_common(const Common& c) {
  if (c.N < 1) throw ArgumentError("--N must be >= 1");
  if (c.n_max < 0) throw ArgumentError("--nmax must be >= 0");
  if (c.samples < 0) throw ArgumentError("--samples must be >= 1");
  if (!(c.tol > 0.0)) throw ArgumentError("--tol must be positive");
  if (c.workers < 1) throw ArgumentError("--workers must be >= 1");
  if (!std::isfinite(c.alpha) || !std::isfinite(c.beta)) throw ArgumentError("alpha and beta must be finite");
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ArgumentError("cannot open '" + c.out + "' for writing");
  f << text;
}

std::vector<CheckReport> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg, int workers) {
  std::vector<CheckReport> reports(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) {
      try {
        reports[i] = run_suite(names[i], cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), names.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // Report the first error in suite order, independent of scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

}  // namespace

std::string serialize_many(const std::vector<CheckReport>& reports, ReportFormat f) {
  if (reports.size() == 1) return serialize(reports.front(), f);
  std::string s;
  switch (f) {
    case ReportFormat::json:
      s = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string one = to_json(reports[i]);
        one.pop_back();  // trailing newline
        s += one + (i + 1 < reports.size() ? ",\n" : "\n");
      }
      s += "]\n";
      break;
    case ReportFormat::csv:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const std::string one = to_csv(reports[i]);
        s += i == 0 ? one : one.substr(one.find('\n') + 1);
      }
      break;
    case ReportFormat::text:
      for (std::size_t i = 0; i < reports.size(); ++i) s += (i ? "\n" : "") + to_text(reports[i]);
      break;
  }
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sieved Jacobi polynomials: tables and identity checks"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> suites;
  CLI::App* check = app.add_subcommand("check", "run verification suites (exit 0 iff all pass)");
  std::string suite_help = "suites, or 'all':";
  for (const auto& s : suite_names()) suite_help += " " + s;
  check->add_option("suite", suites, suite_help)->required();
  add_common(check, common);

  std::string table_kind;
  std::string family = "sieved-ultra-1";
  std::string variant = "corrected";
  CLI::App* table = app.add_subcommand("table", "emit a table indexed by n");
  table->add_option("kind", table_kind, "verblunsky | psi | recurrence-u | eigenvalues")
      ->required()
      ->check(CLI::IsMember(table_kinds()));
  table->add_option("--family", family, "recurrence-u: generalized-ultra | sieved-ultra-1 | sieved-ultra-2")
      ->envname("SIEVED_FAMILY");
  table->add_option("--variant", variant, "recurrence-u: corrected | printed")->envname("SIEVED_VARIANT");
  add_common(table, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const ReportFormat fmt = parse_format(common.format);
    if (check->parsed()) {
      if (common.n_max < 0) common.n_max = 40;
      validate_common(common);
      std::vector<std::string> names;
      for (const auto& s : suites) {
        if (s == "all") {
          names.insert(names.end(), suite_names().begin(), suite_names().end());
        } else if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
          throw ArgumentError("unknown suite '" + s + "'");
        } else {
          names.push_back(s);
        }
      }
      SuiteConfig cfg;
      cfg.params = {common.alpha, common.beta};
      cfg.N = common.N;
      cfg.n_max = common.n_max;
      cfg.samples = common.samples;
      cfg.tolerance = common.tol;
      cfg.seed = common.seed;
      const auto reports = run_suites(names, cfg, common.workers);
      emit(serialize_many(reports, fmt), common, out);
      const bool pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
      return pass ? kExitPass : kExitFail;
    }
    if (common.n_max < 0) common.n_max = 10;
    validate_common(common);
    TableRequest req;
    req.kind = table_kind;
    req.params = {common.alpha, common.beta};
    req.N = common.N;
    req.n_max = common.n_max;
    req.family = family;
    req.variant = variant;
    emit(serialize(build_table(req), fmt), common, out);
    return kExitPass;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidityError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const PlanError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace sieved::cli
