#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "sieved/dunkl.hpp"
#include "sieved/errors.hpp"
#include "sieved/jacobi.hpp"
#include "sieved/realline.hpp"

namespace sieved::cli {

namespace {

std::string num(double v) { return format_double(v); }
std::string num(int v) { return std::to_string(v); }

RecurrenceFamily parse_family(const std::string& s) {
  if (s == "generalized-ultra") return RecurrenceFamily::generalized_ultra;
  if (s == "sieved-ultra-1") return RecurrenceFamily::sieved_ultra_1;
  if (s == "sieved-ultra-2") return RecurrenceFamily::sieved_ultra_2;
  throw ArgumentError("unknown recurrence family '" + s + "' (generalized-ultra, sieved-ultra-1, sieved-ultra-2)");
}

FormulaVariant parse_variant(const std::string& s) {
  if (s == "corrected") return FormulaVariant::corrected;
  if (s == "printed") return FormulaVariant::printed;
  throw ArgumentError("unknown variant '" + s + "' (corrected, printed)");
}

void verblunsky_rows(const TableRequest& req, Table& t) {
  t.columns = {"n", "a_n"};
  for (int n = 0; n <= req.n_max; ++n) t.rows.push_back({num(n), num(sieved_verblunsky(req.params, req.N, n))});
}

void psi_rows(const TableRequest& req, Table& t) {
  t.columns = {"n", "case", "k", "j", "nu", "power_sign", "min_exp", "max_exp", "coefficients"};
  const SievedFamily fam(req.params, req.N, req.n_max);
  for (int n = 0; n <= req.n_max; ++n) {
    const auto d = psi_case(n, req.N);
    const LaurentPoly& f = fam.psi(n);
    std::string coeffs;
    for (int e = f.min_exp(); e <= f.max_exp(); ++e) {
      if (e != f.min_exp()) coeffs += ' ';
      coeffs += num(f.coeff(e).real());
    }
    t.rows.push_back({num(n), to_string(d.case_id), num(d.k), num(d.j), num(d.nu), num(d.power_sign),
                      num(f.min_exp()), num(f.max_exp()), coeffs});
  }
}

void recurrence_rows(const TableRequest& req, Table& t) {
  const RecurrenceFamily which = parse_family(req.family);
  const FormulaVariant variant = parse_variant(req.variant);
  const FamilyKind kind = which == RecurrenceFamily::sieved_ultra_2 ? FamilyKind::Q : FamilyKind::P;
  // Validates (alpha, beta, N) for this family before any work.
  special_recurrence_u(which, req.params, req.N, 0, variant);
  const SymmetricFamily fam(kind, req.params, req.N, req.n_max + 1);
  const auto measured = measured_u(fam);
  t.columns = {"n", "u_n", "measured"};
  for (int n = 0; n <= req.n_max; ++n) {
    t.rows.push_back({num(n), num(special_recurrence_u(which, req.params, req.N, n, variant)),
                      n >= 1 ? num(measured[static_cast<std::size_t>(n)]) : ""});
  }
}

void eigenvalue_rows(const TableRequest& req, Table& t) {
  const EigenvalueTable ev(req.params, req.N);
  t.columns = {"n", "mu_n", "lambda_n", "lambda_tilde_n", "Lambda_n", "Xi_n"};
  for (int n = 0; n <= req.n_max; ++n) {
    t.rows.push_back({num(n), num(ev.mu(n)), num(ev.lambda(n)), num(ev.lambda_tilde(n)), num(ev.Lambda(n)),
                      num(ev.Xi(n))});
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds{"verblunsky", "psi", "recurrence-u", "eigenvalues"};
  return kinds;
}

Table build_table(const TableRequest& req) {
  if (req.N < 1) throw ArgumentError("N must be >= 1");
  if (req.n_max < 0) throw ArgumentError("nmax must be >= 0");
  Table t;
  t.kind = req.kind;
  t.params = req.params;
  t.N = req.N;
  t.n_max = req.n_max;
  if (req.kind == "verblunsky") {
    verblunsky_rows(req, t);
  } else if (req.kind == "psi") {
    psi_rows(req, t);
  } else if (req.kind == "recurrence-u") {
    recurrence_rows(req, t);
  } else if (req.kind == "eigenvalues") {
    eigenvalue_rows(req, t);
  } else {
    throw ArgumentError("unknown table '" + req.kind + "'");
  }
  return t;
}

std::string serialize(const Table& t, ReportFormat f) {
  std::ostringstream os;
  switch (f) {
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["table"] = t.kind;
      j["params"] = {{"alpha", t.params.alpha}, {"beta", t.params.beta}, {"N", t.N}, {"nmax", t.n_max}};
      j["columns"] = t.columns;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
        j["rows"].push_back(r);
      }
      os << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::csv:
      for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
      }
      break;
    case ReportFormat::text: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << cells[i];
          if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << '\n';
      };
      os << t.kind << "  alpha=" << num(t.params.alpha) << " beta=" << num(t.params.beta) << " N=" << t.N << '\n';
      line(t.columns);
      for (const auto& row : t.rows) line(row);
      break;
    }
  }
  return os.str();
}

}  // namespace sieved::cli
