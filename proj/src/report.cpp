#include "sieved/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "sieved/errors.hpp"

namespace sieved {

namespace {

void absorb(CheckReport& r, const CheckDetail& d) {
  r.details.push_back(d);
  if (!d.gating) return;
  // NaN counts as a failure.
  if (!(d.residual <= d.tolerance)) r.pass = false;
  if (std::isnan(d.residual) || d.residual > r.max_residual) r.max_residual = d.residual;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void CheckReport::add(const std::string& name, double residual, const std::string& note) {
  add(name, residual, tolerance, note);
}

void CheckReport::add(const std::string& name, double residual, double tol, const std::string& note) {
  absorb(*this, CheckDetail{name, residual, tol, residual <= tol, true, note});
}

void CheckReport::info(const std::string& name, double value, const std::string& note) {
  absorb(*this, CheckDetail{name, value, 0.0, true, false, note});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto d : other.details) {
    d.name = prefix + d.name;
    absorb(*this, d);
  }
  samples = std::max(samples, other.samples);
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw ArgumentError("unknown output format '" + s + "' (json, csv, text)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // no "-0" in tables
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_json(const CheckReport& r, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = {{"alpha", r.params.alpha}, {"beta", r.params.beta}, {"N", r.N}, {"nmax", r.n_max}};
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["samples"] = r.samples;
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  auto details = nlohmann::ordered_json::array();
  for (const auto& d : r.details) {
    nlohmann::ordered_json e;
    e["name"] = d.name;
    e["residual"] = d.residual;
    e["tolerance"] = d.tolerance;
    e["pass"] = d.pass;
    e["gating"] = d.gating;
    if (!d.note.empty()) e["note"] = d.note;
    details.push_back(std::move(e));
  }
  j["details"] = std::move(details);
  return j.dump(indent) + "\n";
}

std::string to_csv(const CheckReport& r) {
  std::ostringstream os;
  os << "suite,alpha,beta,N,nmax,seed,check,residual,tolerance,pass,gating,note\n";
  for (const auto& d : r.details) {
    os << csv_escape(r.suite) << ',' << format_double(r.params.alpha) << ',' << format_double(r.params.beta) << ','
       << r.N << ',' << r.n_max << ',' << r.seed << ',' << csv_escape(d.name) << ',' << format_double(d.residual)
       << ',' << format_double(d.tolerance) << ',' << (d.pass ? "true" : "false") << ','
       << (d.gating ? "true" : "false") << ',' << csv_escape(d.note) << '\n';
  }
  return os.str();
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.suite << " alpha=" << format_double(r.params.alpha) << " beta=" << format_double(r.params.beta)
     << " N=" << r.N << " nmax=" << r.n_max << " seed=" << r.seed << "\n";
  for (const auto& d : r.details) {
    os << "  " << (d.gating ? (d.pass ? "ok  " : "FAIL") : "info") << "  " << d.name << "  "
       << format_double(d.residual);
    if (d.gating) os << " <= " << format_double(d.tolerance);
    if (!d.note.empty()) os << "  (" << d.note << ")";
    os << "\n";
  }
  os << (r.pass ? "PASS" : "FAIL") << " max_residual=" << format_double(r.max_residual)
     << " tolerance=" << format_double(r.tolerance) << "\n";
  return os.str();
}

std::string serialize(const CheckReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::json:
      return to_json(r);
    case ReportFormat::csv:
      return to_csv(r);
    case ReportFormat::text:
      return to_text(r);
  }
  return {};
}

}  // namespace sieved
