#include "sieved/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sieved/errors.hpp"

namespace sieved {

cplx ipow(cplx z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  cplx result = 1.0;
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

LaurentPoly::LaurentPoly(cplx constant) {
  if (constant != cplx(0.0)) terms_.push_back({0, constant});
}

LaurentPoly::LaurentPoly(const std::map<int, cplx>& coeffs) {
  terms_.reserve(coeffs.size());
  for (const auto& [e, c] : coeffs) {
    if (c != cplx(0.0)) terms_.push_back({e, c});
  }
}

LaurentPoly::LaurentPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {
  normalize();
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == cplx(0.0); });
  terms_ = std::move(merged);
}

LaurentPoly LaurentPoly::monomial(int exp, cplx coeff) {
  return LaurentPoly(std::vector<Term>{{exp, coeff}});
}

LaurentPoly LaurentPoly::from_dense(int lo, const std::vector<cplx>& coeffs) {
  std::vector<Term> t;
  t.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.push_back({lo + static_cast<int>(i), coeffs[i]});
  return LaurentPoly(std::move(t));
}

cplx LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0.0;
}

double LaurentPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

cplx LaurentPoly::operator()(cplx z) const {
  if (terms_.empty()) return 0.0;
  if (z == cplx(0.0)) {
    if (min_exp() < 0) throw DomainError("LaurentPoly: evaluation at z = 0 with negative exponents");
    return coeff(0);
  }
  // Nonnegative part: Horner from the top exponent down to 0.
  cplx pos = 0.0;
  int prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend() && it->exp >= 0; ++it) {
    if (prev >= 0) pos *= ipow(z, prev - it->exp);
    pos += it->coeff;
    prev = it->exp;
  }
  if (prev > 0) pos *= ipow(z, prev);

  // Negative part: Horner in w = 1/z from the most negative exponent up.
  cplx neg = 0.0;
  const cplx w = 1.0 / z;
  int prev_neg = 0;
  bool any_neg = false;
  for (const auto& t : terms_) {
    if (t.exp >= 0) break;
    if (any_neg) neg *= ipow(w, t.exp - prev_neg);
    neg += t.coeff;
    prev_neg = t.exp;
    any_neg = true;
  }
  if (any_neg) neg *= ipow(w, -prev_neg);
  return pos + neg;
}

LaurentPoly LaurentPoly::derivative() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (term.exp != 0) t.push_back({term.exp - 1, static_cast<double>(term.exp) * term.coeff});
  }
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::derivative(int order) const {
  LaurentPoly p = *this;
  for (int i = 0; i < order; ++i) p = p.derivative();
  return p;
}

LaurentPoly LaurentPoly::substitute(const GroupElement& g) const {
  switch (g.kind()) {
    case GroupElement::Kind::identity:
      return *this;
    case GroupElement::Kind::rotation: {
      std::vector<Term> t;
      t.reserve(terms_.size());
      for (const auto& term : terms_) t.push_back({term.exp, term.coeff * root_of_unity(g.order(), 1LL * g.index() * term.exp)});
      return LaurentPoly(std::move(t));
    }
    case GroupElement::Kind::reflection: {
      std::vector<Term> t;
      t.reserve(terms_.size());
      for (const auto& term : terms_) t.push_back({-term.exp, term.coeff * root_of_unity(g.order(), 1LL * g.index() * term.exp)});
      return LaurentPoly(std::move(t));
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::substitute_power(int s) const {
  if (s == 0) throw ArgumentError("substitute_power: exponent must be nonzero");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.exp * s, term.coeff});
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::scale_argument(cplx c) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.exp, term.coeff * ipow(c, term.exp)});
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::reflect() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::shift(int k) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.exp += k;
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::cleanup(double threshold) const {
  std::vector<Term> t;
  for (const auto& term : terms_) {
    if (std::abs(term.coeff) > threshold) t.push_back(term);
  }
  return LaurentPoly(std::move(t));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_.reserve(terms_.size() + o.terms_.size());
  for (const auto& t : o.terms_) terms_.push_back({t.exp, -t.coeff});
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.min_exp() + b.min_exp();
  std::vector<cplx> dense(static_cast<std::size_t>(a.span() + b.span() + 1), 0.0);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) dense[static_cast<std::size_t>(x.exp + y.exp - lo)] += x.coeff * y.coeff;
  }
  return LaurentPoly::from_dense(lo, dense);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

LaurentPoly x_of_z() { return LaurentPoly(std::map<int, cplx>{{-1, 1.0}, {1, 1.0}}); }
LaurentPoly phi_of_z() { return LaurentPoly(std::map<int, cplx>{{-1, -1.0}, {1, 1.0}}); }

bool is_symmetric(const LaurentPoly& p, double tol) {
  const double scale = std::max(1.0, p.max_abs_coeff());
  for (const auto& t : p.terms()) {
    if (std::abs(t.coeff - p.coeff(-t.exp)) > tol * scale) return false;
  }
  return true;
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<cplx> to_x_basis(const LaurentPoly& p, double tol) {
  if (!is_symmetric(p, tol)) throw SymmetryError("to_x_basis: input is not invariant under z -> 1/z");
  if (p.is_zero()) return {0.0};
  const int degree = std::max(p.max_exp(), -p.min_exp());
  // Work on the nonnegative half: c_k for k = 0..degree.
  std::vector<cplx> half(static_cast<std::size_t>(degree + 1));
  for (int k = 0; k <= degree; ++k) half[k] = p.coeff(k);
  std::vector<cplx> x(static_cast<std::size_t>(degree + 1), 0.0);
  // (z + 1/z)^k = sum_i C(k, i) z^{k - 2i}; eliminate the top pair each step.
  for (int k = degree; k >= 0; --k) {
    const cplx c = half[k];
    x[k] = c;
    if (c == cplx(0.0)) continue;
    for (int i = 1; 2 * i <= k; ++i) half[k - 2 * i] -= c * binomial(k, i);
  }
  return x;
}

LaurentPoly from_x_basis(const std::vector<cplx>& x_coeffs) {
  LaurentPoly result;
  LaurentPoly power(1.0);
  const LaurentPoly x = x_of_z();
  for (std::size_t k = 0; k < x_coeffs.size(); ++k) {
    if (k > 0) power = power * x;
    result += power * x_coeffs[k];
  }
  return result;
}

DivisionResult divide(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw ArgumentError("divide: division by the zero polynomial");
  if (p.is_zero()) return {};
  // p = z^{pl} P(z), d = z^{dl} D(z) with P, D ordinary polynomials.
  const int pl = p.min_exp();
  const int dl = d.min_exp();
  std::vector<cplx> num(static_cast<std::size_t>(p.span() + 1), 0.0);
  for (const auto& t : p.terms()) num[t.exp - pl] = t.coeff;
  std::vector<cplx> den(static_cast<std::size_t>(d.span() + 1), 0.0);
  for (const auto& t : d.terms()) den[t.exp - dl] = t.coeff;

  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  if (nn < dn) return {LaurentPoly(), p};
  std::vector<cplx> quot(static_cast<std::size_t>(nn - dn + 1), 0.0);
  for (int k = nn - dn; k >= 0; --k) {
    const cplx c = num[k + dn] / den[dn];
    quot[k] = c;
    for (int i = 0; i <= dn; ++i) num[k + i] -= c * den[i];
    num[k + dn] = 0.0;
  }
  num.resize(static_cast<std::size_t>(dn));
  return {LaurentPoly::from_dense(pl - dl, quot), LaurentPoly::from_dense(pl, num)};
}

void SamplePlan::validate() const {
  if (count < 1) throw PlanError("SamplePlan: count must be positive");
  if (!(radius > 0.0)) throw PlanError("SamplePlan: radius must be positive");
  if (sieve_order < 1) throw PlanError("SamplePlan: sieve order must be >= 1");
  const int poles = 2 * sieve_order;
  for (int j = 0; j < count; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / count + phase_offset;
    const cplx z = std::polar(radius, theta);
    for (int k = 0; k < poles; ++k) {
      const cplx pole = std::polar(1.0, std::numbers::pi * k / sieve_order);
      if (std::abs(z - pole) < excluded_pole_tolerance) {
        throw PlanError("SamplePlan: sample " + std::to_string(j) + " lies within tolerance of a pole");
      }
    }
  }
}

std::vector<cplx> SamplePlan::points() const {
  validate();
  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    z.push_back(std::polar(radius, 2.0 * std::numbers::pi * j / count + phase_offset));
  }
  return z;
}

SamplePlan SamplePlan::for_span(int span, int N, double radius) {
  SamplePlan plan;
  plan.count = 2 * std::max(span, 0) + 17;
  plan.radius = radius;
  plan.sieve_order = N;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      plan.validate();
      return plan;
    } catch (const PlanError&) {
      ++plan.count;
    }
  }
  throw PlanError("SamplePlan::for_span: no valid plan found");
}

double default_tolerance(int span) { return 1e-9 * (1.0 + span); }

double max_residual_on_samples(const SampledFunction& f, const SampledFunction& g, const SamplePlan& plan) {
  double diff = 0.0;
  double scale = 1.0;
  for (const cplx z : plan.points()) {
    const cplx gz = g(z);
    diff = std::max(diff, std::abs(f(z) - gz));
    scale = std::max(scale, std::abs(gz));
  }
  return diff / scale;
}

}  // namespace sieved
