#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "sieved/group.hpp"

namespace sieved {

using cplx = std::complex<double>;

/// Finite Laurent polynomial sum_k c_k z^k with complex double coefficients.
///
/// Terms are kept sorted by exponent. Coefficients that are exactly zero are
/// dropped after every operation; approximate pruning only happens through
/// cleanup() with an explicit threshold.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    cplx coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(cplx constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(double constant) : LaurentPoly(cplx(constant)) {}  // NOLINT
  explicit LaurentPoly(const std::map<int, cplx>& coeffs);

  static LaurentPoly monomial(int exp, cplx coeff = 1.0);
  /// c_0 z^lo + c_1 z^{lo+1} + ...
  static LaurentPoly from_dense(int lo, const std::vector<cplx>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Extreme exponents; both are 0 for the zero polynomial.
  int min_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }
  int span() const { return max_exp() - min_exp(); }

  cplx coeff(int exp) const;
  double max_abs_coeff() const;

  /// Horner evaluation, split over nonnegative and negative exponents.
  cplx operator()(cplx z) const;

  LaurentPoly derivative() const;
  LaurentPoly derivative(int order) const;

  /// f -> f o g for a dihedral group element g.
  LaurentPoly substitute(const GroupElement& g) const;
  /// f(z) -> f(z^s) for a nonzero integer s.
  LaurentPoly substitute_power(int s) const;
  /// f(z) -> f(c z).
  LaurentPoly scale_argument(cplx c) const;
  /// f(z) -> f(1/z).
  LaurentPoly reflect() const;
  /// z^k f(z).
  LaurentPoly shift(int k) const;

  /// Drops coefficients with |c| <= threshold.
  LaurentPoly cleanup(double threshold) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(cplx s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= -1.0; }
  friend LaurentPoly operator*(LaurentPoly a, cplx s) { return a *= s; }
  friend LaurentPoly operator*(cplx s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(LaurentPoly a, double s) { return a *= cplx(s); }
  friend LaurentPoly operator*(double s, LaurentPoly a) { return a *= cplx(s); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact equality of stored terms.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms);
  void normalize();

  std::vector<Term> terms_;
};

/// x(z) = z + 1/z.
LaurentPoly x_of_z();
/// phi(z) = z - 1/z.
LaurentPoly phi_of_z();

/// Integer power of a complex number by repeated squaring.
cplx ipow(cplx z, int n);

/// True when p(z) and p(1/z) agree coefficientwise within tol * max|c|.
bool is_symmetric(const LaurentPoly& p, double tol = 1e-12);

/// Coefficients (constant term first) of the polynomial P with
/// P(z + 1/z) = p(z). Throws SymmetryError for non-symmetric input.
std::vector<cplx> to_x_basis(const LaurentPoly& p, double tol = 1e-10);

/// Inverse of to_x_basis: substitutes x = z + 1/z.
LaurentPoly from_x_basis(const std::vector<cplx>& x_coeffs);

struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Laurent long division p = q d + r, where after factoring out the lowest
/// powers of z the remainder has degree below that of d.
DivisionResult divide(const LaurentPoly& p, const LaurentPoly& d);

/// Sample points z_j = radius * exp(i(2 pi j / count + phase_offset)).
///
/// Points closer than excluded_pole_tolerance to a 2N-th root of unity
/// (N = sieve_order) are rejected; those are where the Dunkl operator
/// coefficients have their poles.
struct SamplePlan {
  int count = 64;
  double radius = 1.0;
  double phase_offset = 0.37;
  double excluded_pole_tolerance = 1e-6;
  int sieve_order = 1;

  /// Throws PlanError when the plan is invalid.
  void validate() const;
  std::vector<cplx> points() const;

  /// The default plan for identities of exponent span `span`:
  /// count = 2 span + 17, bumped until no point is near a pole.
  static SamplePlan for_span(int span, int N, double radius = 1.0);
};

/// Default relative tolerance 1e-9 (1 + span).
double default_tolerance(int span);

using SampledFunction = std::function<cplx(cplx)>;

/// max_j |f(z_j) - g(z_j)| / max(1, max_j |g(z_j)|).
double max_residual_on_samples(const SampledFunction& f, const SampledFunction& g,
                               const SamplePlan& plan);

}  // namespace sieved
