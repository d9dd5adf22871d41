#pragma once

#include <string>
#include <vector>

#include "sieved/group.hpp"
#include "sieved/laurent.hpp"
#include "sieved/rational.hpp"

namespace sieved {

/// One term c(z) d^order/dz^order [f o g] of a Dunkl-type operator.
struct OperatorTerm {
  RationalFunction coeff;
  int order = 0;  // 0, 1 or 2
  GroupElement element;
};

/// Finite sum of OperatorTerm acting on Laurent polynomials.
///
/// The group part of compositions is exact dihedral bookkeeping; the
/// coefficients compose as rational functions and are only ever evaluated
/// pointwise.
class DunklOperator {
 public:
  explicit DunklOperator(int N = 1) : N_(N) {}
  DunklOperator(int N, std::vector<OperatorTerm> terms);

  static DunklOperator identity(int N);
  static DunklOperator multiplication(const RationalFunction& c, int N);
  static DunklOperator group(const GroupElement& g);
  /// z d/dz
  static DunklOperator euler(int N);

  int order() const { return N_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }
  int max_derivative_order() const;

  DunklOperator& add_term(OperatorTerm t);
  DunklOperator& add_term(const RationalFunction& c, int order, const GroupElement& g);

  /// (op f)(z). Throws PlanError if z is within pole_tolerance of a zero of
  /// any coefficient denominator.
  cplx apply(const LaurentPoly& f, cplx z, double pole_tolerance = 1e-9) const;

  /// (op f)(z) at every point, reusing the substituted derivatives of f.
  std::vector<cplx> apply_many(const LaurentPoly& f, const std::vector<cplx>& zs,
                               double pole_tolerance = 1e-9) const;

  /// (phi^{-1} op phi f)(z) with phi = z - 1/z, evaluated pointwise.
  cplx apply_conjugated(const LaurentPoly& f, cplx z, double pole_tolerance = 1e-9) const;

  DunklOperator& operator+=(const DunklOperator& o);
  DunklOperator& operator-=(const DunklOperator& o);
  DunklOperator& operator*=(cplx s);

  friend DunklOperator operator+(DunklOperator a, const DunklOperator& b) { return a += b; }
  friend DunklOperator operator-(DunklOperator a, const DunklOperator& b) { return a -= b; }
  friend DunklOperator operator*(DunklOperator a, cplx s) { return a *= s; }
  friend DunklOperator operator*(cplx s, DunklOperator a) { return a *= s; }

  std::string describe() const;

 private:
  int N_;
  std::vector<OperatorTerm> terms_;
};

/// Sum of the coefficients of all terms with this derivative order and group
/// element, evaluated at z.
cplx coefficient_at(const DunklOperator& op, int order, const GroupElement& g, cplx z);

/// max over z and over every (order, element) pair present in either
/// operator of the coefficient difference, relative to max(1, |coefficient|).
double max_coefficient_gap(const DunklOperator& a, const DunklOperator& b, const std::vector<cplx>& zs);

/// a o b. Throws UnsupportedComposition if a derivative of order > 2 arises.
DunklOperator compose(const DunklOperator& a, const DunklOperator& b);
DunklOperator commutator(const DunklOperator& a, const DunklOperator& b);
DunklOperator anticommutator(const DunklOperator& a, const DunklOperator& b);

/// phi^{-1} op phi with phi(z) = z - 1/z, built by composition.
DunklOperator conjugate_by_phi(const DunklOperator& op);

enum class AlgebraKind { compose, add, commutator, anticommutator };
DunklOperator op_algebra(const DunklOperator& a, const DunklOperator& b, AlgebraKind kind);

}  // namespace sieved
