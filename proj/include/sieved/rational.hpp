#pragma once

#include "sieved/laurent.hpp"

namespace sieved {

/// Rational function numerator / denominator with Laurent polynomial parts.
///
/// No normal form is maintained: products and substitutions simply act on
/// both parts. That is enough for operator composition, which never needs
/// to add two coefficients.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1.0) {}
  RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(cplx constant) : RationalFunction(LaurentPoly(constant)) {}  // NOLINT
  RationalFunction(double constant) : RationalFunction(LaurentPoly(constant)) {}  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  cplx operator()(cplx z) const { return num_(z) / den_(z); }
  /// |den(z)| relative to the largest denominator coefficient.
  double relative_denominator(cplx z) const;

  RationalFunction derivative() const;
  RationalFunction substitute(const GroupElement& g) const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, cplx s);
  friend RationalFunction operator*(cplx s, const RationalFunction& a) { return a * s; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a) { return a * cplx(-1.0); }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace sieved
