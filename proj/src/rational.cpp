#include "sieved/rational.hpp"

#include "sieved/errors.hpp"

namespace sieved {

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1.0) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArgumentError("RationalFunction: zero denominator");
  // A monomial denominator folds into the numerator.
  if (den_.size() == 1) {
    const auto t = den_.terms().front();
    num_ = num_.shift(-t.exp) * (1.0 / t.coeff);
    den_ = LaurentPoly(1.0);
  }
}

double RationalFunction::relative_denominator(cplx z) const {
  return std::abs(den_(z)) / den_.max_abs_coeff();
}

RationalFunction RationalFunction::derivative() const {
  if (den_.size() == 1 && den_.min_exp() == 0) {
    return {num_.derivative() * (1.0 / den_.coeff(0)), LaurentPoly(1.0)};
  }
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::substitute(const GroupElement& g) const {
  return {num_.substitute(g), den_.substitute(g)};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, cplx s) { return {a.num_ * s, a.den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

}  // namespace sieved
