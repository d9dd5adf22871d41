#include "sieved/realline.hpp"

#include <algorithm>
#include <cmath>

#include "sieved/dunkl.hpp"
#include "sieved/errors.hpp"

namespace sieved {

namespace {

SymmetricPoly symmetrize(const LaurentPoly& p) {
  try {
    return {p, to_x_basis(p)};
  } catch (const SymmetryError& e) {
    throw ConsistencyError(std::string("real-line polynomial is not symmetric: ") + e.what());
  }
}

void require_ultra(const JacobiParams& p, int N) {
  if (p.alpha != p.beta) throw ArgumentError("sieved ultraspherical families need alpha == beta");
  if (N < 2) throw ArgumentError("sieved ultraspherical families need N >= 2");
}

}  // namespace

SymmetricPoly poly_P(const SievedFamily& fam, int n, Route route) {
  if (n < 0) throw ArgumentError("poly_P: n must be >= 0");
  if (n == 0) return symmetrize(LaurentPoly(1.0));
  if (route == Route::psi) {
    return symmetrize(fam.psi(2 * n) + fam.psi(2 * n - 1) * (1.0 + fam.a(2 * n - 1)));
  }
  const LaurentPoly& s = fam.psi(2 * n - 1);
  return symmetrize(s + s.reflect());
}

LaurentPoly q_precursor(const SievedFamily& fam, int n, Route route) {
  if (n < 0) throw ArgumentError("q_precursor: n must be >= 0");
  if (route == Route::psi) {
    return -fam.psi(2 * n + 2) + fam.psi(2 * n + 1) * (1.0 - fam.a(2 * n + 1));
  }
  const LaurentPoly& s = fam.psi(2 * n + 1);
  return s - s.reflect();
}

SymmetricPoly poly_Q(const SievedFamily& fam, int n, Route route) {
  const LaurentPoly num = q_precursor(fam, n, route);
  const DivisionResult d = divide(num, phi_of_z());
  if (d.remainder.max_abs_coeff() > 1e-9 * std::max(1.0, num.max_abs_coeff())) {
    throw ConsistencyError("poly_Q: precursor not divisible by z - 1/z");
  }
  return symmetrize(d.quotient);
}

SymmetricFamily::SymmetricFamily(FamilyKind kind, const JacobiParams& p, int N, int n_max, Route route)
    : kind_(kind), fam_(p, N, 2 * std::max(n_max, 0) + 2) {
  if (n_max < 0) throw ArgumentError("SymmetricFamily: n_max must be >= 0");
  for (int n = 0; n <= n_max; ++n) {
    if (kind == FamilyKind::P) {
      polys_.push_back(poly_P(fam_, n, route));
    } else {
      precursors_.push_back(q_precursor(fam_, n, route));
      polys_.push_back(poly_Q(fam_, n, route));
    }
  }
}

const SymmetricPoly& SymmetricFamily::operator[](int n) const {
  if (n < 0 || n > n_max()) throw ArgumentError("SymmetricFamily: index out of range");
  return polys_[static_cast<std::size_t>(n)];
}

const LaurentPoly& SymmetricFamily::precursor(int n) const {
  if (kind_ != FamilyKind::Q) throw ArgumentError("SymmetricFamily: precursors exist for Q only");
  if (n < 0 || n > n_max()) throw ArgumentError("SymmetricFamily: index out of range");
  return precursors_[static_cast<std::size_t>(n)];
}

double special_recurrence_u(RecurrenceFamily family, const JacobiParams& p, int N, int n, FormulaVariant variant) {
  if (n < 0) throw ArgumentError("special_recurrence_u: n must be >= 0");
  const double a = p.alpha;
  const double b = p.beta;
  switch (family) {
    case RecurrenceFamily::generalized_ultra: {
      if (N != 2) throw ArgumentError("generalized ultraspherical recurrence needs N == 2");
      if (n % 2 == 0) {
        const double m = n / 2;
        return 4.0 * m * (a + m) / ((a + b + 2 * m) * (a + b + 2 * m + 1));
      }
      const double m = (n - 1) / 2;
      const double second = variant == FormulaVariant::printed ? a + m + 1 : a + b + m + 1;
      return 4.0 * (b + m + 1) * second / ((a + b + 2 * m + 1) * (a + b + 2 * m + 2));
    }
    case RecurrenceFamily::sieved_ultra_1: {
      require_ultra(p, N);
      if (n % N == 0) {
        const double m = n / N;
        return 2.0 * m / (2 * a + 2 * m + 1);
      }
      if (n % N == 1) {
        const double m = n / N;
        return (4 * a + 2 * m + 2) / (2 * a + 2 * m + 1);
      }
      return 1.0;
    }
    case RecurrenceFamily::sieved_ultra_2: {
      require_ultra(p, N);
      if (n >= N && n % N == 0) {
        const double m = n / N;
        return 2.0 * m / (2 * a + 2 * m + 1);
      }
      if ((n + 1) % N == 0) {
        const double m = (n + 1) / N;
        return (4 * a + 2 * m + 2) / (2 * a + 2 * m + 1);
      }
      return 1.0;
    }
  }
  return 1.0;
}

double three_term_residual(const SymmetricFamily& fam, const std::vector<double>& u) {
  double worst = 0.0;
  for (int n = 0; n < fam.n_max(); ++n) {
    const auto& pn = fam[n].x_coeffs;
    std::vector<cplx> lhs = fam[n + 1].x_coeffs;
    std::vector<cplx> xp(pn.size() + 1, 0.0);
    for (std::size_t i = 0; i < pn.size(); ++i) xp[i + 1] = pn[i];
    if (n >= 1) {
      const auto& pm = fam[n - 1].x_coeffs;
      for (std::size_t i = 0; i < pm.size(); ++i) lhs[i] += u.at(static_cast<std::size_t>(n)) * pm[i];
    }
    double diff = 0.0;
    double scale = 1.0;
    const std::size_t len = std::max(lhs.size(), xp.size());
    for (std::size_t i = 0; i < len; ++i) {
      const cplx l = i < lhs.size() ? lhs[i] : 0.0;
      const cplx r = i < xp.size() ? xp[i] : 0.0;
      diff = std::max(diff, std::abs(l - r));
      scale = std::max(scale, std::abs(r));
    }
    worst = std::max(worst, diff / scale);
  }
  return worst;
}

std::vector<double> measured_u(const SymmetricFamily& fam) {
  std::vector<double> u(static_cast<std::size_t>(fam.n_max()), 0.0);
  for (int n = 1; n < fam.n_max(); ++n) {
    // x P_n - P_{n+1} = u_n P_{n-1}, and P_{n-1} is monic.
    const auto& pn = fam[n].x_coeffs;
    const auto& pn1 = fam[n + 1].x_coeffs;
    const std::size_t i = static_cast<std::size_t>(n - 1);
    const cplx xp = i >= 1 ? pn[i - 1] : 0.0;
    u[static_cast<std::size_t>(n)] = (xp - pn1[i]).real();
  }
  return u;
}

CheckReport check_three_term(const SymmetricFamily& fam, RecurrenceFamily which, const JacobiParams& p, int N,
                             double tolerance) {
  CheckReport r;
  r.suite = "three-term";
  r.params = p;
  r.N = N;
  r.n_max = fam.n_max();
  r.tolerance = tolerance;
  const char* label = which == RecurrenceFamily::generalized_ultra ? "generalized ultraspherical"
                      : which == RecurrenceFamily::sieved_ultra_1 ? "sieved ultraspherical, first kind"
                                                                   : "sieved ultraspherical, second kind";
  auto table = [&](FormulaVariant v) {
    std::vector<double> u;
    for (int n = 0; n < fam.n_max(); ++n) u.push_back(special_recurrence_u(which, p, N, n, v));
    return u;
  };
  if (which == RecurrenceFamily::generalized_ultra) {
    r.add(std::string(label) + " (printed odd u)", three_term_residual(fam, table(FormulaVariant::printed)),
          "odd coefficients use 4(b+n+1)(a+n+1) in the numerator");
    r.add(std::string(label) + " (corrected odd u)", three_term_residual(fam, table(FormulaVariant::corrected)),
          "odd numerator 4(b+n+1)(a+b+n+1)");
  } else {
    r.add(label, three_term_residual(fam, table(FormulaVariant::corrected)));
  }
  return r;
}

DunklOperator special_operator(SpecialOperator which, const JacobiParams& p, int N, FormulaVariant variant,
                               bool rotation_form) {
  const auto id = GroupElement::identity(N);
  const LaurentPoly z2 = LaurentPoly::monomial(2);
  if (which == SpecialOperator::H_gu) {
    if (N != 2) throw ArgumentError("H_gu needs N == 2");
    DunklOperator H(2);
    H.add_term(RationalFunction(z2), 2, id);
    // z(2a+2b+3 + 4(a+b+1 + (a-b) z^2)/(z^4-1))
    const double s = p.sum1();
    const LaurentPoly z4m1 = LaurentPoly::monomial(4) - LaurentPoly(1.0);
    const LaurentPoly cnum = z4m1 * (2.0 * s + 1.0) + LaurentPoly(4.0 * s) + LaurentPoly::monomial(2, 4.0 * p.diff());
    H.add_term(RationalFunction(cnum.shift(1), z4m1), 1, id);
    const LaurentPoly z2p1 = z2 + LaurentPoly(1.0);
    const double c = 2.0 * p.beta + 1.0;
    const RationalFunction refl = variant == FormulaVariant::printed ? RationalFunction(z2 * (-c), z2p1)
                                                                      : RationalFunction(z2 * (-2.0 * c), z2p1 * z2p1);
    H.add_term(refl, 0, GroupElement::rotation(1, 2));
    H.add_term(-refl, 0, id);
    return H;
  }
  if (p.alpha != p.beta) throw ArgumentError("ultraspherical operators need alpha == beta");
  if (which == SpecialOperator::H_ultra_Q) {
    return build_H_hat(p, N, rotation_form ? HatMode::explicit_T : HatMode::explicit_R);
  }
  DunklOperator H(N);
  H.add_term(RationalFunction(z2), 2, id);
  H.add_term(coeff_C_ultra(p.alpha, N), 1, id);
  for (int k = rotation_form ? 1 : 0; k < N; ++k) {
    const RationalFunction B = coeff_B_ultra(p.alpha, N, k);
    H.add_term(B, 0, rotation_form ? GroupElement::rotation(-k, N) : GroupElement::reflection(k, N));
    H.add_term(-B, 0, id);
  }
  return H;
}

}  // namespace sieved
