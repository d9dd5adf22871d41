#pragma once

#include <vector>

#include "sieved/jacobi.hpp"
#include "sieved/operator.hpp"
#include "sieved/report.hpp"

namespace sieved {

/// A symmetric Laurent polynomial together with its coefficients in
/// x = z + 1/z (constant term first).
struct SymmetricPoly {
  LaurentPoly z_form;
  std::vector<cplx> x_coeffs;
};

enum class FamilyKind { P, Q };

/// psi:  P_n = psi_{2n} + (1 + a_{2n-1}) psi_{2n-1},
///       (z - 1/z) Q_n = -psi_{2n+2} + (1 - a_{2n+1}) psi_{2n+1}
/// phi:  P_n = psi_{2n-1}(z) + psi_{2n-1}(1/z),
///       (z - 1/z) Q_n = psi_{2n+1}(z) - psi_{2n+1}(1/z)
enum class Route { psi, phi };

/// Q precursors are divided by z - 1/z exactly; a remainder above
/// 1e-9 * max|coeff| throws ConsistencyError, as does a non-symmetric result.
SymmetricPoly poly_P(const SievedFamily& fam, int n, Route route = Route::psi);
SymmetricPoly poly_Q(const SievedFamily& fam, int n, Route route = Route::psi);

/// The antisymmetric numerator (z - 1/z) Q_n before division.
LaurentPoly q_precursor(const SievedFamily& fam, int n, Route route = Route::psi);

/// Cached P_0..P_{n_max} or Q_0..Q_{n_max} for (alpha, beta, N).
class SymmetricFamily {
 public:
  SymmetricFamily(FamilyKind kind, const JacobiParams& p, int N, int n_max, Route route = Route::psi);

  FamilyKind kind() const { return kind_; }
  int n_max() const { return static_cast<int>(polys_.size()) - 1; }
  const SymmetricPoly& operator[](int n) const;
  const LaurentPoly& precursor(int n) const;  // Q only
  const SievedFamily& circle_family() const { return fam_; }

 private:
  FamilyKind kind_;
  SievedFamily fam_;
  std::vector<SymmetricPoly> polys_;
  std::vector<LaurentPoly> precursors_;
};

enum class RecurrenceFamily { generalized_ultra, sieved_ultra_1, sieved_ultra_2 };
enum class FormulaVariant { printed, corrected };

/// u_n in P_{n+1} + u_n P_{n-1} = x P_n.
///  generalized_ultra (N = 2, any alpha, beta):
///    u_{2n}   = 4n(alpha+n) / ((alpha+beta+2n)(alpha+beta+2n+1))
///    u_{2n+1} = 4(beta+n+1)(alpha+beta+n+1) / ((alpha+beta+2n+1)(alpha+beta+2n+2))
///    The printed variant uses 4(beta+n+1)(alpha+n+1) in the odd numerator.
///  sieved_ultra_1 (alpha = beta, N >= 2): u_{mN} = 2m/(2alpha+2m+1),
///    u_{mN+1} = (4alpha+2m+2)/(2alpha+2m+1), m >= 0, otherwise 1.
///  sieved_ultra_2 (alpha = beta, N >= 2): u_{mN} = 2m/(2alpha+2m+1),
///    u_{mN-1} = (4alpha+2m+2)/(2alpha+2m+1), m >= 1, otherwise 1.
double special_recurrence_u(RecurrenceFamily family, const JacobiParams& p, int N, int n,
                            FormulaVariant variant = FormulaVariant::corrected);

/// Residual of P_{n+1} + u_n P_{n-1} - x P_n in x-coefficient space,
/// relative to max(1, |x P_n|), for n = 0..n_max-1.
double three_term_residual(const SymmetricFamily& fam, const std::vector<double>& u);

/// u_n measured from the family: the x^{n-1} coefficient of x P_n - P_{n+1}.
std::vector<double> measured_u(const SymmetricFamily& fam);

CheckReport check_three_term(const SymmetricFamily& fam, RecurrenceFamily which, const JacobiParams& p, int N,
                             double tolerance = 1e-9);

enum class SpecialOperator { H_gu, H_ultra_P, H_ultra_Q };

/// H_gu: z^2 d^2 + C d + c(z)(T - I), T f(z) = f(-z), N = 2. The printed
/// reflection coefficient is -(2beta+1) z^2/(z^2+1); the corrected one is
/// -2(2beta+1) z^2/(z^2+1)^2. C is read with (alpha - beta) z^2.
/// H_ultra_P / H_ultra_Q: the alpha = beta forms with B_k, C and B^_k, C^,
/// either over R_k (k >= 0) or T_{-k} (k >= 1).
DunklOperator special_operator(SpecialOperator which, const JacobiParams& p, int N,
                               FormulaVariant variant = FormulaVariant::corrected, bool rotation_form = false);

}  // namespace sieved
