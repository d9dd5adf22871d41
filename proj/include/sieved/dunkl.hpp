#pragma once

#include "sieved/operator.hpp"
#include "sieved/params.hpp"
#include "sieved/rational.hpp"

namespace sieved {

// Coefficients of the sieved Jacobi operators. Indices k are reduced mod N,
// so A_{k+N} = A_k holds by construction.

/// A_k(z;N): sigma_k z^2 / (q^k - z^2) for even N with
/// sigma_k = alpha + beta + 1 + (-1)^k (alpha - beta), and
/// ((alpha+beta+1) z^2 + rho_k (alpha-beta) z) / (q^k - z^2) for odd N with
/// rho_k = q^{k/2} (k even), q^{(k-N)/2} (k odd).
RationalFunction coeff_A(const JacobiParams& p, int N, int k);

/// Closed form N((alpha+beta+1) z^{2N} + (alpha-beta) z^N) / (z^{2N} - 1).
RationalFunction coeff_B(const JacobiParams& p, int N);
/// -sum_k A_k(z;N), summed term by term.
RationalFunction coeff_B_sum(const JacobiParams& p, int N);

/// z (1 + N(alpha+beta+1) + 2N(alpha+beta+1 + (alpha-beta) z^N)/(z^{2N}-1)).
RationalFunction coeff_C(const JacobiParams& p, int N);

/// z A_k'(z;N).
RationalFunction coeff_D(const JacobiParams& p, int N, int k);
/// A_k(z)(B(z) + B(q^k/z) - N(alpha+beta+1)) + z A_k'(z), before simplification.
RationalFunction coeff_D_general(const JacobiParams& p, int N, int k);
/// B(z) + B(q^k/z) - N(alpha+beta+1); identically zero.
RationalFunction coeff_BB(const JacobiParams& p, int N, int k);

/// sum_i A_i(z;N) A_{i+k}(q^i/z;N), the rotation coefficient of L^2; it
/// vanishes for k = 1..N-1.
RationalFunction coeff_E(const JacobiParams& p, int N, int k);

/// G(z) = z((alpha+beta+1) z + alpha - beta) / (1 - z^2).
RationalFunction coeff_G(const JacobiParams& p);

// alpha = beta specialisations.

/// B_k(z) = 2(2 alpha+1) q^k z^2 / (q^k - z^2)^2.
RationalFunction coeff_B_ultra(double alpha, int N, int k);
/// z (1 + N(2 alpha+1) + 2N(2 alpha+1)/(z^{2N} - 1)).
RationalFunction coeff_C_ultra(double alpha, int N);
/// (q^{2k} - z^2) / (q^k (z^2 - 1)) B_k(z).
RationalFunction coeff_B_hat(double alpha, int N, int k);
/// C(z) + 2 z (z^2 + 1)/(z^2 - 1).
RationalFunction coeff_C_hat(double alpha, int N);

// Operators.

/// K = z d/dz + G(z)(R - I), acting with N = 1.
DunklOperator build_K(const JacobiParams& p);

enum class LForm {
  reflections,  // z d/dz + sum_k A_k (R_k - I)
  with_B,       // z d/dz + sum_k A_k R_k + B(z) I
};
DunklOperator build_L(const JacobiParams& p, int N, LForm form = LForm::reflections);

enum class HMode {
  square,      // L^2 - N(alpha+beta+1) L by composition
  explicit_R,  // z^2 d^2 + C d + sum_{k>=0} z A_k' (R_k - I)
  explicit_T,  // z^2 d^2 + C d + sum_{k>=1} z A_k' (T_{-k} - I)
};
DunklOperator build_H(const JacobiParams& p, int N, HMode mode = HMode::explicit_R);

/// phi^{-1} H phi with phi = z - 1/z.
DunklOperator build_H_tilde(const JacobiParams& p, int N, HMode base = HMode::explicit_R);

enum class HatMode {
  conjugated,  // phi^{-1} H phi - Lambda_1 I
  explicit_R,  // z^2 d^2 + C^ d + sum_{k>=0} B^_k (R_k - I)
  explicit_T,  // z^2 d^2 + C^ d + sum_{k>=1} B^_k (T_{-k} - I)
};
/// Standardised operator for the second-kind family; needs alpha = beta.
DunklOperator build_H_hat(const JacobiParams& p, int N, HatMode mode = HatMode::conjugated);

/// Y_m = T_m + T_{-m}, 1 <= m <= N-1.
DunklOperator build_Y(int N, int m);

enum class YMode { closed_form, conjugated };
/// phi^{-1} Y_m phi. The closed form carries the coefficients
/// (z q^{+-m} - q^{-+m}/z) / (z - 1/z) on T_{+-m}.
DunklOperator build_Y_tilde(int N, int m, YMode mode = YMode::closed_form);

/// Closed-form spectra.
class EigenvalueTable {
 public:
  EigenvalueTable(const JacobiParams& p, int N);

  /// Eigenvalues of K: -n/2 (n even), (n+1)/2 + alpha+beta+1 (n odd).
  double mu(int n) const;
  /// Eigenvalues of L(N): -n/2 (n even), (n+1)/2 + (alpha+beta+1) N (n odd).
  double lambda(int n) const;
  /// lambda_n^2 - N(alpha+beta+1) lambda_n.
  double lambda_tilde(int n) const;
  /// n (n + N(alpha+beta+1)).
  double Lambda(int n) const;
  /// Lambda_{n+1} - Lambda_1.
  double Xi(int n) const;

  /// Eigenvalue of Y_m on P_n: q^{m nu} + q^{-m nu}, where
  /// psi_{2n-1}(z;N) = z^nu psi_k(z^{+-N}). omega_{m,0} = 2.
  cplx omega(int m, int n) const;
  /// The parity-of-(N, j) formula with j = (2n-1) mod N, reading each pair
  /// of exponents as q^{x} + q^{-x}.
  cplx omega_printed(int m, int n) const;

  const JacobiParams& params() const { return p_; }
  int sieve_order() const { return N_; }

 private:
  JacobiParams p_;
  int N_;
};

}  // namespace sieved
