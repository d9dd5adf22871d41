#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sieved/laurent.hpp"
#include "sieved/opuc.hpp"
#include "sieved/params.hpp"

namespace sieved {

/// Phi_n(z; N) = z^j Phi_k(z^N) with n = N k + j, from the plain Jacobi family.
LaurentPoly sieved_phi(const JacobiParams& p, int N, int n);

/// CMV Laurent polynomial psi_n(z; N) built from sieved_phi.
LaurentPoly sieved_psi(const JacobiParams& p, int N, int n);

/// Cached psi_0(z;N) .. psi_{n_max}(z;N) together with the plain Jacobi
/// psi_k used by the sieving relations.
class SievedFamily {
 public:
  SievedFamily(const JacobiParams& p, int N, int n_max);

  const JacobiParams& params() const { return params_; }
  int sieve_order() const { return N_; }
  int n_max() const { return n_max_; }

  const LaurentPoly& psi(int n) const;
  const LaurentPoly& phi(int n) const;
  const LaurentPoly& plain_psi(int k) const;
  double a(int n) const { return sieved_verblunsky(params_, N_, n); }

 private:
  JacobiParams params_;
  int N_;
  int n_max_;
  std::vector<LaurentPoly> phi_;
  std::vector<LaurentPoly> psi_;
  std::vector<LaurentPoly> plain_psi_;
};

/// Which of the parity branches relates psi_n(z;N) to psi_k.
enum class PsiCase {
  n_even_k_even,  // z^{-j/2} psi_k(z^N)
  n_even_k_odd,   // z^{(N-j)/2} psi_k(z^{-N})
  n_odd_k_even,   // z^{(j+1)/2} psi_k(z^{-N})
  n_odd_k_odd,    // z^{(j+1-N)/2} psi_k(z^N)
};

std::string to_string(PsiCase c);

/// psi_n(z;N) = z^nu psi_k(z^{power_sign N}) with n = N k + j, 0 <= j < N.
struct PsiCaseDescriptor {
  int n = 0;
  int N = 1;
  int k = 0;
  int j = 0;
  int nu = 0;
  int power_sign = 1;
  PsiCase case_id = PsiCase::n_even_k_even;
};

/// Branch table indexed by the parities of n and k. Derived directly from
/// Phi_n(z;N) = z^j Phi_k(z^N); see PsiCase for the four formulas.
PsiCaseDescriptor psi_case(int n, int N);

/// The six-branch table indexed by (n, N, j) parities as commonly printed.
/// It agrees with psi_case only on part of the index range; kept so the
/// discrepancy can be measured.
PsiCaseDescriptor printed_psi_case(int n, int N);

/// z^nu psi_k(z^{power_sign N}).
LaurentPoly reconstruct_psi(const PsiCaseDescriptor& d, const LaurentPoly& plain_psi_k);

/// Measured unit-modulus phases of psi_n(z;N) under rotations.
///   omega_j(N):    psi_n(q^{-j} z; N) = omega psi_n(z; N)
///   omega_{n,j}:   psi_n(q^{j} z; N) = omega_{n,j} psi_n(z; N)
/// Each value is the ratio at the first plan sample; max_spread records how
/// far the ratio moves across the remaining samples.
struct PhaseTable {
  int N = 1;
  std::map<std::pair<int, int>, cplx> inverse_rotation;  // (n, j) -> omega_j
  std::map<std::pair<int, int>, cplx> rotation;          // (n, j) -> omega_{n,j}
  double max_spread = 0.0;
  double max_modulus_defect = 0.0;

  static PhaseTable measure(const SievedFamily& family, int n_max, const SamplePlan& plan);
};

enum class WeightKind { rho, rho_N, w };

/// rho(theta) = (1 - cos theta)^{alpha+1/2} (1 + cos theta)^{beta+1/2}.
double weight_rho(const JacobiParams& p, double theta);
/// rho(theta; N) = rho(N theta).
double weight_rho_N(const JacobiParams& p, int N, double theta);
/// w(x) = rho(theta; N) / sqrt(4 - x^2), x = 2 cos theta, |x| < 2.
double weight_w(const JacobiParams& p, int N, double x);

/// Dispatch over the three weights; `point` is theta for rho and rho_N and
/// x for w.
double weights(WeightKind which, const JacobiParams& p, int N, double point);

}  // namespace sieved
