#pragma once

namespace sieved {

/// Jacobi parameters (alpha, beta) of the circle weight
/// (1 - cos t)^{alpha + 1/2} (1 + cos t)^{beta + 1/2}.
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  /// alpha + beta + 1, the combination that appears everywhere.
  double sum1() const { return alpha + beta + 1.0; }
  /// alpha - beta
  double diff() const { return alpha - beta; }
};

/// a_n = -(alpha + 1/2 + (-1)^{n+1}(beta + 1/2)) / (n + alpha + beta + 2).
/// Throws ValidityError when |a_n| >= 1 or the denominator vanishes.
double jacobi_verblunsky(const JacobiParams& p, int n);

/// a_n(N) = a_{k-1} when n = N k - 1, and 0 otherwise.
double sieved_verblunsky(const JacobiParams& p, int N, int n);

}  // namespace sieved
