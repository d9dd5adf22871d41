#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sieved/laurent.hpp"
#include "sieved/params.hpp"

namespace sieved {

/// Real Verblunsky parameters a_n, either an explicit list or the (sieved)
/// Jacobi closed form. Every access is validated against |a_n| < 1.
class VerblunskySequence {
 public:
  enum class Kind { explicit_list, jacobi, sieved_jacobi };

  static VerblunskySequence explicit_list(std::vector<double> values);
  static VerblunskySequence jacobi(const JacobiParams& p);
  static VerblunskySequence sieved_jacobi(const JacobiParams& p, int N);

  Kind kind() const { return kind_; }
  const JacobiParams& params() const { return params_; }
  int sieve_order() const { return N_; }

  double operator()(int n) const;

  /// Checks |a_k| < 1 for k < n_max; throws ValidityError otherwise.
  void validate(int n_max) const;

 private:
  Kind kind_ = Kind::explicit_list;
  std::vector<double> values_;
  JacobiParams params_;
  int N_ = 1;
};

/// Monic OPUC Phi_0..Phi_{n_max} from the Szego recurrence.
class OpucFamily {
 public:
  OpucFamily(VerblunskySequence source, std::vector<LaurentPoly> phi);

  const VerblunskySequence& source() const { return source_; }
  int n_max() const { return static_cast<int>(phi_.size()) - 1; }
  const LaurentPoly& phi(int n) const;

 private:
  VerblunskySequence source_;
  std::vector<LaurentPoly> phi_;
};

/// Phi_{k+1} = z Phi_k - a_k Phi_k^*, Phi_0 = 1.
OpucFamily szego_sequence(const VerblunskySequence& a, int n_max);

/// h_n = prod_{k<n} (1 - a_k^2).
double h_norm(const VerblunskySequence& a, int n);

/// psi_{2m} = z^m Phi_{2m}(1/z), psi_{2m+1} = z^{-m} Phi_{2m+1}(z).
LaurentPoly psi_n(const OpucFamily& family, int n);

/// Truncated block matrices M1, M2 and the CMV matrix C = M1 M2.
struct CmvTruncation {
  int size = 0;
  Eigen::MatrixXd m1;
  Eigen::MatrixXd m2;
  Eigen::MatrixXd c;
};

/// size must be even and >= 4.
CmvTruncation cmv_matrices(const VerblunskySequence& a, int size);

/// (psi_0(z), ..., psi_{size-1}(z)).
Eigen::VectorXcd psi_vector(const OpucFamily& family, int size, cplx z);

}  // namespace sieved
