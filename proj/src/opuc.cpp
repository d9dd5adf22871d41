#include "sieved/opuc.hpp"

#include <cmath>
#include <string>

#include "sieved/errors.hpp"

namespace sieved {

double jacobi_verblunsky(const JacobiParams& p, int n) {
  if (n < 0) throw ArgumentError("jacobi_verblunsky: n must be >= 0");
  const double den = n + p.alpha + p.beta + 2.0;
  if (den == 0.0) throw ValidityError("jacobi_verblunsky: vanishing denominator at n = " + std::to_string(n));
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  const double a = -(p.alpha + 0.5 + sign * (p.beta + 0.5)) / den;
  if (!(std::abs(a) < 1.0)) {
    throw ValidityError("Verblunsky parameter a_" + std::to_string(n) + " = " + std::to_string(a) +
                        " violates |a_n| < 1");
  }
  return a;
}

double sieved_verblunsky(const JacobiParams& p, int N, int n) {
  if (N < 1) throw ArgumentError("sieved_verblunsky: N must be >= 1");
  if (n < 0) throw ArgumentError("sieved_verblunsky: n must be >= 0");
  if ((n + 1) % N != 0) return 0.0;
  return jacobi_verblunsky(p, (n + 1) / N - 1);
}

VerblunskySequence VerblunskySequence::explicit_list(std::vector<double> values) {
  VerblunskySequence s;
  s.kind_ = Kind::explicit_list;
  s.values_ = std::move(values);
  return s;
}

VerblunskySequence VerblunskySequence::jacobi(const JacobiParams& p) {
  VerblunskySequence s;
  s.kind_ = Kind::jacobi;
  s.params_ = p;
  return s;
}

VerblunskySequence VerblunskySequence::sieved_jacobi(const JacobiParams& p, int N) {
  if (N < 1) throw ArgumentError("sieved_jacobi: N must be >= 1");
  VerblunskySequence s;
  s.kind_ = Kind::sieved_jacobi;
  s.params_ = p;
  s.N_ = N;
  return s;
}

double VerblunskySequence::operator()(int n) const {
  switch (kind_) {
    case Kind::explicit_list: {
      if (n < 0 || n >= static_cast<int>(values_.size())) {
        throw ArgumentError("VerblunskySequence: index " + std::to_string(n) + " outside explicit list");
      }
      const double a = values_[static_cast<std::size_t>(n)];
      if (!(std::abs(a) < 1.0)) throw ValidityError("Verblunsky parameter violates |a_n| < 1");
      return a;
    }
    case Kind::jacobi:
      return jacobi_verblunsky(params_, n);
    case Kind::sieved_jacobi:
      return sieved_verblunsky(params_, N_, n);
  }
  return 0.0;
}

void VerblunskySequence::validate(int n_max) const {
  for (int k = 0; k < n_max; ++k) (void)(*this)(k);
}

OpucFamily::OpucFamily(VerblunskySequence source, std::vector<LaurentPoly> phi)
    : source_(std::move(source)), phi_(std::move(phi)) {}

const LaurentPoly& OpucFamily::phi(int n) const {
  if (n < 0 || n > n_max()) throw ArgumentError("OpucFamily: index " + std::to_string(n) + " out of cached range");
  return phi_[static_cast<std::size_t>(n)];
}

OpucFamily szego_sequence(const VerblunskySequence& a, int n_max) {
  if (n_max < 0) throw ArgumentError("szego_sequence: n_max must be >= 0");
  std::vector<LaurentPoly> phi;
  phi.reserve(static_cast<std::size_t>(n_max + 1));
  phi.emplace_back(1.0);
  for (int k = 0; k < n_max; ++k) {
    const LaurentPoly& p = phi.back();
    // Phi_k^*(z) = z^k Phi_k(1/z); coefficients are real, so no conjugation.
    const LaurentPoly star = p.reflect().shift(k);
    phi.push_back(p.shift(1) - star * a(k));
  }
  return {a, std::move(phi)};
}

double h_norm(const VerblunskySequence& a, int n) {
  if (n < 0) throw ArgumentError("h_norm: n must be >= 0");
  double h = 1.0;
  for (int k = 0; k < n; ++k) {
    const double ak = a(k);
    h *= 1.0 - ak * ak;
  }
  return h;
}

LaurentPoly psi_n(const OpucFamily& family, int n) {
  const LaurentPoly& p = family.phi(n);
  if (n % 2 == 0) return p.reflect().shift(n / 2);
  return p.shift(-(n - 1) / 2);
}

CmvTruncation cmv_matrices(const VerblunskySequence& a, int size) {
  if (size < 4 || size % 2 != 0) throw ArgumentError("cmv_matrices: size must be even and >= 4");
  CmvTruncation t;
  t.size = size;
  t.m1 = Eigen::MatrixXd::Zero(size, size);
  t.m2 = Eigen::MatrixXd::Zero(size, size);
  auto put_block = [](Eigen::MatrixXd& m, int row, double ak) {
    const int n = static_cast<int>(m.rows());
    m(row, row) = ak;
    if (row + 1 < n) {
      m(row, row + 1) = 1.0;
      m(row + 1, row) = 1.0 - ak * ak;
      m(row + 1, row + 1) = -ak;
    }
  };
  t.m1(0, 0) = 1.0;
  for (int k = 0; 2 * k + 1 < size; ++k) put_block(t.m1, 2 * k + 1, a(2 * k + 1));
  for (int k = 0; 2 * k < size; ++k) put_block(t.m2, 2 * k, a(2 * k));
  t.c = t.m1 * t.m2;
  return t;
}

Eigen::VectorXcd psi_vector(const OpucFamily& family, int size, cplx z) {
  Eigen::VectorXcd v(size);
  for (int n = 0; n < size; ++n) v(n) = psi_n(family, n)(z);
  return v;
}

}  // namespace sieved
