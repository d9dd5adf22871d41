#include "sieved/dunkl.hpp"

#include <cmath>

#include "sieved/errors.hpp"
#include "sieved/jacobi.hpp"

namespace sieved {

namespace {

int reduce(int k, int N) { return ((k % N) + N) % N; }

void require_order(int N) {
  if (N < 1) throw ArgumentError("sieving order N must be >= 1");
}

void require_ultra(const JacobiParams& p) {
  if (p.alpha != p.beta) throw ArgumentError("operator requires alpha == beta");
}

LaurentPoly mono(int e, cplx c = 1.0) { return LaurentPoly::monomial(e, c); }

/// z^{2N} - 1
LaurentPoly z2n_minus_one(int N) { return mono(2 * N) - LaurentPoly(1.0); }

/// q^k - z^2
LaurentPoly qk_minus_z2(int N, int k) { return LaurentPoly(root_of_unity(N, k)) - mono(2); }

}  // namespace

RationalFunction coeff_A(const JacobiParams& p, int N, int k) {
  require_order(N);
  k = reduce(k, N);
  LaurentPoly num;
  if (N % 2 == 0) {
    const double sigma = p.sum1() + (k % 2 == 0 ? 1.0 : -1.0) * p.diff();
    num = mono(2, sigma);
  } else {
    const cplx rho = k % 2 == 0 ? root_of_unity(N, k / 2) : root_of_unity(N, (k - N) / 2);
    num = mono(2, p.sum1()) + mono(1, rho * p.diff());
  }
  return {num, qk_minus_z2(N, k)};
}

RationalFunction coeff_B(const JacobiParams& p, int N) {
  require_order(N);
  const LaurentPoly num = mono(2 * N, N * p.sum1()) + mono(N, N * p.diff());
  return {num, z2n_minus_one(N)};
}

RationalFunction coeff_B_sum(const JacobiParams& p, int N) {
  RationalFunction sum(0.0);
  for (int k = 0; k < N; ++k) sum = sum - coeff_A(p, N, k);
  return sum;
}

RationalFunction coeff_C(const JacobiParams& p, int N) {
  require_order(N);
  const double s = p.sum1();
  const LaurentPoly num = (mono(2 * N) - LaurentPoly(1.0)) * (1.0 + N * s) + LaurentPoly(2.0 * N * s) +
                          mono(N, 2.0 * N * p.diff());
  return {num.shift(1), z2n_minus_one(N)};
}

RationalFunction coeff_D(const JacobiParams& p, int N, int k) {
  return RationalFunction(mono(1)) * coeff_A(p, N, k).derivative();
}

RationalFunction coeff_BB(const JacobiParams& p, int N, int k) {
  const RationalFunction B = coeff_B(p, N);
  return B + B.substitute(GroupElement::reflection(k, N)) - RationalFunction(N * p.sum1());
}

RationalFunction coeff_D_general(const JacobiParams& p, int N, int k) {
  return coeff_A(p, N, k) * coeff_BB(p, N, k) + coeff_D(p, N, k);
}

RationalFunction coeff_E(const JacobiParams& p, int N, int k) {
  RationalFunction sum(0.0);
  for (int i = 0; i < N; ++i) {
    sum = sum + coeff_A(p, N, i) * coeff_A(p, N, i + k).substitute(GroupElement::reflection(i, N));
  }
  return sum;
}

RationalFunction coeff_G(const JacobiParams& p) {
  const LaurentPoly num = mono(2, p.sum1()) + mono(1, p.diff());
  return {num, LaurentPoly(1.0) - mono(2)};
}

RationalFunction coeff_B_ultra(double alpha, int N, int k) {
  require_order(N);
  k = reduce(k, N);
  const LaurentPoly d = qk_minus_z2(N, k);
  return {mono(2, 2.0 * (2.0 * alpha + 1.0) * root_of_unity(N, k)), d * d};
}

RationalFunction coeff_C_ultra(double alpha, int N) {
  require_order(N);
  const double s = 2.0 * alpha + 1.0;
  const LaurentPoly num = (mono(2 * N) - LaurentPoly(1.0)) * (1.0 + N * s) + LaurentPoly(2.0 * N * s);
  return {num.shift(1), z2n_minus_one(N)};
}

RationalFunction coeff_B_hat(double alpha, int N, int k) {
  k = reduce(k, N);
  const cplx qk = root_of_unity(N, k);
  const RationalFunction factor(LaurentPoly(qk * qk) - mono(2), (mono(2) - LaurentPoly(1.0)) * qk);
  return factor * coeff_B_ultra(alpha, N, k);
}

RationalFunction coeff_C_hat(double alpha, int N) {
  const RationalFunction extra(mono(3, 2.0) + mono(1, 2.0), mono(2) - LaurentPoly(1.0));
  return coeff_C_ultra(alpha, N) + extra;
}

DunklOperator build_K(const JacobiParams& p) {
  const RationalFunction G = coeff_G(p);
  DunklOperator K = DunklOperator::euler(1);
  K.add_term(G, 0, GroupElement::reflection(0, 1));
  K.add_term(-G, 0, GroupElement::identity(1));
  return K;
}

DunklOperator build_L(const JacobiParams& p, int N, LForm form) {
  require_order(N);
  DunklOperator L = DunklOperator::euler(N);
  for (int k = 0; k < N; ++k) {
    const RationalFunction A = coeff_A(p, N, k);
    L.add_term(A, 0, GroupElement::reflection(k, N));
    if (form == LForm::reflections) L.add_term(-A, 0, GroupElement::identity(N));
  }
  if (form == LForm::with_B) L.add_term(coeff_B(p, N), 0, GroupElement::identity(N));
  return L;
}

DunklOperator build_H(const JacobiParams& p, int N, HMode mode) {
  require_order(N);
  if (mode == HMode::square) {
    const DunklOperator L = build_L(p, N, LForm::with_B);
    return compose(L, L) - L * cplx(N * p.sum1());
  }
  DunklOperator H(N);
  const auto id = GroupElement::identity(N);
  H.add_term(RationalFunction(mono(2)), 2, id);
  H.add_term(coeff_C(p, N), 1, id);
  for (int k = mode == HMode::explicit_R ? 0 : 1; k < N; ++k) {
    const RationalFunction D = coeff_D(p, N, k);
    const auto g = mode == HMode::explicit_R ? GroupElement::reflection(k, N) : GroupElement::rotation(-k, N);
    H.add_term(D, 0, g);
    H.add_term(-D, 0, id);
  }
  return H;
}

DunklOperator build_H_tilde(const JacobiParams& p, int N, HMode base) {
  return conjugate_by_phi(build_H(p, N, base));
}

DunklOperator build_H_hat(const JacobiParams& p, int N, HatMode mode) {
  require_order(N);
  require_ultra(p);
  const auto id = GroupElement::identity(N);
  if (mode == HatMode::conjugated) {
    DunklOperator H = build_H_tilde(p, N, HMode::explicit_R);
    H.add_term(RationalFunction(-EigenvalueTable(p, N).Lambda(1)), 0, id);
    return H;
  }
  DunklOperator H(N);
  H.add_term(RationalFunction(mono(2)), 2, id);
  H.add_term(coeff_C_hat(p.alpha, N), 1, id);
  for (int k = mode == HatMode::explicit_R ? 0 : 1; k < N; ++k) {
    const RationalFunction B = coeff_B_hat(p.alpha, N, k);
    const auto g = mode == HatMode::explicit_R ? GroupElement::reflection(k, N) : GroupElement::rotation(-k, N);
    H.add_term(B, 0, g);
    H.add_term(-B, 0, id);
  }
  return H;
}

DunklOperator build_Y(int N, int m) {
  require_order(N);
  if (m < 1 || m > N - 1) throw ArgumentError("build_Y: need 1 <= m <= N-1");
  DunklOperator Y(N);
  Y.add_term(RationalFunction(1.0), 0, GroupElement::rotation(m, N));
  Y.add_term(RationalFunction(1.0), 0, GroupElement::rotation(-m, N));
  return Y;
}

DunklOperator build_Y_tilde(int N, int m, YMode mode) {
  if (mode == YMode::conjugated) return conjugate_by_phi(build_Y(N, m));
  build_Y(N, m);  // argument checks
  const cplx qm = root_of_unity(N, m);
  const cplx qmi = root_of_unity(N, -m);
  DunklOperator Y(N);
  Y.add_term(RationalFunction(mono(1, qm) - mono(-1, qmi), phi_of_z()), 0, GroupElement::rotation(m, N));
  Y.add_term(RationalFunction(mono(1, qmi) - mono(-1, qm), phi_of_z()), 0, GroupElement::rotation(-m, N));
  return Y;
}

EigenvalueTable::EigenvalueTable(const JacobiParams& p, int N) : p_(p), N_(N) { require_order(N); }

double EigenvalueTable::mu(int n) const {
  if (n % 2 == 0) return -n / 2.0;
  return (n + 1) / 2.0 + p_.sum1();
}

double EigenvalueTable::lambda(int n) const {
  if (n % 2 == 0) return -n / 2.0;
  return (n + 1) / 2.0 + p_.sum1() * N_;
}

double EigenvalueTable::lambda_tilde(int n) const {
  const double l = lambda(n);
  return l * l - N_ * p_.sum1() * l;
}

double EigenvalueTable::Lambda(int n) const { return n * (n + N_ * p_.sum1()); }

double EigenvalueTable::Xi(int n) const { return Lambda(n + 1) - Lambda(1); }

cplx EigenvalueTable::omega(int m, int n) const {
  if (n == 0) return 2.0;
  const int nu = psi_case(2 * n - 1, N_).nu;
  return root_of_unity(N_, static_cast<long long>(m) * nu) + root_of_unity(N_, -static_cast<long long>(m) * nu);
}

cplx EigenvalueTable::omega_printed(int m, int n) const {
  const int j = reduce(2 * n - 1, N_);
  // Both branches have an even numerator, so x is an integer.
  const int x = (N_ % 2) == (j % 2) ? m * (N_ - j) / 2 : m * (-N_ + j + 1) / 2;
  return root_of_unity(N_, x) + root_of_unity(N_, -x);
}

}  // namespace sieved
