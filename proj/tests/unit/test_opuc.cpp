#include "doctest.h"
#include "sieved/errors.hpp"
#include "sieved/opuc.hpp"

using namespace sieved;

TEST_CASE("Jacobi Verblunsky parameters, alpha = beta = 0") {
  const double expected[] = {0.0, -1.0 / 3, 0.0, -1.0 / 5, 0.0, -1.0 / 7};
  const auto a = VerblunskySequence::jacobi({0.0, 0.0});
  for (int n = 0; n < 6; ++n) CHECK(a(n) == doctest::Approx(expected[n]).epsilon(1e-15));
}

TEST_CASE("closed form of a_n") {
  const JacobiParams p{0.3, 1.7};
  for (int n = 0; n < 20; ++n) {
    const double sign = n % 2 == 0 ? -1.0 : 1.0;  // (-1)^{n+1}
    const double expect = -(p.alpha + 0.5 + sign * (p.beta + 0.5)) / (n + p.alpha + p.beta + 2.0);
    CHECK(jacobi_verblunsky(p, n) == doctest::Approx(expect).epsilon(1e-15));
  }
}

TEST_CASE("sieved parameters sit at n = N k - 1") {
  const JacobiParams p{0.5, 1.5};
  for (int N = 1; N <= 5; ++N) {
    for (int n = 0; n < 30; ++n) {
      const double v = sieved_verblunsky(p, N, n);
      if ((n + 1) % N == 0) {
        CHECK(v == jacobi_verblunsky(p, (n + 1) / N - 1));
      } else {
        CHECK(v == 0.0);
      }
    }
  }
}

TEST_CASE("validity: |a_n| >= 1 is rejected") {
  const auto a = VerblunskySequence::jacobi({0.0, -1.2});  // a_0 = -1.5
  CHECK_THROWS_AS(a.validate(4), ValidityError);
  CHECK_THROWS_AS(a(0), ValidityError);
  CHECK_THROWS_AS(VerblunskySequence::explicit_list({0.2, 1.0}).validate(2), ValidityError);
  CHECK_NOTHROW(VerblunskySequence::jacobi({0.5, 1.5}).validate(100));
}

TEST_CASE("Szego recurrence on an explicit list") {
  const auto fam = szego_sequence(VerblunskySequence::explicit_list({0.5, -0.25}), 2);
  // Phi_1 = z - 0.5, Phi_2 = z Phi_1 + 0.25 Phi_1^*.
  const LaurentPoly z = LaurentPoly::monomial(1);
  const LaurentPoly phi1 = z - LaurentPoly(0.5);
  const LaurentPoly phi1_star = LaurentPoly(1.0) - z * 0.5;
  CHECK((fam.phi(1) - phi1).max_abs_coeff() < 1e-15);
  CHECK((fam.phi(2) - (z * phi1 + phi1_star * 0.25)).max_abs_coeff() < 1e-15);
  CHECK_THROWS(fam.phi(3));
}

TEST_CASE("h_n is the product of 1 - a_k^2") {
  const auto a = VerblunskySequence::jacobi({0.3, 1.7});
  double h = 1.0;
  for (int n = 0; n < 12; ++n) {
    CHECK(h_norm(a, n) == doctest::Approx(h).epsilon(1e-14));
    h *= 1.0 - a(n) * a(n);
  }
}

TEST_CASE("psi_n definitions") {
  const auto fam = szego_sequence(VerblunskySequence::jacobi({0.5, 1.5}), 9);
  const cplx z{0.8, 0.45};
  for (int n = 0; n <= 9; ++n) {
    const int m = n / 2;
    const cplx expect = n % 2 == 0 ? ipow(z, m) * fam.phi(n)(1.0 / z) : ipow(z, -m) * fam.phi(n)(z);
    CHECK(std::abs(psi_n(fam, n)(z) - expect) < 1e-13);
  }
}

TEST_CASE("Chebyshev case: a_n = 0 gives psi_{2m} = z^-m and psi_{2m+1} = z^{m+1}") {
  const auto fam = szego_sequence(VerblunskySequence::jacobi({-0.5, -0.5}), 8);
  for (int m = 0; m < 4; ++m) {
    CHECK(psi_n(fam, 2 * m) == LaurentPoly::monomial(-m));
    CHECK(psi_n(fam, 2 * m + 1) == LaurentPoly::monomial(m + 1));
  }
}

TEST_CASE("CMV truncation") {
  const auto seq = VerblunskySequence::jacobi({0.3, 1.7});
  const int size = 12;
  const auto t = cmv_matrices(seq, size);
  CHECK(t.size == size);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(size - 2, size - 2);
  CHECK(((t.m1 * t.m1).topLeftCorner(size - 2, size - 2) - I).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(((t.m2 * t.m2).topLeftCorner(size - 2, size - 2) - I).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((t.c - t.m1 * t.m2).cwiseAbs().maxCoeff() < 1e-15);
  // Pentadiagonal band.
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (std::abs(i - j) > 2) CHECK(t.c(i, j) == 0.0);
    }
  }
  CHECK_THROWS_AS(cmv_matrices(seq, 7), ArgumentError);
  CHECK_THROWS_AS(cmv_matrices(seq, 2), ArgumentError);
}

TEST_CASE("psi_vector") {
  const auto fam = szego_sequence(VerblunskySequence::jacobi({1.0, 0.0}), 10);
  const cplx z{0.2, 0.9};
  const auto v = psi_vector(fam, 10, z);
  for (int n = 0; n < 10; ++n) CHECK(std::abs(v(n) - psi_n(fam, n)(z)) < 1e-14);
}
