#include <numbers>

#include "doctest.h"
#include "sieved/errors.hpp"
#include "sieved/jacobi.hpp"
#include "sieved/opuc.hpp"

using namespace sieved;

namespace {

const std::vector<JacobiParams> kParams{{0.0, 0.0}, {0.5, 1.5}, {1.0, 0.0}, {0.3, 1.7}};

}  // namespace

TEST_CASE("psi_case example n = 5, N = 2") {
  const auto d = psi_case(5, 2);
  CHECK(d.k == 2);
  CHECK(d.j == 1);
  CHECK(d.nu == 1);
  CHECK(d.power_sign == -1);
  CHECK(d.case_id == PsiCase::n_odd_k_even);
  // The printed six-branch table gives (0, +1) here, which does not
  // reconstruct psi_5.
  const auto printed = printed_psi_case(5, 2);
  CHECK(printed.nu == 0);
  CHECK(printed.power_sign == 1);
}

TEST_CASE("parity table reconstructs every sieved psi_n") {
  for (const auto& p : kParams) {
    for (int N = 1; N <= 6; ++N) {
      const SievedFamily fam(p, N, 40);
      for (int n = 0; n <= 40; ++n) {
        const auto d = psi_case(n, N);
        CHECK(d.n == N * d.k + d.j);
        const LaurentPoly diff = reconstruct_psi(d, fam.plain_psi(d.k)) - fam.psi(n);
        CHECK(diff.max_abs_coeff() <= 1e-12 * fam.psi(n).max_abs_coeff());
      }
    }
  }
}

TEST_CASE("printed table disagrees somewhere") {
  const JacobiParams p{0.3, 1.7};
  const SievedFamily fam(p, 2, 4);
  const auto d = printed_psi_case(2, 2);
  CHECK((reconstruct_psi(d, fam.plain_psi(d.k)) - fam.psi(2)).max_abs_coeff() > 0.1);
}

TEST_CASE("sieved Phi_n(z;N) = z^j Phi_k(z^N)") {
  for (const auto& p : kParams) {
    for (int N = 1; N <= 5; ++N) {
      const auto plain = szego_sequence(VerblunskySequence::jacobi(p), 10);
      for (int n = 0; n <= 30; ++n) {
        const int k = n / N;
        const int j = n % N;
        if (k > 10) continue;
        const LaurentPoly expect = plain.phi(k).substitute_power(N).shift(j);
        CHECK((sieved_phi(p, N, n) - expect).max_abs_coeff() < 1e-13);
      }
    }
  }
}

TEST_CASE("sieved psi agrees with the Szego recurrence on sieved parameters") {
  for (int N = 1; N <= 4; ++N) {
    const JacobiParams p{0.3, 1.7};
    const auto direct = szego_sequence(VerblunskySequence::sieved_jacobi(p, N), 20);
    const SievedFamily fam(p, N, 20);
    for (int n = 0; n <= 20; ++n) {
      CHECK((fam.psi(n) - psi_n(direct, n)).max_abs_coeff() < 1e-13);
      CHECK(fam.a(n) == sieved_verblunsky(p, N, n));
      CHECK((sieved_psi(p, N, n) - fam.psi(n)).max_abs_coeff() < 1e-13);
    }
  }
}

TEST_CASE("rotation phases have unit modulus and match q^{-j nu}") {
  for (int N = 2; N <= 5; ++N) {
    const SievedFamily fam({0.5, 1.5}, N, 20);
    const SamplePlan plan = SamplePlan::for_span(40, N);
    const auto t = PhaseTable::measure(fam, 20, plan);
    CHECK(t.max_modulus_defect < 1e-12);
    CHECK(t.max_spread < 1e-10);
    for (int n = 0; n <= 20; ++n) {
      const int nu = psi_case(n, N).nu;
      for (int j = 0; j < N; ++j) {
        CHECK(std::abs(t.inverse_rotation.at({n, j}) - root_of_unity(N, -static_cast<long long>(j) * nu)) < 1e-10);
      }
    }
  }
}

TEST_CASE("weights") {
  const JacobiParams p{0.5, 1.5};
  const double t = 0.4;
  CHECK(weight_rho(p, t) == doctest::Approx(std::pow(1 - std::cos(t), 1.0) * std::pow(1 + std::cos(t), 2.0)));
  CHECK(weight_rho_N(p, 3, t) == doctest::Approx(weight_rho(p, 3 * t)));
  CHECK(weights(WeightKind::rho_N, p, 3, t) == weight_rho_N(p, 3, t));
  const double x = 2 * std::cos(t);
  CHECK(weight_w(p, 1, x) == doctest::Approx(weight_rho(p, t) / std::sqrt(4 - x * x)));
  CHECK_THROWS_AS(weight_w(p, 1, 2.0), DomainError);
  CHECK_THROWS_AS(weights(WeightKind::rho, {-1.6, 0.0}, 1, 0.3), DomainError);
  CHECK(weight_rho(p, 0.0) == 0.0);
  CHECK(weight_rho({-0.5, -0.5}, 1.234) == 1.0);
}

TEST_CASE("psi case names") {
  CHECK(to_string(PsiCase::n_even_k_even) == "n_even_k_even");
  CHECK(to_string(PsiCase::n_odd_k_odd) == "n_odd_k_odd");
}
