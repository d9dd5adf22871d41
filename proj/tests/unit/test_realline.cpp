#include "doctest.h"
#include "sieved/dunkl.hpp"
#include "sieved/errors.hpp"
#include "sieved/realline.hpp"

using namespace sieved;

namespace {

// Chebyshev U_n(x/2) coefficients from U_{n+1} = x U_n - U_{n-1}.
std::vector<std::vector<double>> chebyshev_u(int n_max) {
  std::vector<std::vector<double>> u{{1.0}, {0.0, 1.0}};
  for (int n = 1; n < n_max; ++n) {
    std::vector<double> next(static_cast<std::size_t>(n + 2), 0.0);
    for (std::size_t i = 0; i < u[n].size(); ++i) next[i + 1] += u[n][i];
    for (std::size_t i = 0; i < u[n - 1].size(); ++i) next[i] -= u[n - 1][i];
    u.push_back(next);
  }
  return u;
}

double eigen_gap(const DunklOperator& op, const LaurentPoly& f, double lambda, int N) {
  const auto zs = SamplePlan::for_span(f.span() + 8 * N + 4, N, 1.1).points();
  const auto v = op.apply_many(f, zs);
  double d = 0.0;
  double s = 1.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    d = std::max(d, std::abs(v[i] - lambda * f(zs[i])));
    s = std::max(s, std::abs(lambda * f(zs[i])));
  }
  return d / s;
}

}  // namespace

TEST_CASE("Chebyshev weight: P_n = z^n + z^-n and Q_n = U_n(x/2)") {
  const JacobiParams p{-0.5, -0.5};
  const auto U = chebyshev_u(12);
  for (int N = 1; N <= 4; ++N) {
    const SymmetricFamily P(FamilyKind::P, p, N, 10);
    const SymmetricFamily Q(FamilyKind::Q, p, N, 10);
    for (int n = 1; n <= 10; ++n) {
      CHECK(P[n].z_form == LaurentPoly::monomial(n) + LaurentPoly::monomial(-n));
    }
    for (int n = 0; n <= 10; ++n) {
      REQUIRE(Q[n].x_coeffs.size() == U[n].size());
      for (std::size_t i = 0; i < U[n].size(); ++i) CHECK(std::abs(Q[n].x_coeffs[i] - U[n][i]) < 1e-12);
    }
  }
}

TEST_CASE("routes agree, families are monic and symmetric") {
  for (const JacobiParams p : {JacobiParams{0.3, 1.7}, JacobiParams{1.0, 0.0}}) {
    for (int N = 1; N <= 4; ++N) {
      const SievedFamily fam(p, N, 40);
      for (int n = 0; n <= 15; ++n) {
        for (auto f : {poly_P, poly_Q}) {
          const auto a = f(fam, n, Route::psi);
          const auto b = f(fam, n, Route::phi);
          CHECK((a.z_form - b.z_form).max_abs_coeff() < 1e-12 * std::max(1.0, a.z_form.max_abs_coeff()));
          CHECK(is_symmetric(a.z_form, 1e-12));
          REQUIRE(a.x_coeffs.size() == static_cast<std::size_t>(n + 1));
          CHECK(std::abs(a.x_coeffs.back() - 1.0) < 1e-12);
        }
        const auto prec = q_precursor(fam, n);
        CHECK((prec - phi_of_z() * poly_Q(fam, n).z_form).max_abs_coeff() < 1e-11 * std::max(1.0, prec.max_abs_coeff()));
      }
    }
  }
}

TEST_CASE("P_1 = x - 2 a_0 for every N") {
  const JacobiParams p{0.3, 1.7};
  for (int N = 1; N <= 5; ++N) {
    const SymmetricFamily P(FamilyKind::P, p, N, 2);
    CHECK(P[1].x_coeffs[0].real() == doctest::Approx(-2.0 * sieved_verblunsky(p, N, 0)));
  }
}

TEST_CASE("recurrence-u example: sieved_ultra_1, N = 3") {
  const JacobiParams p{0.5, 0.5};
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_1, p, 3, 1) == doctest::Approx(2.0));
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_1, p, 3, 2) == 1.0);
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_1, p, 3, 3) == doctest::Approx(2.0 / 4.0));
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_1, p, 3, 4) == doctest::Approx(6.0 / 4.0));
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_1, p, 3, 5) == 1.0);
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_2, p, 3, 2) == doctest::Approx(6.0 / 4.0));
  CHECK(special_recurrence_u(RecurrenceFamily::sieved_ultra_2, p, 3, 4) == 1.0);
}

TEST_CASE("recurrence preconditions") {
  CHECK_THROWS_AS(special_recurrence_u(RecurrenceFamily::generalized_ultra, {0.3, 1.7}, 3, 1), ArgumentError);
  CHECK_THROWS_AS(special_recurrence_u(RecurrenceFamily::sieved_ultra_1, {0.3, 1.7}, 3, 1), ArgumentError);
  CHECK_THROWS_AS(special_recurrence_u(RecurrenceFamily::sieved_ultra_2, {0.5, 0.5}, 1, 1), ArgumentError);
}

TEST_CASE("printed and corrected odd u coincide when beta = 0") {
  const JacobiParams p{1.0, 0.0};
  for (int n = 1; n < 20; n += 2) {
    CHECK(special_recurrence_u(RecurrenceFamily::generalized_ultra, p, 2, n, FormulaVariant::printed) ==
          doctest::Approx(special_recurrence_u(RecurrenceFamily::generalized_ultra, p, 2, n)).epsilon(1e-14));
  }
}

TEST_CASE("generalized ultraspherical recurrence: corrected passes, printed fails") {
  for (const JacobiParams p : {JacobiParams{0.3, 1.7}, JacobiParams{0.5, 1.5}, JacobiParams{1.0, 0.5}}) {
    const SymmetricFamily P(FamilyKind::P, p, 2, 30);
    const auto r = check_three_term(P, RecurrenceFamily::generalized_ultra, p, 2, 1e-9);
    REQUIRE(r.details.size() == 2);
    CHECK_FALSE(r.details[0].pass);
    CHECK(r.details[1].pass);
    const auto measured = measured_u(P);
    for (int n = 1; n < 30; ++n) {
      CHECK(measured[static_cast<std::size_t>(n)] ==
            doctest::Approx(special_recurrence_u(RecurrenceFamily::generalized_ultra, p, 2, n)).epsilon(1e-9));
    }
  }
}

TEST_CASE("sieved ultraspherical recurrences") {
  for (int N = 2; N <= 6; ++N) {
    const JacobiParams p{0.7, 0.7};
    const SymmetricFamily P(FamilyKind::P, p, N, 30);
    const SymmetricFamily Q(FamilyKind::Q, p, N, 30);
    CHECK(check_three_term(P, RecurrenceFamily::sieved_ultra_1, p, N).pass);
    CHECK(check_three_term(Q, RecurrenceFamily::sieved_ultra_2, p, N).pass);
  }
}

TEST_CASE("special operators") {
  const JacobiParams p{0.3, 1.7};
  const SymmetricFamily P(FamilyKind::P, p, 2, 12);
  const EigenvalueTable ev(p, 2);
  const auto corrected = special_operator(SpecialOperator::H_gu, p, 2, FormulaVariant::corrected);
  const auto printed = special_operator(SpecialOperator::H_gu, p, 2, FormulaVariant::printed);
  double worst_printed = 0.0;
  for (int n = 0; n <= 12; ++n) {
    CHECK(eigen_gap(corrected, P[n].z_form, ev.Lambda(n), 2) < 1e-10);
    worst_printed = std::max(worst_printed, eigen_gap(printed, P[n].z_form, ev.Lambda(n), 2));
  }
  CHECK(worst_printed > 1e-3);

  const JacobiParams u{0.6, 0.6};
  for (int N = 2; N <= 4; ++N) {
    const SymmetricFamily Pu(FamilyKind::P, u, N, 10);
    const SymmetricFamily Qu(FamilyKind::Q, u, N, 10);
    const EigenvalueTable evu(u, N);
    for (const bool rot : {false, true}) {
      const auto HP = special_operator(SpecialOperator::H_ultra_P, u, N, FormulaVariant::corrected, rot);
      const auto HQ = special_operator(SpecialOperator::H_ultra_Q, u, N, FormulaVariant::corrected, rot);
      for (int n = 0; n <= 10; ++n) {
        CHECK(eigen_gap(HP, Pu[n].z_form, evu.Lambda(n), N) < 1e-9);
        CHECK(eigen_gap(HQ, Qu[n].z_form, evu.Xi(n), N) < 1e-9);
      }
    }
  }
}
