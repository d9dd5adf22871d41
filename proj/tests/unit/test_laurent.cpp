#include <cmath>

#include "doctest.h"
#include "sieved/errors.hpp"
#include "sieved/laurent.hpp"
#include "sieved/panel.hpp"

using namespace sieved;

namespace {

cplx direct(const LaurentPoly& f, cplx z) {
  cplx s = 0.0;
  for (const auto& t : f.terms()) s += t.coeff * std::pow(z, t.exp);
  return s;
}

const std::vector<cplx> probes{{0.9, 0.2}, {-1.3, 0.4}, {0.1, -1.1}, {2.0, 0.0}};

}  // namespace

TEST_CASE("construction and exponents") {
  const LaurentPoly z = LaurentPoly::monomial(1);
  const LaurentPoly f = z + LaurentPoly::monomial(-3, 2.0);
  CHECK(f.min_exp() == -3);
  CHECK(f.max_exp() == 1);
  CHECK(f.span() == 4);
  CHECK(f.coeff(-3) == cplx(2.0));
  CHECK(f.coeff(0) == cplx(0.0));
  const LaurentPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.min_exp() == 0);
  CHECK(zero.max_exp() == 0);
  CHECK((f - f).is_zero());
  CHECK(LaurentPoly::from_dense(-1, {1.0, 0.0, 3.0}) == LaurentPoly(std::map<int, cplx>{{-1, 1.0}, {1, 3.0}}));
}

TEST_CASE("x(z)^2 = z^2 + 2 + z^-2") {
  const LaurentPoly x = x_of_z();
  const LaurentPoly x2 = x * x;
  CHECK(x2 == LaurentPoly(std::map<int, cplx>{{-2, 1.0}, {0, 2.0}, {2, 1.0}}));
  CHECK((phi_of_z() * phi_of_z()) == LaurentPoly(std::map<int, cplx>{{-2, 1.0}, {0, -2.0}, {2, 1.0}}));
}

TEST_CASE("evaluation matches the defining sum on a random panel") {
  for (const auto& f : random_panel(7, 10)) {
    for (const cplx z : probes) CHECK(std::abs(f(z) - direct(f, z)) < 1e-10 * std::max(1.0, std::abs(direct(f, z))));
  }
}

TEST_CASE("ring laws hold pointwise") {
  const auto panel = random_panel(11, 6, -4, 4);
  for (std::size_t i = 0; i + 2 < panel.size(); ++i) {
    const auto& a = panel[i];
    const auto& b = panel[i + 1];
    const auto& c = panel[i + 2];
    for (const cplx z : probes) {
      CHECK(std::abs((a * b)(z) - a(z) * b(z)) < 1e-10 * std::max(1.0, std::abs(a(z) * b(z))));
      CHECK(std::abs((a * (b + c))(z) - (a * b + a * c)(z)) < 1e-9 * std::max(1.0, std::abs((a * b)(z))));
    }
  }
}

TEST_CASE("derivative: exact monomial rule and finite differences") {
  CHECK(LaurentPoly::monomial(-2).derivative() == LaurentPoly::monomial(-3, -2.0));
  CHECK(LaurentPoly::monomial(3).derivative(2) == LaurentPoly::monomial(1, 6.0));
  CHECK(LaurentPoly(5.0).derivative().is_zero());
  const auto f = random_panel(3, 1, -5, 5).front();
  const cplx z{1.1, 0.3};
  const double h = 1e-6;
  const cplx fd = (f(z + h) - f(z - h)) / (2 * h);
  CHECK(std::abs(f.derivative()(z) - fd) < 1e-5 * std::abs(fd));
}

TEST_CASE("substitutions agree with the point maps") {
  const auto f = random_panel(5, 1, -6, 6).front();
  for (int N = 1; N <= 5; ++N) {
    for (int j = 0; j < N; ++j) {
      for (const auto& g : {GroupElement::rotation(j, N), GroupElement::reflection(j, N)}) {
        for (const cplx z : probes) CHECK(std::abs(f.substitute(g)(z) - f(g.map(z))) < 1e-9 * std::abs(f(g.map(z))));
      }
    }
  }
  const cplx z{0.8, -0.5};
  CHECK(std::abs(f.substitute_power(3)(z) - f(ipow(z, 3))) < 1e-9 * std::abs(f(ipow(z, 3))));
  CHECK(std::abs(f.substitute_power(-2)(z) - f(ipow(z, -2))) < 1e-9 * std::abs(f(ipow(z, -2))));
  CHECK(std::abs(f.reflect()(z) - f(1.0 / z)) < 1e-9 * std::abs(f(1.0 / z)));
  CHECK(std::abs(f.shift(4)(z) - ipow(z, 4) * f(z)) < 1e-9 * std::abs(ipow(z, 4) * f(z)));
  CHECK(std::abs(f.scale_argument(cplx(0, 2))(z) - f(cplx(0, 2) * z)) < 1e-9 * std::abs(f(cplx(0, 2) * z)));
  CHECK_THROWS_AS(f.substitute_power(0), ArgumentError);
}

TEST_CASE("ipow") {
  const cplx z{0.6, 0.9};
  for (int n = -7; n <= 7; ++n) CHECK(std::abs(ipow(z, n) - std::pow(z, n)) < 1e-13 * std::abs(std::pow(z, n)));
}

TEST_CASE("x basis round trip and symmetry") {
  // Chebyshev: z^n + z^-n = 2 T_n(x/2); T_3(x/2) * 2 = x^3 - 3x.
  const LaurentPoly f = LaurentPoly::monomial(3) + LaurentPoly::monomial(-3);
  const auto x = to_x_basis(f);
  REQUIRE(x.size() == 4);
  CHECK(std::abs(x[0]) < 1e-14);
  CHECK(std::abs(x[1] + 3.0) < 1e-14);
  CHECK(std::abs(x[2]) < 1e-14);
  CHECK(std::abs(x[3] - 1.0) < 1e-14);
  CHECK(from_x_basis(x) == f);
  CHECK(is_symmetric(f));
  CHECK_FALSE(is_symmetric(LaurentPoly::monomial(1)));
  CHECK_THROWS_AS(to_x_basis(LaurentPoly::monomial(1)), SymmetryError);
  for (const auto& g : random_panel(9, 5, -6, 6)) {
    const LaurentPoly s = g + g.reflect();
    CHECK((from_x_basis(to_x_basis(s)) - s).max_abs_coeff() < 1e-10 * s.max_abs_coeff());
  }
}

TEST_CASE("exact division leaves no remainder") {
  const auto panel = random_panel(13, 4, -3, 5);
  for (const auto& p : panel) {
    const LaurentPoly d = phi_of_z();
    const DivisionResult r = divide(p * d, d);
    CHECK(r.remainder.max_abs_coeff() < 1e-10);
    CHECK((r.quotient - p).max_abs_coeff() < 1e-10);
  }
  CHECK_THROWS(divide(LaurentPoly::monomial(1), LaurentPoly()));
}

TEST_CASE("sample plans avoid the 2N-th roots of unity") {
  for (int N = 1; N <= 6; ++N) {
    for (int span : {0, 5, 40}) {
      const SamplePlan plan = SamplePlan::for_span(span, N);
      CHECK(plan.count >= 2 * span + 17);
      for (const cplx z : plan.points()) {
        for (int r = 0; r < 2 * N; ++r) CHECK(std::abs(z - root_of_unity(2 * N, r)) > plan.excluded_pole_tolerance);
      }
    }
  }
  SamplePlan bad;
  bad.count = 8;
  bad.phase_offset = 0.0;
  bad.sieve_order = 2;
  CHECK_THROWS_AS(bad.validate(), PlanError);
  bad.radius = 1.1;
  CHECK_NOTHROW(bad.validate());
}

TEST_CASE("residual on samples is relative") {
  const SamplePlan plan = SamplePlan::for_span(4, 1);
  auto f = [](cplx z) { return 1e6 * z; };
  auto g = [](cplx z) { return 1e6 * z + 1.0; };
  CHECK(max_residual_on_samples(f, g, plan) < 2e-6);
  CHECK(max_residual_on_samples(g, g, plan) == 0.0);
}

TEST_CASE("cleanup drops small coefficients only") {
  const LaurentPoly f(std::map<int, cplx>{{0, 1.0}, {1, 1e-14}, {2, -2.0}});
  const LaurentPoly g = f.cleanup(1e-12);
  CHECK(g.size() == 2);
  CHECK(g.coeff(2) == cplx(-2.0));
}
