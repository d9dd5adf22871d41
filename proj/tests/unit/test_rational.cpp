#include "doctest.h"
#include "sieved/rational.hpp"

using namespace sieved;

namespace {

RationalFunction sample() {
  // (z^2 + 1) / (z - 3)
  return {LaurentPoly::monomial(2) + LaurentPoly(1.0), LaurentPoly::monomial(1) - LaurentPoly(3.0)};
}

const std::vector<cplx> probes{{0.4, 0.7}, {-1.2, 0.1}, {1.5, -0.9}};

}  // namespace

TEST_CASE("evaluation") {
  const auto r = sample();
  for (const cplx z : probes) CHECK(std::abs(r(z) - (z * z + 1.0) / (z - 3.0)) < 1e-14);
  CHECK(RationalFunction(2.5)(probes[0]) == cplx(2.5));
  CHECK(RationalFunction().is_zero());
}

TEST_CASE("derivative against the quotient rule") {
  const auto r = sample();
  for (const cplx z : probes) {
    const cplx expected = (2.0 * z * (z - 3.0) - (z * z + 1.0)) / ((z - 3.0) * (z - 3.0));
    CHECK(std::abs(r.derivative()(z) - expected) < 1e-13);
  }
}

TEST_CASE("substitution") {
  const auto r = sample();
  for (int N = 1; N <= 4; ++N) {
    const auto g = GroupElement::reflection(1, N);
    for (const cplx z : probes) CHECK(std::abs(r.substitute(g)(z) - r(g.map(z))) < 1e-12);
  }
}

TEST_CASE("arithmetic is pointwise") {
  const auto a = sample();
  const RationalFunction b(LaurentPoly::monomial(-1, 2.0), LaurentPoly::monomial(1) + LaurentPoly(1.0));
  for (const cplx z : probes) {
    CHECK(std::abs((a * b)(z) - a(z) * b(z)) < 1e-13);
    CHECK(std::abs((a + b)(z) - (a(z) + b(z))) < 1e-13);
    CHECK(std::abs((a - b)(z) - (a(z) - b(z))) < 1e-13);
    CHECK(std::abs((-a)(z) + a(z)) < 1e-14);
    CHECK(std::abs((a * cplx(0, 2))(z) - cplx(0, 2) * a(z)) < 1e-13);
  }
}

TEST_CASE("relative denominator flags poles") {
  const auto r = sample();
  CHECK(r.relative_denominator(3.0) < 1e-15);
  CHECK(r.relative_denominator(probes[0]) > 0.1);
}
