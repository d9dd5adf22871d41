#include "doctest.h"
#include "sieved/algebra.hpp"
#include "sieved/panel.hpp"

using namespace sieved;

namespace {

const CheckDetail* find(const CheckReport& r, const std::string& name) {
  for (const auto& d : r.details) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("group size and generation by R_0, R_1") {
  for (int N = 1; N <= 6; ++N) {
    CHECK(dihedral_elements(N).size() == static_cast<std::size_t>(2 * N));
    CHECK(generated_by_R0_R1(N).size() == static_cast<std::size_t>(2 * N));
  }
}

TEST_CASE("words: M_j = z R_j and products") {
  const int N = 4;
  const auto f = random_panel(5, 1, -4, 4).front();
  const cplx z{0.9, 0.35};
  for (int j = 0; j < N; ++j) {
    const auto M = DihedralWord::M(j, N);
    CHECK(std::abs(M.apply(f, z) - z * f(root_of_unity(N, j) / z)) < 1e-12);
    CHECK(std::abs(M.to_operator().apply(f, z) - M.apply(f, z)) < 1e-12);
    for (int k = 0; k < N; ++k) {
      const auto Mk = DihedralWord::M(k, N);
      const auto prod = compose_group(M, Mk);
      // (M_j M_k) f = M_j (M_k f), evaluated directly.
      const cplx w = root_of_unity(N, j) / z;
      const cplx direct = z * (w * f(root_of_unity(N, k) / w));
      CHECK(std::abs(prod.apply(f, z) - direct) < 1e-11);
      // M_j M_k = q^j T_{k-j}
      const DihedralWord expect{root_of_unity(N, j), 0, GroupElement::rotation(k - j, N)};
      CHECK(same_word(prod, expect));
    }
  }
  CHECK_FALSE(DihedralWord::M(1, 3).to_string().empty());
}

TEST_CASE("group relation suite: only the printed R_k M_j phase fails") {
  for (int N = 1; N <= 6; ++N) {
    const auto r = group_relation_suite(N);
    for (const auto& d : r.details) {
      const bool printed = d.name.find("(printed)") != std::string::npos;
      if (printed && N > 1) {
        CHECK_FALSE(d.pass);
      } else {
        CHECK_MESSAGE(d.pass, d.name, " N=", N, " residual=", d.residual);
      }
    }
  }
}

TEST_CASE("operator relations, even N") {
  const auto r = operator_relation_suite({0.3, 1.7}, 4);
  CHECK(r.pass);
  CHECK(find(r, "[L, T_j] = 0") != nullptr);
}

TEST_CASE("operator relations, odd N: printed phase fails unless alpha = beta") {
  const auto r = operator_relation_suite({0.3, 1.7}, 3);
  const auto* printed = find(r, "{M_j, L} (odd N, printed phase q^{j+kJ})");
  const auto* corrected = find(r, "{M_j, L} (odd N, corrected phase q^{kJ})");
  REQUIRE(printed != nullptr);
  REQUIRE(corrected != nullptr);
  CHECK_FALSE(printed->pass);
  CHECK(corrected->pass);
  const auto sym = operator_relation_suite({0.5, 0.5}, 3);
  CHECK(sym.pass);
}

TEST_CASE("N = 1 relations for K") {
  const auto r = operator_relation_suite({0.3, 1.7}, 1);
  CHECK(r.pass);
  CHECK(find(r, "L(1) = K (panel)") != nullptr);
}
