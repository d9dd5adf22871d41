#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sieved/group.hpp"
#include "sieved/laurent.hpp"
#include "sieved/operator.hpp"
#include "sieved/params.hpp"
#include "sieved/report.hpp"

namespace sieved {

/// scalar * z^power * g, acting as f -> scalar z^power f(g(z)).
/// M_j = z R_j is the word (1, 1, R_j).
struct DihedralWord {
  cplx scalar = 1.0;
  int power = 0;
  GroupElement element;

  static DihedralWord of(const GroupElement& g) { return {1.0, 0, g}; }
  static DihedralWord M(int j, int N) { return {1.0, 1, GroupElement::reflection(j, N)}; }

  cplx apply(const LaurentPoly& f, cplx z) const;
  DunklOperator to_operator() const;
  std::string to_string() const;
};

/// (a b) f = a(b f), reduced to a single word.
DihedralWord compose_group(const DihedralWord& a, const DihedralWord& b);

/// Same element and power, scalars within tol.
bool same_word(const DihedralWord& a, const DihedralWord& b, double tol = 1e-12);

/// All 2N elements of D_N.
std::vector<GroupElement> dihedral_elements(int N);

/// Closure of {R_0, R_1} under products.
std::vector<GroupElement> generated_by_R0_R1(int N);

struct RelationOptions {
  std::uint64_t seed = 42;
  int panel_size = 20;
  double tolerance = 1e-10;
  double radius = 1.1;
};

/// Word relations (products of R, T, M) checked symbolically and on a
/// random panel, for every index pair, N given.
CheckReport group_relation_suite(int N, const RelationOptions& opt = {});

/// Operator relations: [L, T_j], the anticommutators of L with R_j and
/// M_j, and for N = 1 the K relations. Each is evaluated on the panel.
CheckReport operator_relation_suite(const JacobiParams& p, int N, const RelationOptions& opt = {});

/// Both of the above.
CheckReport relation_suite(const JacobiParams& p, int N, const RelationOptions& opt = {});

/// Right-hand side of {M_j, L(N)} for odd N as usually printed: the phase on
/// T_{j+k} is q^{j+kJ}, J = (N-1)/2.
DunklOperator acm_odd_2_printed(const JacobiParams& p, int N, int j);
/// The phase that actually holds: q^{kJ}.
DunklOperator acm_odd_2_corrected(const JacobiParams& p, int N, int j);

}  // namespace sieved
