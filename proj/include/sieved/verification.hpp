#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sieved/dunkl.hpp"
#include "sieved/jacobi.hpp"
#include "sieved/report.hpp"

namespace sieved {

/// Operator identities are sampled on |z| = 1.1: every coefficient pole lies
/// on the unit circle, and sampling a Laurent identity on any circle with
/// at least 2 span + 1 points certifies it.
inline constexpr double kOperatorRadius = 1.1;

/// for_span(span, N, kOperatorRadius), or a fixed count when count > 0.
SamplePlan operator_plan(int span, int N, int count = 0);

/// Periodic trapezoid rule on theta_j = 2 pi (j + offset) / M.
struct QuadratureGrid {
  int M = 256;
  double offset = 0.37;
  bool exact = false;  // weight is a trigonometric polynomial

  std::vector<double> nodes() const;
  double weight() const;

  /// exact is true iff alpha + 1/2 and beta + 1/2 are nonnegative integers.
  static QuadratureGrid for_params(const JacobiParams& p, int M);
};

bool weight_is_trig_polynomial(const JacobiParams& p);

using CircleWeight = std::function<double(double)>;

/// sum_j f(e^{i t_j}) conj(g(e^{i t_j})) w(t_j) 2 pi / M, i.e. the integral
/// of f(e^{it}) g-bar(e^{-it}) w(t) over a period.
cplx circle_inner(const LaurentPoly& f, const LaurentPoly& g, const CircleWeight& w, const QuadratureGrid& grid);

/// Gram matrix of `fs` with all basis values cached per node.
std::vector<std::vector<cplx>> gram_matrix(const std::vector<LaurentPoly>& fs, const CircleWeight& w,
                                           const QuadratureGrid& grid);

/// Nodes and weights for integrals of f(e^{it}) rho(t; N) dt over a period.
/// Trigonometric-polynomial weights use the trapezoid grid (exact). Other
/// weights have |t - t_k|^{2 alpha+1} and |t - t_k|^{2 beta+1} endpoint
/// behaviour at t_k = pi k / N; there grid.M nodes are split evenly over the
/// 2N arcs and each arc gets a Gauss-Jacobi rule with those exponents.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // include rho(t; N)

  static QuadratureRule rho_N(const JacobiParams& p, int N, const QuadratureGrid& grid);
};

/// Gauss-Jacobi nodes/weights for (1-t)^a (1+t)^b on [-1, 1] (Golub-Welsch).
void gauss_jacobi(int n, double a, double b, std::vector<double>& t, std::vector<double>& w);

cplx rule_inner(const LaurentPoly& f, const LaurentPoly& g, const QuadratureRule& rule);
std::vector<std::vector<cplx>> gram_matrix(const std::vector<LaurentPoly>& fs, const QuadratureRule& rule);

/// max_z |op f - lambda f| / max(1, max_z |lambda f|).
double eigen_residual(const DunklOperator& op, const LaurentPoly& f, cplx lambda, const SamplePlan& plan);
/// Same for phi^{-1} op phi.
double eigen_residual_conjugated(const DunklOperator& op, const LaurentPoly& f, cplx lambda, const SamplePlan& plan);

/// Ratio (op f)(z) / f(z) at each sample, with its spread. The samples
/// must avoid zeros of f; points with |f| below 1e-8 max|f| are skipped.
struct MeasuredEigenvalue {
  cplx value = 0.0;
  double spread = 0.0;
};
MeasuredEigenvalue measure_eigenvalue(const DunklOperator& op, const LaurentPoly& f, const SamplePlan& plan,
                                      bool conjugated = false);

struct SuiteConfig {
  JacobiParams params;
  int N = 1;
  int n_max = 40;
  int samples = 0;  // 0: 2 span + 17 per check
  double tolerance = 1e-8;
  std::uint64_t seed = 42;
};

/// L(N) psi_n = lambda_n psi_n for n <= n_max, both L forms.
CheckReport eigen_l_suite(const SuiteConfig& c);
/// H(N) P_n = Lambda_n P_n in all three H constructions.
CheckReport eigen_h_suite(const SuiteConfig& c);
/// H-tilde Q_n = Lambda_{n+1} Q_n; for alpha = beta also the standardised
/// operator in all three forms with spectrum Xi_n.
CheckReport eigen_q_suite(const SuiteConfig& c);
/// Y_m P_n and Y-tilde_m Q_{n-1}: constant measured eigenvalues, at most N
/// distinct values, agreement with the closed forms, [H, Y_m] = 0 on
/// symmetric inputs.
CheckReport eigen_y_suite(const SuiteConfig& c);

struct OrthogonalityOptions {
  int M_start = 0;  // 0: chosen from degrees
  int M_max = 1 << 16;
  double target = 1e-9;  // per-entry change that stops the doubling
};

/// Gram matrices of psi, P and Q under rho(theta; N) (Q through
/// (z - 1/z) Q_n), off-diagonals and diagonal ratios against h_n.
CheckReport orthogonality_suite(const SuiteConfig& c, const OrthogonalityOptions& opt = {});

/// Weak self-adjointness of L(N) over `pairs` random Laurent pairs.
CheckReport selfadjoint_check(const SuiteConfig& c, int pairs = 100, int M = 0);

/// Coefficient identities of H(N) and L(N).
CheckReport identity_suite(const SuiteConfig& c);

/// CMV structure, plain and sieved.
CheckReport cmv_suite(const SuiteConfig& c);

/// Route equivalence, monicity, exact division and the applicable special
/// recurrences.
CheckReport three_term_suite(const SuiteConfig& c);

/// Relation suite for the dihedral algebra.
CheckReport algebra_suite(const SuiteConfig& c);

/// Name -> suite dispatch used by the command-line tool.
const std::vector<std::string>& suite_names();
CheckReport run_suite(const std::string& name, const SuiteConfig& c);

}  // namespace sieved
