#include "sieved/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sieved/algebra.hpp"
#include "sieved/errors.hpp"
#include "sieved/opuc.hpp"
#include "sieved/panel.hpp"
#include "sieved/realline.hpp"

namespace sieved {

SamplePlan operator_plan(int span, int N, int count) {
  SamplePlan plan = SamplePlan::for_span(span, N, kOperatorRadius);
  if (count > 0) {
    plan.count = count;
    plan.validate();
  }
  return plan;
}

std::vector<double> QuadratureGrid::nodes() const {
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) t.push_back(2.0 * std::numbers::pi * (j + offset) / M);
  return t;
}

double QuadratureGrid::weight() const { return 2.0 * std::numbers::pi / M; }

bool weight_is_trig_polynomial(const JacobiParams& p) {
  auto nonneg_int = [](double v) { return v >= 0.0 && std::abs(v - std::round(v)) < 1e-12; };
  return nonneg_int(p.alpha + 0.5) && nonneg_int(p.beta + 0.5);
}

QuadratureGrid QuadratureGrid::for_params(const JacobiParams& p, int M) {
  if (M < 1) throw ArgumentError("QuadratureGrid: M must be positive");
  QuadratureGrid g;
  g.M = M;
  g.exact = weight_is_trig_polynomial(p);
  return g;
}

namespace {

std::vector<cplx> values_on(const LaurentPoly& f, const std::vector<cplx>& zs) {
  std::vector<cplx> v;
  v.reserve(zs.size());
  for (const cplx z : zs) v.push_back(f(z));
  return v;
}

std::vector<cplx> circle_points(const QuadratureGrid& grid) {
  std::vector<cplx> zs;
  for (const double t : grid.nodes()) zs.push_back(std::polar(1.0, t));
  return zs;
}

std::vector<double> weight_values(const CircleWeight& w, const QuadratureGrid& grid) {
  std::vector<double> v;
  for (const double t : grid.nodes()) v.push_back(w(t));
  return v;
}

cplx inner_from_values(const std::vector<cplx>& f, const std::vector<cplx>& g, const std::vector<double>& w,
                       double h) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]) * w[i];
  return s * h;
}

double residual_from_values(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs) {
  double diff = 0.0;
  double scale = 1.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
    scale = std::max(scale, std::abs(rhs[i]));
  }
  return diff / scale;
}

CheckReport make_report(const std::string& suite, const SuiteConfig& c) {
  CheckReport r;
  r.suite = suite;
  r.params = c.params;
  r.N = c.N;
  r.n_max = c.n_max;
  r.seed = c.seed;
  r.tolerance = c.tolerance;
  return r;
}

void validate_config(const SuiteConfig& c) {
  if (c.N < 1) throw ArgumentError("N must be >= 1");
  if (c.n_max < 0) throw ArgumentError("nmax must be >= 0");
  if (c.samples < 0) throw ArgumentError("samples must be >= 0");
  if (!(c.tolerance > 0.0)) throw ArgumentError("tolerance must be positive");
}

/// Tracks a maximum together with the index where it first crossed tol.
struct Sweep {
  double worst = 0.0;
  std::string where;
  void update(double v, double tol, const std::string& at) {
    if (!(v <= tol) && where.empty()) where = at;
    if (std::isnan(v) || v > worst) worst = v;
  }
  std::string note(const std::string& base = "") const {
    if (where.empty()) return base;
    return base.empty() ? "first failure at " + where : base + "; first failure at " + where;
  }
};

std::string at_n(int n) { return "n=" + std::to_string(n); }

std::vector<LaurentPoly> symmetric_panel(std::uint64_t seed, int count) {
  std::vector<LaurentPoly> out;
  for (const auto& f : random_panel(seed, count)) out.push_back(f + f.reflect());
  return out;
}

}  // namespace

cplx circle_inner(const LaurentPoly& f, const LaurentPoly& g, const CircleWeight& w, const QuadratureGrid& grid) {
  const auto zs = circle_points(grid);
  return inner_from_values(values_on(f, zs), values_on(g, zs), weight_values(w, grid), grid.weight());
}

std::vector<std::vector<cplx>> gram_matrix(const std::vector<LaurentPoly>& fs, const CircleWeight& w,
                                           const QuadratureGrid& grid) {
  const auto zs = circle_points(grid);
  const auto wv = weight_values(w, grid);
  std::vector<std::vector<cplx>> vals;
  for (const auto& f : fs) vals.push_back(values_on(f, zs));
  std::vector<std::vector<cplx>> G(fs.size(), std::vector<cplx>(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      G[i][j] = inner_from_values(vals[i], vals[j], wv, grid.weight());
      G[j][i] = std::conj(G[i][j]);
    }
  }
  return G;
}

void gauss_jacobi(int n, double a, double b, std::vector<double>& t, std::vector<double>& w) {
  if (n < 1) throw ArgumentError("gauss_jacobi: need at least one node");
  if (!(a > -1.0 && b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    // The k = 1 form has the (k + a + b)/(s - 1) factor cancelled, which
    // matters when a + b = -1.
    const double beta = k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0))
                               : 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  t.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 1) {
    t[0] = diag(0);
    w[0] = mu0;
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  for (int k = 0; k < n; ++k) {
    t[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    w[static_cast<std::size_t>(k)] = mu0 * v * v;
  }
}

QuadratureRule QuadratureRule::rho_N(const JacobiParams& p, int N, const QuadratureGrid& grid) {
  if (N < 1) throw ArgumentError("QuadratureRule: N must be >= 1");
  QuadratureRule rule;
  if (grid.exact) {
    const double h = grid.weight();
    for (const double t : grid.nodes()) {
      rule.nodes.push_back(t);
      rule.weights.push_back(h * weight_rho_N(p, N, t));
    }
    return rule;
  }
  if (p.alpha + 0.5 <= -1.0 || p.beta + 0.5 <= -1.0) {
    throw DomainError("weights: exponents alpha + 1/2 and beta + 1/2 must exceed -1");
  }
  // On arc k, u = N t - pi k runs over [0, pi] and
  // rho = 2^{alpha+beta+1} sin(u/2)^{eL} cos(u/2)^{eR}, where the exponent
  // pair (2 alpha+1, 2 beta+1) swaps with the parity of k.
  const int per_arc = std::max(8, grid.M / (2 * N));
  const double ea = 2.0 * p.alpha + 1.0;
  const double eb = 2.0 * p.beta + 1.0;
  const double pi = std::numbers::pi;
  const double scale = std::pow(2.0, p.alpha + p.beta + 1.0) * pi / (2.0 * N);
  std::vector<double> t_even, w_even, t_odd, w_odd;
  gauss_jacobi(per_arc, eb, ea, t_even, w_even);
  gauss_jacobi(per_arc, ea, eb, t_odd, w_odd);
  for (int k = 0; k < 2 * N; ++k) {
    const bool even = k % 2 == 0;
    const double eL = even ? ea : eb;
    const double eR = even ? eb : ea;
    const auto& ts = even ? t_even : t_odd;
    const auto& ws = even ? w_even : w_odd;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double t = ts[i];
      const double left = std::sin(pi * (1.0 + t) / 4.0) / (1.0 + t);
      const double right = std::sin(pi * (1.0 - t) / 4.0) / (1.0 - t);
      rule.nodes.push_back((pi * k + pi * (1.0 + t) / 2.0) / N);
      rule.weights.push_back(scale * ws[i] * std::pow(left, eL) * std::pow(right, eR));
    }
  }
  return rule;
}

cplx rule_inner(const LaurentPoly& f, const LaurentPoly& g, const QuadratureRule& rule) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const cplx z = std::polar(1.0, rule.nodes[i]);
    s += f(z) * std::conj(g(z)) * rule.weights[i];
  }
  return s;
}

std::vector<std::vector<cplx>> gram_matrix(const std::vector<LaurentPoly>& fs, const QuadratureRule& rule) {
  std::vector<cplx> zs;
  for (const double t : rule.nodes) zs.push_back(std::polar(1.0, t));
  std::vector<std::vector<cplx>> vals;
  for (const auto& f : fs) vals.push_back(values_on(f, zs));
  std::vector<std::vector<cplx>> G(fs.size(), std::vector<cplx>(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      G[i][j] = inner_from_values(vals[i], vals[j], rule.weights, 1.0);
      G[j][i] = std::conj(G[i][j]);
    }
  }
  return G;
}

double eigen_residual(const DunklOperator& op, const LaurentPoly& f, cplx lambda, const SamplePlan& plan) {
  const auto zs = plan.points();
  const auto lhs = op.apply_many(f, zs);
  std::vector<cplx> rhs;
  for (const cplx z : zs) rhs.push_back(lambda * f(z));
  return residual_from_values(lhs, rhs);
}

double eigen_residual_conjugated(const DunklOperator& op, const LaurentPoly& f, cplx lambda, const SamplePlan& plan) {
  const auto zs = plan.points();
  auto lhs = op.apply_many(phi_of_z() * f, zs);
  std::vector<cplx> rhs;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const cplx phi = zs[i] - 1.0 / zs[i];
    if (std::abs(phi) < plan.excluded_pole_tolerance) throw PlanError("conjugated operator sampled at z = +-1");
    lhs[i] /= phi;
    rhs.push_back(lambda * f(zs[i]));
  }
  return residual_from_values(lhs, rhs);
}

MeasuredEigenvalue measure_eigenvalue(const DunklOperator& op, const LaurentPoly& f, const SamplePlan& plan,
                                      bool conjugated) {
  const auto zs = plan.points();
  const LaurentPoly g = conjugated ? phi_of_z() * f : f;
  const auto lhs = op.apply_many(g, zs);
  std::vector<cplx> fv = values_on(g, zs);
  double fmax = 0.0;
  for (const auto& v : fv) fmax = std::max(fmax, std::abs(v));
  MeasuredEigenvalue m;
  bool first = true;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (std::abs(fv[i]) < 1e-8 * fmax) continue;
    const cplx ratio = lhs[i] / fv[i];
    if (first) {
      m.value = ratio;
      first = false;
    } else {
      m.spread = std::max(m.spread, std::abs(ratio - m.value));
    }
  }
  if (first) throw PlanError("measure_eigenvalue: function vanishes at every sample");
  return m;
}

CheckReport eigen_l_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("eigen-l", c);
  const SievedFamily fam(c.params, c.N, c.n_max);
  const EigenvalueTable ev(c.params, c.N);
  const DunklOperator L = build_L(c.params, c.N, LForm::reflections);
  const DunklOperator LB = build_L(c.params, c.N, LForm::with_B);
  const OpucFamily direct = szego_sequence(VerblunskySequence::sieved_jacobi(c.params, c.N), c.n_max);
  Sweep refl, withb, table, cross;
  for (int n = 0; n <= c.n_max; ++n) {
    const LaurentPoly& psi = fam.psi(n);
    const SamplePlan plan = operator_plan(psi.span() + 4 * c.N, c.N, c.samples);
    r.samples = std::max(r.samples, plan.count);
    refl.update(eigen_residual(L, psi, ev.lambda(n), plan), c.tolerance, at_n(n));
    withb.update(eigen_residual(LB, psi, ev.lambda(n), plan), c.tolerance, at_n(n));
    const auto d = psi_case(n, c.N);
    const double scale = std::max(1.0, psi.max_abs_coeff());
    table.update((reconstruct_psi(d, fam.plain_psi(d.k)) - psi).max_abs_coeff() / scale, c.tolerance, at_n(n));
    cross.update((psi_n(direct, n) - psi).max_abs_coeff() / scale, c.tolerance, at_n(n));
  }
  r.add("L(N) psi_n = lambda_n psi_n (reflection form)", refl.worst, refl.note());
  r.add("L(N) psi_n = lambda_n psi_n (B form)", withb.worst, withb.note());
  r.add("psi_n(z;N) = z^nu psi_k(z^{+-N}) (parity table)", table.worst, table.note());
  r.add("sieved psi = Szego recurrence on sieved a_n", cross.worst, cross.note());
  return r;
}

CheckReport eigen_h_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("eigen-h", c);
  const SymmetricFamily P(FamilyKind::P, c.params, c.N, c.n_max);
  const EigenvalueTable ev(c.params, c.N);
  const DunklOperator Hs = build_H(c.params, c.N, HMode::square);
  const DunklOperator Hr = build_H(c.params, c.N, HMode::explicit_R);
  const DunklOperator Ht = build_H(c.params, c.N, HMode::explicit_T);
  Sweep ss, sr, st, spsi, jac;
  for (int n = 0; n <= c.n_max; ++n) {
    const LaurentPoly& f = P[n].z_form;
    const SamplePlan plan = operator_plan(f.span() + 8 * c.N, c.N, c.samples);
    r.samples = std::max(r.samples, plan.count);
    const double lam = ev.Lambda(n);
    ss.update(eigen_residual(Hs, f, lam, plan), c.tolerance, at_n(n));
    sr.update(eigen_residual(Hr, f, lam, plan), c.tolerance, at_n(n));
    st.update(eigen_residual(Ht, f, lam, plan), c.tolerance, at_n(n));
  }
  const SievedFamily& fam = P.circle_family();
  for (int n = 0; n <= std::min(c.n_max, fam.n_max()); ++n) {
    const SamplePlan plan = operator_plan(fam.psi(n).span() + 8 * c.N, c.N, c.samples);
    spsi.update(eigen_residual(Hs, fam.psi(n), ev.lambda_tilde(n), plan), c.tolerance, at_n(n));
  }
  r.add("H(N) P_n = Lambda_n P_n (L^2 form)", ss.worst, ss.note());
  r.add("H(N) P_n = Lambda_n P_n (reflection form)", sr.worst, sr.note());
  r.add("H(N) P_n = Lambda_n P_n (rotation form)", st.worst, st.note());
  r.add("H(N) psi_n = lambda~_n psi_n", spsi.worst, spsi.note());
  double lam_gap = 0.0;
  for (int n = 1; 2 * n <= c.n_max + 1; ++n) {
    lam_gap = std::max({lam_gap, std::abs(ev.lambda_tilde(2 * n) - ev.Lambda(n)),
                        std::abs(ev.lambda_tilde(2 * n - 1) - ev.Lambda(n))});
  }
  r.add("lambda~_{2n} = lambda~_{2n-1} = Lambda_n", lam_gap);
  if (c.N == 1) {
    // With N = 1 the reflection term vanishes on symmetric inputs and
    // z^2 f'' + C f' = Lambda_n f is the Jacobi equation in z.
    DunklOperator classical(1);
    classical.add_term(RationalFunction(LaurentPoly::monomial(2)), 2, GroupElement::identity(1));
    classical.add_term(coeff_C(c.params, 1), 1, GroupElement::identity(1));
    for (int n = 0; n <= c.n_max; ++n) {
      const SamplePlan plan = operator_plan(P[n].z_form.span() + 8, 1, c.samples);
      jac.update(eigen_residual(classical, P[n].z_form, ev.Lambda(n), plan), c.tolerance, at_n(n));
    }
    r.add("N=1: z^2 P_n'' + C P_n' = Lambda_n P_n", jac.worst, jac.note());
  }
  return r;
}

CheckReport eigen_q_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("eigen-q", c);
  const SymmetricFamily Q(FamilyKind::Q, c.params, c.N, c.n_max);
  const EigenvalueTable ev(c.params, c.N);
  const DunklOperator H = build_H(c.params, c.N, HMode::explicit_R);
  const DunklOperator Htilde = build_H_tilde(c.params, c.N, HMode::explicit_R);
  Sweep sym, pw;
  for (int n = 0; n <= c.n_max; ++n) {
    const LaurentPoly& f = Q[n].z_form;
    const SamplePlan plan = operator_plan(f.span() + 8 * c.N + 4, c.N, c.samples);
    r.samples = std::max(r.samples, plan.count);
    sym.update(eigen_residual(Htilde, f, ev.Lambda(n + 1), plan), c.tolerance, at_n(n));
    pw.update(eigen_residual_conjugated(H, f, ev.Lambda(n + 1), plan), c.tolerance, at_n(n));
  }
  r.add("H~(N) Q_n = Lambda_{n+1} Q_n (composed conjugation)", sym.worst, sym.note());
  r.add("H~(N) Q_n = Lambda_{n+1} Q_n (pointwise conjugation)", pw.worst, pw.note());
  if (c.params.alpha == c.params.beta) {
    const DunklOperator Hc = build_H_hat(c.params, c.N, HatMode::conjugated);
    const DunklOperator Hr = build_H_hat(c.params, c.N, HatMode::explicit_R);
    const DunklOperator Ht = build_H_hat(c.params, c.N, HatMode::explicit_T);
    Sweep sc, sr, st, closed;
    for (int n = 0; n <= c.n_max; ++n) {
      const LaurentPoly& f = Q[n].z_form;
      const SamplePlan plan = operator_plan(f.span() + 8 * c.N + 4, c.N, c.samples);
      const double xi = ev.Xi(n);
      sc.update(eigen_residual(Hc, f, xi, plan), c.tolerance, at_n(n));
      sr.update(eigen_residual(Hr, f, xi, plan), c.tolerance, at_n(n));
      st.update(eigen_residual(Ht, f, xi, plan), c.tolerance, at_n(n));
      const double closed_form = n * (n + (2.0 * c.params.alpha + 1.0) * c.N + 2.0);
      closed.update(std::abs(xi - closed_form) / std::max(1.0, std::abs(closed_form)), c.tolerance, at_n(n));
    }
    r.add("H^(N) Q_n = Xi_n Q_n (conjugated - Lambda_1)", sc.worst, sc.note());
    r.add("H^(N) Q_n = Xi_n Q_n (explicit, reflections)", sr.worst, sr.note());
    r.add("H^(N) Q_n = Xi_n Q_n (explicit, rotations)", st.worst, st.note());
    r.add("Xi_n = n(n + (2 alpha+1) N + 2)", closed.worst, closed.note());
  } else {
    r.info("standardised operator skipped", 0.0, "needs alpha == beta");
  }
  return r;
}

CheckReport eigen_y_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("eigen-y", c);
  if (c.N == 1) {
    r.info("no Y_m operators", 0.0, "Y_m exists for 1 <= m <= N-1");
    return r;
  }
  const SymmetricFamily P(FamilyKind::P, c.params, c.N, c.n_max);
  const SymmetricFamily Q(FamilyKind::Q, c.params, c.N, c.n_max);
  const EigenvalueTable ev(c.params, c.N);
  const DunklOperator H = build_H(c.params, c.N, HMode::explicit_R);
  const auto sym_panel = symmetric_panel(c.seed, 20);
  const auto gen_panel = random_panel(c.seed, 20);
  const double const_tol = std::min(c.tolerance, 1e-9);
  for (int m = 1; m < c.N; ++m) {
    const std::string tag = " (m=" + std::to_string(m) + ")";
    const DunklOperator Y = build_Y(c.N, m);
    const DunklOperator Yt = build_Y_tilde(c.N, m, YMode::closed_form);
    const DunklOperator Ytc = build_Y_tilde(c.N, m, YMode::conjugated);
    Sweep spread_p, exact_p, printed_p, spread_q, exact_q, conj_q;
    std::vector<cplx> distinct;
    for (int n = 0; n <= c.n_max; ++n) {
      const LaurentPoly& f = P[n].z_form;
      const SamplePlan plan = operator_plan(f.span() + 4, c.N, c.samples);
      r.samples = std::max(r.samples, plan.count);
      const MeasuredEigenvalue me = measure_eigenvalue(Y, f, plan);
      spread_p.update(me.spread, const_tol, at_n(n));
      exact_p.update(std::abs(me.value - ev.omega(m, n)), c.tolerance, at_n(n));
      const cplx pr = ev.omega_printed(m, n);
      printed_p.update(std::min(std::abs(me.value - pr), std::abs(me.value + pr)), c.tolerance, at_n(n));
      if (std::none_of(distinct.begin(), distinct.end(), [&](cplx v) { return std::abs(v - me.value) < 1e-6; })) {
        distinct.push_back(me.value);
      }
      if (n >= 1) {
        const LaurentPoly& g = Q[n - 1].z_form;
        const SamplePlan qplan = operator_plan(g.span() + 6, c.N, c.samples);
        const MeasuredEigenvalue mq = measure_eigenvalue(Yt, g, qplan);
        spread_q.update(mq.spread, const_tol, at_n(n));
        exact_q.update(std::abs(mq.value - ev.omega(m, n)), c.tolerance, at_n(n));
        conj_q.update(eigen_residual(Ytc, g, ev.omega(m, n), qplan), c.tolerance, at_n(n));
      }
    }
    r.add("Y_m P_n: eigenvalue constant across samples" + tag, spread_p.worst, const_tol, spread_p.note());
    r.add("Y_m P_n: eigenvalue = q^{m nu} + q^{-m nu}" + tag, exact_p.worst, exact_p.note());
    r.add("Y_m P_n: eigenvalue = printed omega up to sign" + tag, printed_p.worst,
          printed_p.note("parity-of-(N, j) exponents; differs beyond sign for N >= 5"));
    r.add("Y_m P_n: distinct eigenvalues <= N" + tag,
          std::max(0.0, static_cast<double>(distinct.size()) - c.N), 0.0,
          std::to_string(distinct.size()) + " distinct values");
    r.add("Y~_m Q_{n-1}: eigenvalue constant across samples" + tag, spread_q.worst, const_tol, spread_q.note());
    r.add("Y~_m Q_{n-1} = omega_{m,n} Q_{n-1} (closed form)" + tag, exact_q.worst, exact_q.note());
    r.add("Y~_m Q_{n-1} = omega_{m,n} Q_{n-1} (conjugation)" + tag, conj_q.worst, conj_q.note());

    // H commutes with every rotation, so [H, Y_m] vanishes beyond the
    // symmetric span as well.
    const DunklOperator comm = commutator(H, Y);
    const SamplePlan plan = operator_plan(16 + 8 * c.N, c.N, c.samples);
    const auto zs = plan.points();
    auto comm_residual = [&](const std::vector<LaurentPoly>& panel) {
      double diff = 0.0;
      double scale = 1.0;
      for (const auto& f : panel) {
        const auto lhs = comm.apply_many(f, zs);
        const auto hf = H.apply_many(f, zs);
        for (std::size_t i = 0; i < zs.size(); ++i) {
          diff = std::max(diff, std::abs(lhs[i]));
          scale = std::max(scale, std::abs(hf[i]));
        }
      }
      return diff / scale;
    };
    std::vector<LaurentPoly> span = sym_panel;
    for (int n = 0; n <= std::min(c.n_max, 8); ++n) span.push_back(P[n].z_form);
    r.add("[H, Y_m] = 0 on symmetric Laurent polynomials" + tag, comm_residual(span));
    r.add("[H, Y_m] = 0 on general Laurent polynomials (reflection form of H)" + tag, comm_residual(gen_panel));
  }
  return r;
}

CheckReport orthogonality_suite(const SuiteConfig& c, const OrthogonalityOptions& opt) {
  validate_config(c);
  CheckReport r = make_report("ortho", c);
  const JacobiParams& p = c.params;
  const SymmetricFamily Pf(FamilyKind::P, p, c.N, c.n_max);
  const SymmetricFamily Qf(FamilyKind::Q, p, c.N, c.n_max);
  const SievedFamily& fam = Pf.circle_family();
  std::vector<LaurentPoly> psi, P, Q;
  for (int n = 0; n <= c.n_max; ++n) {
    psi.push_back(fam.psi(n));
    P.push_back(Pf[n].z_form);
    Q.push_back(Qf.precursor(n));
  }
  const bool exact = weight_is_trig_polynomial(p);
  const double tol = c.tolerance;
  // Trigonometric degree of f g-bar w for the largest basis element.
  int degree = 0;
  for (const auto* set : {&psi, &P, &Q}) {
    for (const auto& f : *set) degree = std::max(degree, 2 * std::max(std::abs(f.min_exp()), std::abs(f.max_exp())));
  }
  const int wdeg = exact ? static_cast<int>(std::lround(c.N * (p.alpha + p.beta + 1.0))) : 0;
  int M = opt.M_start;
  if (M <= 0) {
    M = 64;
    while (M <= degree + wdeg + 1) M *= 2;
  }

  auto normalized = [](const std::vector<std::vector<cplx>>& G) {
    std::vector<std::vector<cplx>> out = G;
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = 0; j < G.size(); ++j) {
        out[i][j] = G[i][j] / std::sqrt(std::abs(G[i][i]) * std::abs(G[j][j]));
      }
    }
    return out;
  };
  auto grams = [&](int m) {
    const QuadratureRule rule = QuadratureRule::rho_N(p, c.N, QuadratureGrid::for_params(p, m));
    return std::vector<std::vector<std::vector<cplx>>>{gram_matrix(psi, rule), gram_matrix(P, rule),
                                                      gram_matrix(Q, rule)};
  };
  auto current = grams(M);
  double change = 0.0;
  while (true) {
    if (2 * M > opt.M_max) break;
    const auto next = grams(2 * M);
    change = 0.0;
    for (std::size_t s = 0; s < current.size(); ++s) {
      const auto a = normalized(current[s]);
      const auto b = normalized(next[s]);
      const double g00 = std::abs(next[s][0][0]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) change = std::max(change, std::abs(a[i][j] - b[i][j]));
        change = std::max(change, std::abs(current[s][i][i] - next[s][i][i]) / g00);
      }
    }
    current = next;
    M *= 2;
    if (change < opt.target) break;
  }
  r.samples = M;
  r.info("quadrature nodes M", M, exact ? "trapezoid, trigonometric-polynomial weight" : "Gauss-Jacobi per arc");
  r.info("last doubling change", change);

  if (exact) {
    // Independent rule: Gauss-Jacobi per arc on the same weight.
    QuadratureGrid gj = QuadratureGrid::for_params(p, M);
    gj.exact = false;
    const auto G = gram_matrix(psi, QuadratureRule::rho_N(p, c.N, gj));
    double gap = 0.0;
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = 0; j < G.size(); ++j) {
        gap = std::max(gap, std::abs(G[i][j] - current[0][i][j]) / std::abs(current[0][0][0]));
      }
    }
    r.add("trapezoid Gram = Gauss-Jacobi Gram, psi_n", gap, tol);
  }

  const char* names[] = {"psi_n", "P_n", "Q_n (via (z - 1/z) Q_n)"};
  const VerblunskySequence seq = VerblunskySequence::sieved_jacobi(p, c.N);
  for (std::size_t s = 0; s < current.size(); ++s) {
    const auto& G = current[s];
    const auto Gn = normalized(G);
    double off = 0.0;
    double min_diag = std::abs(G[0][0]);
    for (std::size_t i = 0; i < G.size(); ++i) {
      min_diag = std::min(min_diag, G[i][i].real());
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i != j) off = std::max(off, std::abs(Gn[i][j]));
      }
    }
    r.add(std::string("Gram off-diagonal, ") + names[s], off, tol);
    r.add(std::string("Gram diagonal positive, ") + names[s], min_diag > 0.0 ? 0.0 : 1.0, tol);
    if (s == 0) {
      double diag = 0.0;
      for (std::size_t n = 0; n < G.size(); ++n) {
        diag = std::max(diag, std::abs(G[n][n].real() / G[0][0].real() - h_norm(seq, static_cast<int>(n))));
      }
      r.add("Gram diagonal ratio <psi_n, psi_n>/<psi_0, psi_0> = h_n", diag, tol);
    }
  }
  return r;
}

CheckReport selfadjoint_check(const SuiteConfig& c, int pairs, int M) {
  validate_config(c);
  if (pairs < 1) throw ArgumentError("selfadjoint_check: need at least one pair");
  CheckReport r = make_report("selfadjoint", c);
  const JacobiParams& p = c.params;
  const bool exact = weight_is_trig_polynomial(p);
  // The panel spans z^-8..z^8, so 256 trapezoid nodes or 64 Gauss nodes
  // per arc are well past the integrand degree.
  if (M <= 0) M = exact ? 256 : 128 * c.N;
  const QuadratureRule rule = QuadratureRule::rho_N(p, c.N, QuadratureGrid::for_params(p, M));
  r.samples = static_cast<int>(rule.nodes.size());
  std::vector<cplx> zs;
  for (const double t : rule.nodes) zs.push_back(std::polar(1.0, t));
  const auto& wv = rule.weights;
  const double h = 1.0;
  const auto panel = random_panel(c.seed, 2 * pairs);

  auto check = [&](const DunklOperator& L, const std::string& label) {
    double worst = 0.0;
    double imag = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const LaurentPoly& f = panel[static_cast<std::size_t>(2 * i)];
      const LaurentPoly& g = panel[static_cast<std::size_t>(2 * i + 1)];
      const auto fv = values_on(f, zs);
      const auto gv = values_on(g, zs);
      const auto Lf = L.apply_many(f, zs);
      const auto Lg = L.apply_many(g, zs);
      const double ff = inner_from_values(fv, fv, wv, h).real();
      const double gg = inner_from_values(gv, gv, wv, h).real();
      const cplx lhs = inner_from_values(Lf, gv, wv, h);
      const cplx rhs = inner_from_values(fv, Lg, wv, h);
      worst = std::max(worst, std::abs(lhs - rhs) / std::sqrt(ff * gg));
      imag = std::max(imag, std::abs(inner_from_values(Lf, fv, wv, h).imag()) / ff);
    }
    const double tol = c.tolerance;
    r.add("<" + label + " f, g> = <f, " + label + " g>", worst, tol);
    r.add("Im <" + label + " f, f> / <f, f>", imag, tol);
  };
  check(build_L(p, c.N), "L(N)");
  if (c.N == 1) check(build_K(p), "K");
  return r;
}

CheckReport identity_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("identities", c);
  const JacobiParams& p = c.params;
  const int N = c.N;
  const SamplePlan plan = operator_plan(16 + 8 * N, N, c.samples);
  r.samples = plan.count;
  const auto zs = plan.points();
  const double s = p.sum1();

  double e_gap = 0.0, bb_gap = 0.0, b_gap = 0.0, d_gap = 0.0, sumgen = 0.0, cyc = 0.0;
  const RationalFunction B = coeff_B(p, N);
  const RationalFunction Bs = coeff_B_sum(p, N);
  for (const cplx z : zs) {
    for (int k = 1; k < N; ++k) {
      double scale = 1.0;
      for (int i = 0; i < N; ++i) {
        scale = std::max(scale, std::abs(coeff_A(p, N, i)(z) *
                                         coeff_A(p, N, i + k).substitute(GroupElement::reflection(i, N))(z)));
      }
      e_gap = std::max(e_gap, std::abs(coeff_E(p, N, k)(z)) / scale);
    }
    for (int k = 0; k < N; ++k) {
      bb_gap = std::max(bb_gap, std::abs(coeff_BB(p, N, k)(z)) / std::max({1.0, std::abs(B(z)), N * std::abs(s)}));
      const cplx d = coeff_D(p, N, k)(z);
      d_gap = std::max(d_gap, std::abs(coeff_D_general(p, N, k)(z) - d) / std::max(1.0, std::abs(d)));
      cyc = std::max(cyc, std::abs(coeff_A(p, N, k + N)(z) - coeff_A(p, N, k)(z)));
    }
    b_gap = std::max(b_gap, std::abs(B(z) - Bs(z)) / std::max(1.0, std::abs(B(z))));
    for (int hh = 0; hh < N; ++hh) {
      cplx lhs = 0.0;
      for (int l = 0; l < N; ++l) lhs += root_of_unity(N, static_cast<long long>(l) * (hh + 1)) / (root_of_unity(N, l) - z);
      const cplx rhs = static_cast<double>(N) * ipow(z, hh) / (1.0 - ipow(z, N));
      sumgen = std::max(sumgen, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  r.add("E_k(z) = 0, k = 1..N-1", e_gap);
  r.add("B(z) + B(q^k/z) - N(alpha+beta+1) = 0", bb_gap);
  r.add("B(z) closed form = -sum_k A_k(z)", b_gap);
  r.add("D_k(z) = z A_k'(z)", d_gap);
  r.add("sum_l q^{l(h+1)}/(q^l - z) = N z^h/(1 - z^N)", sumgen);
  r.add("A_{k+N} = A_k", cyc);

  // The L^2 construction against the explicit coefficients, term by term.
  const DunklOperator Hs = build_H(p, N, HMode::square);
  const DunklOperator Hr = build_H(p, N, HMode::explicit_R);
  const DunklOperator Ht = build_H(p, N, HMode::explicit_T);
  r.add("H(N): L^2 form coefficients = explicit reflection form", max_coefficient_gap(Hs, Hr, zs),
        "includes C(z), z^2, z A_k' and vanishing rotation coefficients");

  // Agreement of the three constructions on symmetric inputs.
  const auto sym = symmetric_panel(c.seed, 20);
  const auto gen = random_panel(c.seed, 20);
  auto agree = [&](const DunklOperator& a, const DunklOperator& b, const std::vector<LaurentPoly>& panel) {
    double diff = 0.0;
    double scale = 1.0;
    for (const auto& f : panel) {
      const auto va = a.apply_many(f, zs);
      const auto vb = b.apply_many(f, zs);
      for (std::size_t i = 0; i < zs.size(); ++i) {
        diff = std::max(diff, std::abs(va[i] - vb[i]));
        scale = std::max(scale, std::abs(vb[i]));
      }
    }
    return diff / scale;
  };
  r.add("H(N) L^2 form = reflection form on symmetric inputs", agree(Hs, Hr, sym));
  r.add("H(N) L^2 form = rotation form on symmetric inputs", agree(Hs, Ht, sym));
  r.add("H(N) L^2 form = reflection form on all inputs", agree(Hs, Hr, gen));
  if (N > 1) {
    r.info("H(N) rotation form vs L^2 form on general inputs", agree(Hs, Ht, gen), "not expected to agree");
  }
  r.add("L(N) reflection form = B form", agree(build_L(p, N, LForm::reflections), build_L(p, N, LForm::with_B), gen));

  // R_k f = T_{-k} f for symmetric f.
  double rt = 0.0;
  for (int k = 0; k < N; ++k) {
    const DunklOperator Rk = DunklOperator::group(GroupElement::reflection(k, N));
    const DunklOperator Tk = DunklOperator::group(GroupElement::rotation(-k, N));
    rt = std::max(rt, agree(Rk, Tk, sym));
  }
  r.add("R_k f = T_{-k} f on symmetric f", rt);

  const auto zs1 = operator_plan(24, 1, c.samples).points();
  r.add("L(1) = K term by term", max_coefficient_gap(build_L(p, 1), build_K(p), zs1));
  return r;
}

CheckReport cmv_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("cmv", c);
  const double tol = c.tolerance;
  const int size = std::max(4, (c.n_max + 2) / 2 * 2);
  const int window = size - 2;

  auto one = [&](const VerblunskySequence& seq, const std::vector<LaurentPoly>& psi, const std::string& tag) {
    const CmvTruncation t = cmv_matrices(seq, size);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(window, window);
    const Eigen::MatrixXd m1sq = (t.m1 * t.m1).topLeftCorner(window, window);
    const Eigen::MatrixXd m2sq = (t.m2 * t.m2).topLeftCorner(window, window);
    r.add("M1^2 = I on leading window" + tag, (m1sq - I).cwiseAbs().maxCoeff(), std::min(tol, 1e-12));
    r.add("M2^2 = I on leading window" + tag, (m2sq - I).cwiseAbs().maxCoeff(), std::min(tol, 1e-12));
    const SamplePlan plan = SamplePlan::for_span(size, c.N, 1.0);
    r.samples = std::max(r.samples, plan.count);
    double rm1 = 0, rm2 = 0, gevp = 0, cmv = 0;
    for (const cplx z : plan.points()) {
      Eigen::VectorXcd v(size), vr(size);
      for (int n = 0; n < size; ++n) {
        v(n) = psi[static_cast<std::size_t>(n)](z);
        vr(n) = psi[static_cast<std::size_t>(n)](1.0 / z);
      }
      const Eigen::VectorXcd a1 = t.m1.cast<cplx>() * v;
      const Eigen::VectorXcd a2 = t.m2.cast<cplx>() * v;
      const Eigen::VectorXcd ac = t.c.cast<cplx>() * v;
      const double scale = std::max(1.0, v.head(window).cwiseAbs().maxCoeff());
      rm1 = std::max(rm1, (a1 - vr).head(window).cwiseAbs().maxCoeff() / scale);
      rm2 = std::max(rm2, (a2 - z * vr).head(window).cwiseAbs().maxCoeff() / scale);
      gevp = std::max(gevp, (a2 - z * a1).head(window).cwiseAbs().maxCoeff() / scale);
      cmv = std::max(cmv, (ac - z * v).head(window).cwiseAbs().maxCoeff() / scale);
    }
    r.add("psi(1/z) = M1 psi(z)" + tag, rm1, std::min(tol, 1e-10));
    r.add("z psi(1/z) = M2 psi(z)" + tag, rm2, std::min(tol, 1e-10));
    r.add("M2 psi = z M1 psi" + tag, gevp, std::min(tol, 1e-10));
    r.add("C psi = z psi" + tag, cmv, std::min(tol, 1e-10));
  };

  const SievedFamily plain(c.params, 1, size);
  const SievedFamily sieved(c.params, c.N, size);
  std::vector<LaurentPoly> psi1, psiN;
  for (int n = 0; n < size; ++n) {
    psi1.push_back(plain.psi(n));
    psiN.push_back(sieved.psi(n));
  }
  one(VerblunskySequence::jacobi(c.params), psi1, " (Jacobi)");
  one(VerblunskySequence::sieved_jacobi(c.params, c.N), psiN, " (sieved)");

  // Rotated reflections: M_{i;j} = diag(omega_{n,j}) M_i.
  const SamplePlan plan = SamplePlan::for_span(size, c.N, 1.0);
  const PhaseTable phases = PhaseTable::measure(sieved, size - 1, plan);
  r.add("rotation phases |omega_{n,j}| = 1", phases.max_modulus_defect, std::min(tol, 1e-10));
  r.add("rotation phases constant across samples", phases.max_spread, std::min(tol, 1e-10));
  const CmvTruncation t = cmv_matrices(VerblunskySequence::sieved_jacobi(c.params, c.N), size);
  double m1j = 0, m2j = 0, prod = 0, invol = 0;
  for (int j = 0; j < c.N; ++j) {
    Eigen::VectorXcd d(size);
    for (int n = 0; n < size; ++n) d(n) = phases.rotation.at({n, j});
    const Eigen::MatrixXcd M1j = d.asDiagonal() * t.m1.cast<cplx>();
    const Eigen::MatrixXcd M2j = d.asDiagonal() * t.m2.cast<cplx>();
    const Eigen::MatrixXcd sq = (M1j * M1j).topLeftCorner(window, window);
    invol = std::max(invol, (sq - Eigen::MatrixXcd::Identity(window, window)).cwiseAbs().maxCoeff());
    const cplx qj = root_of_unity(c.N, j);
    for (const cplx z : plan.points()) {
      Eigen::VectorXcd v(size), vr(size);
      for (int n = 0; n < size; ++n) {
        v(n) = psiN[static_cast<std::size_t>(n)](z);
        vr(n) = psiN[static_cast<std::size_t>(n)](qj / z);
      }
      const double scale = std::max(1.0, v.head(window).cwiseAbs().maxCoeff());
      m1j = std::max(m1j, (M1j * v - vr).head(window).cwiseAbs().maxCoeff() / scale);
      m2j = std::max(m2j, (M2j * v - z * vr).head(window).cwiseAbs().maxCoeff() / scale);
      prod = std::max(prod, (M1j * (M2j * v) - z * v).head(window - 1).cwiseAbs().maxCoeff() / scale);
    }
  }
  r.add("psi(q^j/z) = M_{1;j} psi(z), j = 0..N-1", m1j, std::min(tol, 1e-10));
  r.add("z psi(q^j/z) = M_{2;j} psi(z), j = 0..N-1", m2j, std::min(tol, 1e-10));
  r.add("M_{1;j} M_{2;j} psi = z psi, j = 0..N-1", prod, std::min(tol, 1e-10));
  r.add("M_{1;j}^2 = I on leading window", invol, std::min(tol, 1e-10));
  return r;
}

CheckReport three_term_suite(const SuiteConfig& c) {
  validate_config(c);
  CheckReport r = make_report("three-term", c);
  const JacobiParams& p = c.params;
  const int n_max = std::max(c.n_max, 1);
  r.n_max = n_max;
  const SymmetricFamily P(FamilyKind::P, p, c.N, n_max);
  const SymmetricFamily Pphi(FamilyKind::P, p, c.N, n_max, Route::phi);
  const SymmetricFamily Q(FamilyKind::Q, p, c.N, n_max);
  const SymmetricFamily Qphi(FamilyKind::Q, p, c.N, n_max, Route::phi);
  double route_p = 0, route_q = 0, monic = 0;
  for (int n = 0; n <= n_max; ++n) {
    route_p = std::max(route_p, (P[n].z_form - Pphi[n].z_form).max_abs_coeff() /
                                    std::max(1.0, P[n].z_form.max_abs_coeff()));
    route_q = std::max(route_q, (Q[n].z_form - Qphi[n].z_form).max_abs_coeff() /
                                    std::max(1.0, Q[n].z_form.max_abs_coeff()));
    for (const auto* fam : {&P, &Q}) {
      const auto& x = (*fam)[n].x_coeffs;
      const double deg_gap = static_cast<int>(x.size()) - 1 == n ? 0.0 : 1.0;
      monic = std::max({monic, deg_gap, std::abs(x.back() - 1.0)});
    }
  }
  r.add("P_n: psi route = Phi route", route_p);
  r.add("Q_n: psi route = Phi route", route_q);
  r.add("P_n, Q_n monic of degree n in x", monic);
  const double a0 = sieved_verblunsky(p, c.N, 0);
  r.add("P_1 = x - 2 a_0", std::abs(P[1].x_coeffs[0] + 2.0 * a0));

  const double tt_tol = std::max(c.tolerance, 1e-9);
  auto merge = [&](const CheckReport& sub) { r.merge(sub, ""); };
  bool any = false;
  if (c.N == 2) {
    merge(check_three_term(P, RecurrenceFamily::generalized_ultra, p, 2, tt_tol));
    any = true;
  }
  if (p.alpha == p.beta && c.N >= 2) {
    merge(check_three_term(P, RecurrenceFamily::sieved_ultra_1, p, c.N, tt_tol));
    merge(check_three_term(Q, RecurrenceFamily::sieved_ultra_2, p, c.N, tt_tol));
    any = true;
  }
  if (!any) r.info("closed-form recurrences skipped", 0.0, "they need N == 2 or alpha == beta with N >= 2");
  return r;
}

CheckReport algebra_suite(const SuiteConfig& c) {
  validate_config(c);
  RelationOptions opt;
  opt.seed = c.seed;
  opt.tolerance = c.tolerance;
  opt.radius = kOperatorRadius;
  CheckReport r = relation_suite(c.params, c.N, opt);
  r.n_max = c.n_max;
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eigen-l",     "eigen-h",   "eigen-q",    "eigen-y", "ortho",
                                              "selfadjoint", "algebra",   "identities", "cmv",     "three-term"};
  return names;
}

CheckReport run_suite(const std::string& name, const SuiteConfig& c) {
  // Touch the Verblunsky parameters first so invalid (alpha, beta) surface
  // as ValidityError before any suite-specific work.
  VerblunskySequence::jacobi(c.params).validate(2 * c.n_max + 4);
  if (name == "eigen-l") return eigen_l_suite(c);
  if (name == "eigen-h") return eigen_h_suite(c);
  if (name == "eigen-q") return eigen_q_suite(c);
  if (name == "eigen-y") return eigen_y_suite(c);
  if (name == "ortho") return orthogonality_suite(c);
  if (name == "selfadjoint") return selfadjoint_check(c);
  if (name == "algebra") return algebra_suite(c);
  if (name == "identities") return identity_suite(c);
  if (name == "cmv") return cmv_suite(c);
  if (name == "three-term") return three_term_suite(c);
  throw ArgumentError("unknown suite '" + name + "'");
}

}  // namespace sieved
