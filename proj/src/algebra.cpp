#include "sieved/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "sieved/dunkl.hpp"
#include "sieved/errors.hpp"
#include "sieved/panel.hpp"

namespace sieved {

cplx DihedralWord::apply(const LaurentPoly& f, cplx z) const {
  return scalar * ipow(z, power) * f(element.map(z));
}

DunklOperator DihedralWord::to_operator() const {
  DunklOperator op(element.order());
  op.add_term(RationalFunction(LaurentPoly::monomial(power, scalar)), 0, element);
  return op;
}

std::string DihedralWord::to_string() const {
  std::ostringstream os;
  os << "(" << scalar.real() << (scalar.imag() < 0 ? "" : "+") << scalar.imag() << "i) z^" << power << " "
     << element.to_string();
  return os.str();
}

DihedralWord compose_group(const DihedralWord& a, const DihedralWord& b) {
  if (a.element.order() != b.element.order()) throw ArgumentError("compose_group: mismatched N");
  // a(b f)(z) = s_a z^{p_a} s_b g_a(z)^{p_b} f(g_b(g_a(z))), g_a(z) = c z^{+-1}.
  const cplx c = a.element.is_identity() ? cplx(1.0) : a.element.phase();
  const int sign = a.element.is_reflection() ? -1 : 1;
  return {a.scalar * b.scalar * ipow(c, b.power), a.power + sign * b.power, a.element * b.element};
}

bool same_word(const DihedralWord& a, const DihedralWord& b, double tol) {
  return a.element == b.element && a.power == b.power && std::abs(a.scalar - b.scalar) <= tol;
}

std::vector<GroupElement> dihedral_elements(int N) {
  std::vector<GroupElement> out;
  out.push_back(GroupElement::identity(N));
  for (int k = 1; k < N; ++k) out.push_back(GroupElement::rotation(k, N));
  for (int j = 0; j < N; ++j) out.push_back(GroupElement::reflection(j, N));
  return out;
}

std::vector<GroupElement> generated_by_R0_R1(int N) {
  std::set<GroupElement> seen{GroupElement::identity(N)};
  std::vector<GroupElement> frontier{GroupElement::identity(N)};
  const GroupElement gens[] = {GroupElement::reflection(0, N), GroupElement::reflection(1 % N, N)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        const GroupElement h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

/// max over panel and samples of |lhs f - rhs f| / max(1, |rhs f|).
double panel_residual(const std::function<cplx(const LaurentPoly&, cplx)>& lhs,
                      const std::function<cplx(const LaurentPoly&, cplx)>& rhs, const std::vector<LaurentPoly>& panel,
                      const std::vector<cplx>& zs) {
  double diff = 0.0;
  double scale = 1.0;
  for (const auto& f : panel) {
    for (const cplx z : zs) {
      const cplx r = rhs(f, z);
      diff = std::max(diff, std::abs(lhs(f, z) - r));
      scale = std::max(scale, std::abs(r));
    }
  }
  return diff / scale;
}

double word_residual(const DihedralWord& lhs, const DihedralWord& rhs, const std::vector<LaurentPoly>& panel,
                     const std::vector<cplx>& zs) {
  return panel_residual([&](const LaurentPoly& f, cplx z) { return lhs.apply(f, z); },
                        [&](const LaurentPoly& f, cplx z) { return rhs.apply(f, z); }, panel, zs);
}

double op_residual(const DunklOperator& lhs, const DunklOperator& rhs, const std::vector<LaurentPoly>& panel,
                   const std::vector<cplx>& zs) {
  return panel_residual([&](const LaurentPoly& f, cplx z) { return lhs.apply(f, z); },
                        [&](const LaurentPoly& f, cplx z) { return rhs.apply(f, z); }, panel, zs);
}

/// Symbolic mismatch: 0 when the reduced words agree, the scalar gap when
/// only the scalar differs, 1 otherwise.
double symbolic_gap(const DihedralWord& a, const DihedralWord& b) {
  if (a.element != b.element || a.power != b.power) return 1.0;
  return std::abs(a.scalar - b.scalar);
}

/// Tracks the worst (symbolic, panel) residual of one relation family over
/// its index range and where it occurred.
struct Worst {
  double symbolic = 0.0;
  double panel = 0.0;
  std::string where;

  void update(double sym, double pan, const std::string& at) {
    if ((sym > symbolic || pan > panel) && where.empty() && (sym > 0.0 || pan > 1e-12)) where = at;
    symbolic = std::max(symbolic, sym);
    panel = std::max(panel, pan);
  }
};

std::string idx(int j, int k) { return "j=" + std::to_string(j) + ",k=" + std::to_string(k); }

void add_family(CheckReport& r, const std::string& name, const Worst& w, double tol, const std::string& note = "") {
  std::string n = note;
  if (!w.where.empty()) n += (n.empty() ? "" : "; ") + std::string("first mismatch at ") + w.where;
  r.add(name + " symbolic", w.symbolic, tol, n);
  r.add(name + " panel", w.panel, tol, n);
}

SamplePlan panel_plan(int N, double radius, int extra) {
  return SamplePlan::for_span(16 + extra, N, radius);
}

}  // namespace

CheckReport group_relation_suite(int N, const RelationOptions& opt) {
  if (N < 1) throw ArgumentError("group_relation_suite: N must be >= 1");
  CheckReport r;
  r.suite = "algebra-group";
  r.N = N;
  r.seed = opt.seed;
  r.tolerance = opt.tolerance;
  const auto panel = random_panel(opt.seed, opt.panel_size);
  const SamplePlan plan = panel_plan(N, opt.radius, 4);
  const auto zs = plan.points();
  r.samples = plan.count;

  auto R = [N](int j) { return DihedralWord::of(GroupElement::reflection(j, N)); };
  auto T = [N](int k) { return DihedralWord::of(GroupElement::rotation(k, N)); };
  auto M = [N](int j) { return DihedralWord::M(j, N); };
  auto q = [N](int k) { return root_of_unity(N, k); };
  const DihedralWord I = DihedralWord::of(GroupElement::identity(N));

  Worst rrt, tt, tt_comm, tr, rt, rr_order, t_order, mm, mr, rm_printed, rm_corrected;
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      const std::string at = idx(j, k);
      auto check = [&](Worst& w, const DihedralWord& lhs, const DihedralWord& rhs) {
        w.update(symbolic_gap(lhs, rhs), word_residual(lhs, rhs, panel, zs), at);
      };
      check(rrt, compose_group(R(k), R(j)), T(j - k));
      check(tt, compose_group(T(k), T(j)), T(k + j));
      check(tt_comm, compose_group(T(k), T(j)), compose_group(T(j), T(k)));
      check(tr, compose_group(T(k), R(j)), R(j - k));
      check(rt, compose_group(R(j), T(k)), R(j + k));
      check(mm, compose_group(M(j), M(k)), DihedralWord{q(j), 0, GroupElement::rotation(k - j, N)});
      check(mr, compose_group(M(j), R(k)), DihedralWord{1.0, 1, GroupElement::rotation(k - j, N)});
      check(rm_printed, compose_group(R(k), M(j)), DihedralWord{q(j), -1, GroupElement::rotation(j - k, N)});
      check(rm_corrected, compose_group(R(k), M(j)), DihedralWord{q(k), -1, GroupElement::rotation(j - k, N)});
    }
    rr_order.update(symbolic_gap(compose_group(R(j), R(j)), I), word_residual(compose_group(R(j), R(j)), I, panel, zs),
                    idx(j, j));
    DihedralWord power = I;
    for (int s = 0; s < N; ++s) power = compose_group(power, T(j));
    t_order.update(symbolic_gap(power, I), word_residual(power, I, panel, zs), idx(j, N));
  }
  const double tol = opt.tolerance;
  add_family(r, "R_k R_j = T_{j-k}", rrt, tol);
  add_family(r, "T_k T_j = T_{k+j}", tt, tol);
  add_family(r, "T_k T_j = T_j T_k", tt_comm, tol);
  add_family(r, "T_k R_j = R_{j-k}", tr, tol);
  add_family(r, "R_j T_k = R_{j+k}", rt, tol);
  add_family(r, "R_j^2 = I", rr_order, tol);
  add_family(r, "T_j^N = I", t_order, tol);
  add_family(r, "M_j M_k = q^j T_{k-j}", mm, tol);
  add_family(r, "M_j R_k = z T_{k-j}", mr, tol);
  add_family(r, "R_k M_j = q^j z^-1 T_{j-k} (printed)", rm_printed, tol,
             "the phase is q^k, not q^j; agrees only when j = k");
  add_family(r, "R_k M_j = q^k z^-1 T_{j-k} (corrected)", rm_corrected, tol);

  // Associativity over all triples of group elements.
  const auto elems = dihedral_elements(N);
  double assoc = 0.0;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        if ((a * b) * c != a * (b * c)) assoc = 1.0;
      }
    }
  }
  r.add("associativity (exhaustive)", assoc, tol);
  const auto gen = generated_by_R0_R1(N);
  r.add("|<R_0, R_1>| = 2N", std::abs(static_cast<double>(gen.size()) - 2.0 * N), 0.0,
        "generated " + std::to_string(gen.size()) + " elements");
  return r;
}

DunklOperator acm_odd_2_printed(const JacobiParams& p, int N, int j) {
  const int J = (N - 1) / 2;
  DunklOperator rhs = DihedralWord::M(j, N).to_operator() * cplx(N * p.sum1() + 1.0);
  for (int k = 0; k < N; ++k) {
    rhs.add_term(RationalFunction(p.diff() * root_of_unity(N, j + k * J)), 0, GroupElement::rotation(j + k, N));
  }
  return rhs;
}

DunklOperator acm_odd_2_corrected(const JacobiParams& p, int N, int j) {
  const int J = (N - 1) / 2;
  DunklOperator rhs = DihedralWord::M(j, N).to_operator() * cplx(N * p.sum1() + 1.0);
  for (int k = 0; k < N; ++k) {
    rhs.add_term(RationalFunction(p.diff() * root_of_unity(N, k * J)), 0, GroupElement::rotation(j + k, N));
  }
  return rhs;
}

CheckReport operator_relation_suite(const JacobiParams& p, int N, const RelationOptions& opt) {
  if (N < 1) throw ArgumentError("operator_relation_suite: N must be >= 1");
  CheckReport r;
  r.suite = "algebra-operators";
  r.params = p;
  r.N = N;
  r.seed = opt.seed;
  r.tolerance = opt.tolerance;
  const auto panel = random_panel(opt.seed, opt.panel_size);
  const SamplePlan plan = panel_plan(N, opt.radius, 8 * N + 4);
  const auto zs = plan.points();
  r.samples = plan.count;

  const DunklOperator L = build_L(p, N);
  const double s = p.sum1();
  const double tol = opt.tolerance;

  auto family = [&](const std::string& name, const std::function<std::pair<DunklOperator, DunklOperator>(int)>& rel,
                    const std::string& note = "") {
    double worst = 0.0;
    std::string where;
    for (int j = 0; j < N; ++j) {
      const auto [lhs, rhs] = rel(j);
      const double res = op_residual(lhs, rhs, panel, zs);
      if (res > tol && where.empty()) where = "first mismatch at j=" + std::to_string(j);
      worst = std::max(worst, res);
    }
    std::string n = note;
    if (!where.empty()) n += (n.empty() ? "" : "; ") + where;
    r.add(name, worst, tol, n);
  };

  family("[L, T_j] = 0", [&](int j) {
    return std::make_pair(commutator(L, DunklOperator::group(GroupElement::rotation(j, N))), DunklOperator(N));
  });

  if (N % 2 == 0) {
    family("{R_j, L} (even N)", [&](int j) {
      DunklOperator rhs = DunklOperator::group(GroupElement::reflection(j, N)) * cplx(N * s);
      for (int k = 0; k < N / 2; ++k) {
        rhs.add_term(RationalFunction(-(2.0 * p.alpha + 1.0)), 0, GroupElement::rotation(2 * k + j, N));
        rhs.add_term(RationalFunction(-(2.0 * p.beta + 1.0)), 0, GroupElement::rotation(2 * k + j + 1, N));
      }
      return std::make_pair(anticommutator(DunklOperator::group(GroupElement::reflection(j, N)), L), rhs);
    });
    family("{M_j, L} (even N)", [&](int j) {
      const DunklOperator Mj = DihedralWord::M(j, N).to_operator();
      return std::make_pair(anticommutator(Mj, L), Mj * cplx(N * s + 1.0));
    });
  } else {
    family("{R_j, L} (odd N)", [&](int j) {
      DunklOperator rhs = DunklOperator::group(GroupElement::reflection(j, N)) * cplx(N * s);
      for (int k = 0; k < N; ++k) rhs.add_term(RationalFunction(-s), 0, GroupElement::rotation(k, N));
      return std::make_pair(anticommutator(DunklOperator::group(GroupElement::reflection(j, N)), L), rhs);
    });
    family(
        "{M_j, L} (odd N, printed phase q^{j+kJ})",
        [&](int j) {
          return std::make_pair(anticommutator(DihedralWord::M(j, N).to_operator(), L), acm_odd_2_printed(p, N, j));
        },
        "the phase on T_{j+k} is q^{kJ}; the printed form holds only for j = 0 or alpha = beta");
    family("{M_j, L} (odd N, corrected phase q^{kJ})", [&](int j) {
      return std::make_pair(anticommutator(DihedralWord::M(j, N).to_operator(), L), acm_odd_2_corrected(p, N, j));
    });
  }

  if (N == 1) {
    const DunklOperator K = build_K(p);
    const DunklOperator M1 = DunklOperator::group(GroupElement::reflection(0, 1));
    const DunklOperator M2 = DihedralWord::M(0, 1).to_operator();
    const DunklOperator I = DunklOperator::identity(1);
    r.add("{K, M_1} = (a+b+1)(M_1 - I)", op_residual(anticommutator(K, M1), (M1 - I) * cplx(s), panel, zs));
    r.add("{K, M_2} = (2+a+b) M_2 + (a-b) I",
          op_residual(anticommutator(K, M2), M2 * cplx(s + 1.0) + I * cplx(p.diff()), panel, zs));
    r.add("L(1) = K (panel)", op_residual(build_L(p, 1), K, panel, zs));
  }
  return r;
}

CheckReport relation_suite(const JacobiParams& p, int N, const RelationOptions& opt) {
  CheckReport r;
  r.suite = "algebra";
  r.params = p;
  r.N = N;
  r.seed = opt.seed;
  r.tolerance = opt.tolerance;
  r.merge(group_relation_suite(N, opt), "");
  r.merge(operator_relation_suite(p, N, opt), "");
  return r;
}

}  // namespace sieved
