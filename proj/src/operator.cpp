#include "sieved/operator.hpp"

#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "sieved/errors.hpp"

namespace sieved {

namespace {

void check_order(int N, const DunklOperator& op) {
  if (op.order() != N) throw ArgumentError("DunklOperator: mismatched dihedral orders");
}

/// Rewrites (d^e F)(g(z)) as sum_i gamma_i(z) d^i (F o g)(z).
std::vector<std::pair<int, RationalFunction>> chain_rule(const GroupElement& g, int e) {
  if (e == 0 || g.is_identity()) return {{e, RationalFunction(1.0)}};
  const cplx c = g.phase();
  if (g.is_rotation()) return {{e, RationalFunction(ipow(c, -e))}};
  // g(z) = c / z:
  //   F'(g)  = -(z^2 / c) u'
  //   F''(g) = (z^4 / c^2) u'' + (2 z^3 / c^2) u'
  if (e == 1) return {{1, RationalFunction(LaurentPoly::monomial(2, -1.0 / c))}};
  if (e == 2) {
    return {{2, RationalFunction(LaurentPoly::monomial(4, 1.0 / (c * c)))},
            {1, RationalFunction(LaurentPoly::monomial(3, 2.0 / (c * c)))}};
  }
  throw UnsupportedComposition("chain_rule: derivative order above 2");
}

}  // namespace

DunklOperator::DunklOperator(int N, std::vector<OperatorTerm> terms) : N_(N), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.element.order() != N_) throw ArgumentError("DunklOperator: term with mismatched group order");
    if (t.order < 0 || t.order > 2) throw UnsupportedComposition("DunklOperator: derivative order must be 0, 1 or 2");
  }
}

DunklOperator DunklOperator::identity(int N) {
  return DunklOperator(N, {{RationalFunction(1.0), 0, GroupElement::identity(N)}});
}

DunklOperator DunklOperator::multiplication(const RationalFunction& c, int N) {
  return DunklOperator(N, {{c, 0, GroupElement::identity(N)}});
}

DunklOperator DunklOperator::group(const GroupElement& g) {
  return DunklOperator(g.order(), {{RationalFunction(1.0), 0, g}});
}

DunklOperator DunklOperator::euler(int N) {
  return DunklOperator(N, {{RationalFunction(LaurentPoly::monomial(1)), 1, GroupElement::identity(N)}});
}

int DunklOperator::max_derivative_order() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.order);
  return m;
}

DunklOperator& DunklOperator::add_term(OperatorTerm t) {
  if (t.element.order() != N_) throw ArgumentError("DunklOperator: term with mismatched group order");
  if (t.order < 0 || t.order > 2) throw UnsupportedComposition("DunklOperator: derivative order must be 0, 1 or 2");
  if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
  return *this;
}

DunklOperator& DunklOperator::add_term(const RationalFunction& c, int order, const GroupElement& g) {
  return add_term(OperatorTerm{c, order, g});
}

cplx DunklOperator::apply(const LaurentPoly& f, cplx z, double pole_tolerance) const {
  // Values of d^order (f o g) at z, shared between terms.
  std::map<std::pair<GroupElement, int>, cplx> cache;
  cplx total = 0.0;
  for (const auto& t : terms_) {
    if (t.coeff.relative_denominator(z) < pole_tolerance) {
      throw PlanError("DunklOperator::apply: sample point at a coefficient pole");
    }
    const auto key = std::make_pair(t.element, t.order);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const cplx v = f.substitute(t.element).derivative(t.order)(z);
      it = cache.emplace(key, v).first;
    }
    total += t.coeff(z) * it->second;
  }
  return total;
}

std::vector<cplx> DunklOperator::apply_many(const LaurentPoly& f, const std::vector<cplx>& zs,
                                           double pole_tolerance) const {
  std::map<std::pair<GroupElement, int>, LaurentPoly> prepared;
  for (const auto& t : terms_) {
    const auto key = std::make_pair(t.element, t.order);
    if (!prepared.count(key)) prepared.emplace(key, f.substitute(t.element).derivative(t.order));
  }
  std::vector<cplx> out;
  out.reserve(zs.size());
  for (const cplx z : zs) {
    cplx total = 0.0;
    for (const auto& t : terms_) {
      if (t.coeff.relative_denominator(z) < pole_tolerance) {
        throw PlanError("DunklOperator::apply: sample point at a coefficient pole");
      }
      total += t.coeff(z) * prepared.at({t.element, t.order})(z);
    }
    out.push_back(total);
  }
  return out;
}

cplx DunklOperator::apply_conjugated(const LaurentPoly& f, cplx z, double pole_tolerance) const {
  const cplx phi = z - 1.0 / z;
  if (std::abs(phi) < pole_tolerance) throw PlanError("apply_conjugated: sample at z = +-1");
  return apply(phi_of_z() * f, z, pole_tolerance) / phi;
}

DunklOperator& DunklOperator::operator+=(const DunklOperator& o) {
  check_order(N_, o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

DunklOperator& DunklOperator::operator-=(const DunklOperator& o) {
  check_order(N_, o);
  for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.order, t.element});
  return *this;
}

DunklOperator& DunklOperator::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff = t.coeff * s;
  return *this;
}

std::string DunklOperator::describe() const {
  std::ostringstream os;
  os << "DunklOperator(N=" << N_ << ", " << terms_.size() << " terms:";
  for (const auto& t : terms_) os << " [d" << t.order << " " << t.element.to_string() << "]";
  os << ")";
  return os.str();
}

cplx coefficient_at(const DunklOperator& op, int order, const GroupElement& g, cplx z) {
  cplx total = 0.0;
  for (const auto& t : op.terms()) {
    if (t.order == order && t.element == g) total += t.coeff(z);
  }
  return total;
}

double max_coefficient_gap(const DunklOperator& a, const DunklOperator& b, const std::vector<cplx>& zs) {
  std::set<std::pair<int, GroupElement>> keys;
  for (const auto& t : a.terms()) keys.insert({t.order, t.element});
  for (const auto& t : b.terms()) keys.insert({t.order, t.element});
  double worst = 0.0;
  for (const auto& [order, g] : keys) {
    for (const cplx z : zs) {
      const cplx ca = coefficient_at(a, order, g, z);
      const cplx cb = coefficient_at(b, order, g, z);
      worst = std::max(worst, std::abs(ca - cb) / std::max(1.0, std::abs(cb)));
    }
  }
  return worst;
}

DunklOperator compose(const DunklOperator& a, const DunklOperator& b) {
  check_order(a.order(), b);
  DunklOperator out(a.order());
  // (a_c d^d g)(b_c d^e h) f = a_c d^d [ (b_c o g) (d^e (f o h)) o g ]
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const GroupElement element = ta.element * tb.element;
      const RationalFunction b_at_g = tb.coeff.substitute(ta.element);
      for (const auto& [inner_order, gamma] : chain_rule(ta.element, tb.order)) {
        // beta(z) d^inner_order u, then Leibniz for d^{ta.order}.
        const RationalFunction beta = b_at_g * gamma;
        if (ta.order == 0) {
          out.add_term(ta.coeff * beta, inner_order, element);
          continue;
        }
        const RationalFunction beta1 = beta.derivative();
        if (inner_order + ta.order > 2) throw UnsupportedComposition("compose: derivative order above 2");
        if (ta.order == 1) {
          out.add_term(ta.coeff * beta1, inner_order, element);
          out.add_term(ta.coeff * beta, inner_order + 1, element);
        } else {
          out.add_term(ta.coeff * beta1.derivative(), inner_order, element);
          out.add_term(ta.coeff * beta1 * cplx(2.0), inner_order + 1, element);
          out.add_term(ta.coeff * beta, inner_order + 2, element);
        }
      }
    }
  }
  return out;
}

DunklOperator commutator(const DunklOperator& a, const DunklOperator& b) { return compose(a, b) - compose(b, a); }

DunklOperator anticommutator(const DunklOperator& a, const DunklOperator& b) { return compose(a, b) + compose(b, a); }

DunklOperator conjugate_by_phi(const DunklOperator& op) {
  const int N = op.order();
  const RationalFunction phi(phi_of_z());
  const RationalFunction inv_phi(LaurentPoly(1.0), phi_of_z());
  return compose(DunklOperator::multiplication(inv_phi, N), compose(op, DunklOperator::multiplication(phi, N)));
}

DunklOperator op_algebra(const DunklOperator& a, const DunklOperator& b, AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::compose:
      return compose(a, b);
    case AlgebraKind::add:
      return a + b;
    case AlgebraKind::commutator:
      return commutator(a, b);
    case AlgebraKind::anticommutator:
      return anticommutator(a, b);
  }
  return a;
}

}  // namespace sieved
