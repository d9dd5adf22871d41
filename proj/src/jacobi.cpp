#include "sieved/jacobi.hpp"

#include <cmath>

#include "sieved/errors.hpp"

namespace sieved {

namespace {

std::pair<int, int> split_index(int n, int N) {
  if (N < 1) throw ArgumentError("sieving order N must be >= 1");
  if (n < 0) throw ArgumentError("index n must be >= 0");
  return {n / N, n % N};
}

LaurentPoly psi_from_phi(const LaurentPoly& phi, int n) {
  if (n % 2 == 0) return phi.reflect().shift(n / 2);
  return phi.shift(-(n - 1) / 2);
}

}  // namespace

LaurentPoly sieved_phi(const JacobiParams& p, int N, int n) {
  const auto [k, j] = split_index(n, N);
  const OpucFamily plain = szego_sequence(VerblunskySequence::jacobi(p), k);
  return plain.phi(k).substitute_power(N).shift(j);
}

LaurentPoly sieved_psi(const JacobiParams& p, int N, int n) { return psi_from_phi(sieved_phi(p, N, n), n); }

SievedFamily::SievedFamily(const JacobiParams& p, int N, int n_max) : params_(p), N_(N), n_max_(n_max) {
  if (N < 1) throw ArgumentError("SievedFamily: N must be >= 1");
  if (n_max < 0) throw ArgumentError("SievedFamily: n_max must be >= 0");
  const int k_max = n_max / N;
  const OpucFamily plain = szego_sequence(VerblunskySequence::jacobi(p), k_max);
  for (int k = 0; k <= k_max; ++k) plain_psi_.push_back(psi_n(plain, k));
  for (int n = 0; n <= n_max; ++n) {
    const int k = n / N;
    const int j = n % N;
    phi_.push_back(plain.phi(k).substitute_power(N).shift(j));
    psi_.push_back(psi_from_phi(phi_.back(), n));
  }
}

const LaurentPoly& SievedFamily::psi(int n) const {
  if (n < 0 || n > n_max_) throw ArgumentError("SievedFamily: psi index out of cached range");
  return psi_[static_cast<std::size_t>(n)];
}

const LaurentPoly& SievedFamily::phi(int n) const {
  if (n < 0 || n > n_max_) throw ArgumentError("SievedFamily: phi index out of cached range");
  return phi_[static_cast<std::size_t>(n)];
}

const LaurentPoly& SievedFamily::plain_psi(int k) const {
  if (k < 0 || k >= static_cast<int>(plain_psi_.size())) throw ArgumentError("SievedFamily: plain psi index out of range");
  return plain_psi_[static_cast<std::size_t>(k)];
}

std::string to_string(PsiCase c) {
  switch (c) {
    case PsiCase::n_even_k_even:
      return "n_even_k_even";
    case PsiCase::n_even_k_odd:
      return "n_even_k_odd";
    case PsiCase::n_odd_k_even:
      return "n_odd_k_even";
    case PsiCase::n_odd_k_odd:
      return "n_odd_k_odd";
  }
  return "?";
}

PsiCaseDescriptor psi_case(int n, int N) {
  const auto [k, j] = split_index(n, N);
  PsiCaseDescriptor d{n, N, k, j, 0, 1, PsiCase::n_even_k_even};
  const bool n_even = n % 2 == 0;
  const bool k_even = k % 2 == 0;
  if (n_even && k_even) {
    d.case_id = PsiCase::n_even_k_even;
    d.nu = -j / 2;
    d.power_sign = 1;
  } else if (n_even) {
    d.case_id = PsiCase::n_even_k_odd;
    d.nu = (N - j) / 2;
    d.power_sign = -1;
  } else if (k_even) {
    d.case_id = PsiCase::n_odd_k_even;
    d.nu = (j + 1) / 2;
    d.power_sign = -1;
  } else {
    d.case_id = PsiCase::n_odd_k_odd;
    d.nu = (j + 1 - N) / 2;
    d.power_sign = 1;
  }
  return d;
}

PsiCaseDescriptor printed_psi_case(int n, int N) {
  const auto [k, j] = split_index(n, N);
  PsiCaseDescriptor d{n, N, k, j, 0, 1, PsiCase::n_even_k_even};
  const bool j_even = j % 2 == 0;
  if (n % 2 == 0) {
    d.nu = j_even ? -j / 2 : (j + 1) / 2;
    d.power_sign = j_even ? 1 : -1;
  } else if (N % 2 == 0) {
    d.nu = j_even ? (N - j) / 2 : (-N + j + 1) / 2;
    d.power_sign = j_even ? -1 : 1;
  } else {
    d.nu = j_even ? (-N + j + 1) / 2 : (N - j) / 2;
    d.power_sign = j_even ? 1 : -1;
  }
  d.case_id = psi_case(n, N).case_id;
  return d;
}

LaurentPoly reconstruct_psi(const PsiCaseDescriptor& d, const LaurentPoly& plain_psi_k) {
  return plain_psi_k.substitute_power(d.power_sign * d.N).shift(d.nu);
}

PhaseTable PhaseTable::measure(const SievedFamily& family, int n_max, const SamplePlan& plan) {
  PhaseTable t;
  t.N = family.sieve_order();
  const int N = t.N;
  const auto zs = plan.points();
  for (int n = 0; n <= n_max; ++n) {
    const LaurentPoly& psi = family.psi(n);
    for (int j = 0; j < N; ++j) {
      for (int dir : {-1, 1}) {
        const cplx c = root_of_unity(N, dir * j);
        cplx first = 0.0;
        for (std::size_t s = 0; s < zs.size(); ++s) {
          const cplx ratio = psi(c * zs[s]) / psi(zs[s]);
          if (s == 0) {
            first = ratio;
          } else {
            t.max_spread = std::max(t.max_spread, std::abs(ratio - first));
          }
        }
        t.max_modulus_defect = std::max(t.max_modulus_defect, std::abs(std::abs(first) - 1.0));
        (dir < 0 ? t.inverse_rotation : t.rotation)[{n, j}] = first;
      }
    }
  }
  return t;
}

double weight_rho(const JacobiParams& p, double theta) {
  const double c = std::cos(theta);
  // Clamp rounding below zero at the endpoints.
  const double lo = std::max(0.0, 1.0 - c);
  const double hi = std::max(0.0, 1.0 + c);
  return std::pow(lo, p.alpha + 0.5) * std::pow(hi, p.beta + 0.5);
}

double weight_rho_N(const JacobiParams& p, int N, double theta) { return weight_rho(p, N * theta); }

double weight_w(const JacobiParams& p, int N, double x) {
  if (!(std::abs(x) < 2.0)) throw DomainError("weight_w: x must lie in (-2, 2)");
  const double theta = std::acos(x / 2.0);
  return weight_rho_N(p, N, theta) / std::sqrt(4.0 - x * x);
}

double weights(WeightKind which, const JacobiParams& p, int N, double point) {
  if (p.alpha + 0.5 <= -1.0 || p.beta + 0.5 <= -1.0) {
    throw DomainError("weights: exponents alpha + 1/2 and beta + 1/2 must exceed -1");
  }
  switch (which) {
    case WeightKind::rho:
      return weight_rho(p, point);
    case WeightKind::rho_N:
      return weight_rho_N(p, N, point);
    case WeightKind::w:
      return weight_w(p, N, point);
  }
  return 0.0;
}

}  // namespace sieved
