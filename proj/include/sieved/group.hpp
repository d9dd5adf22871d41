#pragma once

#include <complex>
#include <string>

namespace sieved {

using cplx = std::complex<double>;

/// Primitive N-th root of unity exp(2 pi i / N) raised to the power k.
cplx root_of_unity(int N, long long k);

/// Element of the dihedral group D_N acting on functions of z:
///   identity        f(z) -> f(z)
///   reflection R_j  f(z) -> f(q^j / z)
///   rotation   T_k  f(z) -> f(q^k z)
/// with q = exp(2 pi i / N). Indices are kept reduced mod N.
///
/// Products follow operator order: (a * b) f = a(b f), so that
/// R_k R_j = T_{j-k}, T_k R_j = R_{j-k} and R_j T_k = R_{j+k}.
class GroupElement {
 public:
  enum class Kind { identity, reflection, rotation };

  GroupElement() = default;

  static GroupElement identity(int N);
  static GroupElement reflection(int j, int N);
  static GroupElement rotation(int k, int N);

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  int order() const { return N_; }

  bool is_identity() const { return kind_ == Kind::identity; }
  bool is_reflection() const { return kind_ == Kind::reflection; }
  bool is_rotation() const { return kind_ == Kind::rotation; }

  /// The phase c with g(z) = c z (rotation) or g(z) = c / z (reflection).
  cplx phase() const;

  /// The point map z -> g(z); the operator acts as f -> f o g.
  cplx map(cplx z) const;

  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;

  /// Total order so elements can key associative containers.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::string to_string() const;

 private:
  GroupElement(Kind kind, int index, int N);

  Kind kind_ = Kind::identity;
  int index_ = 0;
  int N_ = 1;
};

}  // namespace sieved
