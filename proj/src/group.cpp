#include "sieved/group.hpp"

#include <numbers>
#include <tuple>

#include "sieved/errors.hpp"

namespace sieved {

namespace {

int reduce(long long k, int N) {
  long long r = k % N;
  return static_cast<int>(r < 0 ? r + N : r);
}

}  // namespace

cplx root_of_unity(int N, long long k) {
  if (N < 1) throw ArgumentError("root_of_unity: N must be >= 1");
  const int r = reduce(k, N);
  if (r == 0) return {1.0, 0.0};
  // Exact values on the axes keep R_j^2 = I free of rounding.
  if (4 * r == N) return {0.0, 1.0};
  if (2 * r == N) return {-1.0, 0.0};
  if (4 * r == 3 * N) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * r / N);
}

GroupElement::GroupElement(Kind kind, int index, int N) : kind_(kind), index_(index), N_(N) {
  if (N < 1) throw ArgumentError("GroupElement: N must be >= 1");
  index_ = reduce(index, N);
  if (kind_ == Kind::rotation && index_ == 0) kind_ = Kind::identity;
  if (kind_ == Kind::identity) index_ = 0;
}

GroupElement GroupElement::identity(int N) { return {Kind::identity, 0, N}; }
GroupElement GroupElement::reflection(int j, int N) { return {Kind::reflection, j, N}; }
GroupElement GroupElement::rotation(int k, int N) { return {Kind::rotation, k, N}; }

cplx GroupElement::phase() const { return root_of_unity(N_, index_); }

cplx GroupElement::map(cplx z) const {
  switch (kind_) {
    case Kind::identity:
      return z;
    case Kind::rotation:
      return phase() * z;
    case Kind::reflection:
      return phase() / z;
  }
  return z;
}

GroupElement GroupElement::inverse() const {
  if (kind_ == Kind::rotation) return rotation(-index_, N_);
  return *this;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.N_ != b.N_) throw ArgumentError("GroupElement: mismatched dihedral orders");
  const int N = a.N_;
  using K = GroupElement::Kind;
  if (a.kind_ == K::identity) return b;
  if (b.kind_ == K::identity) return a;
  if (a.kind_ == K::rotation && b.kind_ == K::rotation) {
    return GroupElement::rotation(a.index_ + b.index_, N);
  }
  if (a.kind_ == K::reflection && b.kind_ == K::reflection) {
    return GroupElement::rotation(b.index_ - a.index_, N);
  }
  if (a.kind_ == K::rotation) return GroupElement::reflection(b.index_ - a.index_, N);
  return GroupElement::reflection(a.index_ + b.index_, N);
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::tuple(a.N_, static_cast<int>(a.kind_), a.index_) <
         std::tuple(b.N_, static_cast<int>(b.kind_), b.index_);
}

std::string GroupElement::to_string() const {
  switch (kind_) {
    case Kind::identity:
      return "I";
    case Kind::reflection:
      return "R" + std::to_string(index_);
    case Kind::rotation:
      return "T" + std::to_string(index_);
  }
  return "?";
}

}  // namespace sieved
