#pragma once

#include <array>

#include "germ/germs.hpp"

namespace germ {

template <typename T>
using Vec3 = std::array<T, 3>;

template <typename T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <typename T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// det(a, b, c) with a, b, c as rows.
template <typename T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(cross(a, b), c);
}

/// Unnormalized normal (1, nu2, nu3) in the chart nu1 = 1.
struct NormalField {
  Jet nu1, nu2, nu3;

  Vec3<Jet> as_vector() const { return {nu1, nu2, nu3}; }
};

Vec3<Jet> partial_x(const NormalizedLegendrianGerm& germ);
Vec3<Jet> partial_y(const NormalizedLegendrianGerm& germ);

/// nu2 = -n, nu3 = -(dphi1/dy - n dphi2/dy). Both orthogonality relations
/// with dPhi/dx and dPhi/dy are checked before returning.
NormalField normal_field(const NormalizedLegendrianGerm& germ);

/// Rank 2 at the origin of (x,y) -> (phi1, phi2, y, nu2, nu3).
bool lift_rank_check(const NormalizedLegendrianGerm& germ, const NormalField& field);

/// dphi2/dx: the Legendrian Jacobian up to the positive unit factor |nu~|.
Jet lj_reduced(const NormalizedLegendrianGerm& germ);

/// det(dPhi/dx, dPhi/dy, nu~) = lj_reduced * (1 + nu2^2 + nu3^2).
Jet lj_det(const NormalizedLegendrianGerm& germ, const NormalField& field);

}  // namespace germ
