#include "germ/legendrian.hpp"

#include <stdexcept>

namespace germ {

Vec3<Jet> partial_x(const NormalizedLegendrianGerm& germ) {
  const int n = germ.order();
  return {d_dx(germ.phi1()), d_dx(germ.phi2()), Jet(n)};
}

Vec3<Jet> partial_y(const NormalizedLegendrianGerm& germ) {
  const int n = germ.order();
  return {d_dy(germ.phi1()), d_dy(germ.phi2()), Jet::constant(Rational(1), n)};
}

NormalField normal_field(const NormalizedLegendrianGerm& germ) {
  const Jet& n = germ.pedal_n();
  NormalField f{Jet::constant(Rational(1), germ.order()), -n,
                -(d_dy(germ.phi1()) - n * d_dy(germ.phi2()))};
  const Jet zero(germ.order());
  if (!agree(dot(f.as_vector(), partial_x(germ)), zero) ||
      !agree(dot(f.as_vector(), partial_y(germ)), zero))
    throw std::logic_error("normal field is not orthogonal to the germ");
  return f;
}

bool lift_rank_check(const NormalizedLegendrianGerm& germ, const NormalField& field) {
  const Jet y = Jet::y(germ.order());
  const std::array<const Jet*, 5> rows{&germ.phi1(), &germ.phi2(), &y, &field.nu2, &field.nu3};
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      RationalMatrix2 m;
      m << partial_at_origin(*rows[a], 1, 0), partial_at_origin(*rows[a], 0, 1),
          partial_at_origin(*rows[b], 1, 0), partial_at_origin(*rows[b], 0, 1);
      if (!is_zero(Rational(m.determinant()))) return true;
    }
  }
  return false;
}

Jet lj_reduced(const NormalizedLegendrianGerm& germ) { return d_dx(germ.phi2()); }

Jet lj_det(const NormalizedLegendrianGerm& germ, const NormalField& field) {
  return det3(partial_x(germ), partial_y(germ), field.as_vector());
}

}  // namespace germ
