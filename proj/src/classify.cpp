#include "germ/classify.hpp"

#include "germ/legendrian.hpp"

namespace germ {

std::string to_string(Tag t) {
  switch (t) {
    case Tag::NonSingular: return "NonSingular";
    case Tag::WhitneyUmbrella: return "WhitneyUmbrella";
    case Tag::Swallowtail: return "Swallowtail";
    case Tag::CuspidalEdge: return "CuspidalEdge";
    case Tag::Unrecognized: return "Unrecognized";
  }
  return "Unrecognized";
}

const Rational* Classification::find(const std::string& name) const {
  for (const auto& d : diagnostics)
    if (d.name == name) return &d.value;
  return nullptr;
}

Classification classify_pedal(const PedalGerm& g) {
  const Jet& p = g.p();
  const Rational p0 = value_at_origin(p);
  const Rational px = partial_at_origin(p, 1, 0);
  const Rational pxx = partial_at_origin(p, 2, 0);
  const Rational py = partial_at_origin(p, 0, 1);

  Classification c;
  c.diagnostics = {{"p(0,0)", p0},
                   {"p_x(0,0)", px},
                   {"p_xx(0,0)", pxx},
                   {"p_y(0,0)", py},
                   {"sign p_xx(0,0)", Rational(sgn(pxx))}};
  if (!is_zero(px))
    c.tag = Tag::NonSingular;
  else if (!is_zero(pxx) && !is_zero(py))
    c.tag = Tag::WhitneyUmbrella;
  return c;
}

bool whitney_criterion(const MapGerm3& m) {
  for (int k = 0; k < 3; ++k)
    if (!is_zero(partial_at_origin(m.component(k), 1, 0)))
      throw GermError(ErrorCode::KernelNotX, "dm/dx(0,0) != 0");
  RationalMatrix3 a;
  for (int k = 0; k < 3; ++k) {
    a(0, k) = partial_at_origin(m.component(k), 0, 1);
    a(1, k) = partial_at_origin(m.component(k), 2, 0);
    a(2, k) = partial_at_origin(m.component(k), 1, 1);
  }
  return !is_zero(Rational(a.determinant()));
}

Classification classify_legendrian_jacobian(const Jet& lj) {
  const Rational l0 = value_at_origin(lj);
  const Rational lx = partial_at_origin(lj, 1, 0);
  const Rational ly = partial_at_origin(lj, 0, 1);
  const Rational lxx = partial_at_origin(lj, 2, 0);
  const Rational lxy = partial_at_origin(lj, 1, 1);
  RationalMatrix2 jac;
  jac << lx, ly, lxx, lxy;
  const Rational det = jac.determinant();

  Classification c;
  c.diagnostics = {{"L(0,0)", l0},     {"L_x(0,0)", lx},  {"L_xx(0,0)", lxx},
                   {"L_y(0,0)", ly},   {"L_xy(0,0)", lxy}, {"det d(L,L_x)(0,0)", det}};
  if (!is_zero(l0)) return c;
  if (!is_zero(lx))
    c.tag = Tag::CuspidalEdge;
  else if (!is_zero(lxx) && !is_zero(det))
    c.tag = Tag::Swallowtail;
  return c;
}

Classification classify_legendrian(const NormalizedLegendrianGerm& germ) {
  return classify_legendrian_jacobian(lj_reduced(germ));
}

Tag integrated_tag(Tag pedal) {
  switch (pedal) {
    case Tag::NonSingular: return Tag::CuspidalEdge;
    case Tag::WhitneyUmbrella: return Tag::Swallowtail;
    default: return Tag::Unrecognized;
  }
}

CorrespondenceReport correspondence_check(const PedalGerm& g) {
  CorrespondenceReport r;
  r.pedal = classify_pedal(g);
  r.legendrian = classify_legendrian(integrate_I(g));
  r.consistent = integrated_tag(r.pedal.tag) == r.legendrian.tag;
  return r;
}

}  // namespace germ
