#include "germ/calculus.hpp"

#include <algorithm>
#include <stdexcept>

namespace germ {

std::pair<Jet, Jet> integrate_pair(const Jet& n, const Jet& p) {
  // Coefficients past the validity degree carry no information; integrating
  // them would only trip the overflow check.
  return {int0_x(truncate_to_valid(mul(n, p))), int0_x(truncate_to_valid(p))};
}

NormalizedLegendrianGerm integrate_I(const PedalGerm& g) {
  auto [phi1, phi2] = integrate_pair(g.n(), g.p());
  NormalizedLegendrianGerm checked = validate_normalized(phi1, phi2);
  if (!agree(checked.pedal_n(), g.n()))
    throw std::logic_error("integration lost the pedal witness n = " + to_string(g.n()));
  return NormalizedLegendrianGerm::from_witness(std::move(phi1), std::move(phi2), g.n());
}

PedalGerm differentiate_D(const NormalizedLegendrianGerm& germ) {
  return PedalGerm(germ.pedal_n(), d_dx(germ.phi2()));
}

namespace {

ComponentCheck compare(std::string name, const Jet& expected, const Jet& actual) {
  ComponentCheck c;
  c.name = std::move(name);
  c.compared_degree = std::min(expected.valid_degree(), actual.valid_degree());
  c.first_difference = first_difference(expected, actual);
  c.equal = expected.order() == actual.order() && !c.first_difference;
  if (c.first_difference) {
    c.expected = expected.coeff(c.first_difference->x, c.first_difference->y);
    c.actual = actual.coeff(c.first_difference->x, c.first_difference->y);
  }
  return c;
}

RoundTripReport finish(std::vector<ComponentCheck> checks) {
  RoundTripReport r;
  r.components = std::move(checks);
  r.equal = std::all_of(r.components.begin(), r.components.end(),
                        [](const ComponentCheck& c) { return c.equal; });
  return r;
}

}  // namespace

RoundTripReport roundtrip_DI(const PedalGerm& g) {
  PedalGerm back = differentiate_D(integrate_I(g));
  return finish({compare("n", g.n(), back.n()), compare("p", g.p(), back.p())});
}

RoundTripReport roundtrip_ID(const NormalizedLegendrianGerm& germ) {
  NormalizedLegendrianGerm back = integrate_I(differentiate_D(germ));
  return finish({compare("phi1", germ.phi1(), back.phi1()),
                 compare("phi2", germ.phi2(), back.phi2())});
}

}  // namespace germ
