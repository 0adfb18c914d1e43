#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/germs.hpp"

namespace germ {

/// Integration: (n p, p, y) -> (int_0^x n p dx, int_0^x p dx, y).
/// The result is re-validated as a normalized Legendrian germ; its witness is
/// the input n. Errors: DegreeOverflow when n p reaches the truncation order.
NormalizedLegendrianGerm integrate_I(const PedalGerm& g);

/// Jet-level integration of an unvalidated pair; returns (phi1, phi2).
std::pair<Jet, Jet> integrate_pair(const Jet& n, const Jet& p);

/// Differentiation: (phi1, phi2, y) -> (n, dphi2/dx) with n the stored witness.
PedalGerm differentiate_D(const NormalizedLegendrianGerm& germ);

struct ComponentCheck {
  std::string name;
  bool equal = true;
  int compared_degree = 0;
  std::optional<Monomial> first_difference;
  Rational expected;
  Rational actual;
};

struct RoundTripReport {
  bool equal = true;
  std::vector<ComponentCheck> components;
};

/// Checks D(I(g)) == g component-wise on the guaranteed degree range.
RoundTripReport roundtrip_DI(const PedalGerm& g);

/// Checks I(D(P)) == P component-wise on the guaranteed degree range.
/// Note I(D(P)) vanishes on x = 0, so P with phi(0, y) != 0 reports a mismatch.
RoundTripReport roundtrip_ID(const NormalizedLegendrianGerm& germ);

}  // namespace germ
