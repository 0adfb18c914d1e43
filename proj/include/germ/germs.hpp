#pragma once

#include <string>

#include "germ/jet.hpp"

namespace germ {

/// A map-germ (R^2,0) -> (R^3,0) given by three component jets.
class MapGerm3 {
 public:
  /// Throws NotAGerm unless every component vanishes at the origin.
  MapGerm3(Jet c1, Jet c2, Jet c3);

  const Jet& c1() const { return c1_; }
  const Jet& c2() const { return c2_; }
  const Jet& c3() const { return c3_; }
  const Jet& component(int k) const;
  int order() const { return c1_.order(); }

  friend bool operator==(const MapGerm3&, const MapGerm3&) = default;

 private:
  Jet c1_, c2_, c3_;
};

/// Source substitution (x, y) -> (u, v) applied to every component.
MapGerm3 compose_source(const MapGerm3& m, const Jet& u, const Jet& v);

/// Linear target change (X, Y, Z) -> A (X, Y, Z).
MapGerm3 apply_target(const RationalMatrix3& a, const MapGerm3& m);

/// The pair (n, p) of a germ of pedal unfolding type (n p, p, y).
///
/// Invariants: equal orders, n(0,0) = 0, dn/dx(0,0) != 0, p(0,0) = 0 and p is
/// not the zero jet. Violations raise InvariantViolation naming the condition.
class PedalGerm {
 public:
  PedalGerm(Jet n, Jet p);

  const Jet& n() const { return n_; }
  const Jet& p() const { return p_; }
  int order() const { return n_.order(); }

 private:
  Jet n_, p_;
};

/// A normalized Legendrian germ (phi1, phi2, y) together with the certified
/// witness n of d(phi1)/dx = n d(phi2)/dx. Only obtainable through
/// validate_normalized or from_witness, both of which check every invariant.
class NormalizedLegendrianGerm {
 public:
  /// Accepts an externally supplied witness after checking all invariants
  /// (same error codes as validate_normalized).
  static NormalizedLegendrianGerm from_witness(Jet phi1, Jet phi2, Jet pedal_n);

  const Jet& phi1() const { return phi1_; }
  const Jet& phi2() const { return phi2_; }
  const Jet& pedal_n() const { return pedal_n_; }
  int order() const { return phi1_.order(); }
  MapGerm3 as_map() const;

 private:
  NormalizedLegendrianGerm(Jet phi1, Jet phi2, Jet pedal_n)
      : phi1_(std::move(phi1)), phi2_(std::move(phi2)), pedal_n_(std::move(pedal_n)) {}

  Jet phi1_, phi2_, pedal_n_;
};

/// (n p, p, y) without validating n and p.
MapGerm3 assemble_pedal(const Jet& n, const Jet& p);
MapGerm3 assemble_pedal(const PedalGerm& g);

/// Recovers (n, p) from (n p, p, y).
/// Errors: ThirdComponentNotY, NotDivisible, InvariantViolation.
PedalGerm decompose_pedal(const MapGerm3& m);

/// Errors: NotAGerm, ConditionBViolated, NotLegendrianAtJetOrder,
/// ConditionCViolated, KernelFieldDegenerate.
NormalizedLegendrianGerm validate_normalized(const Jet& phi1, const Jet& phi2);

/// Isomorphism class of the local algebra Q(p(x,y), y), decided from jets:
/// Regular   <=> dp/dx(0) != 0            (Q = Q(x, y))
/// Fold      <=> dp/dx(0) = 0, d2p/dx2(0) != 0  (Q = Q(x^2, y))
enum class LocalAlgebra { Regular, Fold, Degenerate };

LocalAlgebra local_algebra(const Jet& p);
std::string to_string(LocalAlgebra a);

}  // namespace germ
