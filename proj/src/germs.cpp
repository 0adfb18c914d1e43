#include "germ/germs.hpp"

#include <utility>

namespace germ {

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw GermError(code, what);
}

}  // namespace

MapGerm3::MapGerm3(Jet c1, Jet c2, Jet c3)
    : c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
  detail::require_same_order(c1_, c2_);
  detail::require_same_order(c1_, c3_);
  for (const Jet* c : {&c1_, &c2_, &c3_})
    require(is_zero(value_at_origin(*c)), ErrorCode::NotAGerm,
            "component " + to_string(*c) + " does not vanish at the origin");
}

const Jet& MapGerm3::component(int k) const {
  switch (k) {
    case 0: return c1_;
    case 1: return c2_;
    default: return c3_;
  }
}

MapGerm3 compose_source(const MapGerm3& m, const Jet& u, const Jet& v) {
  return MapGerm3(compose2(m.c1(), u, v), compose2(m.c2(), u, v), compose2(m.c3(), u, v));
}

MapGerm3 apply_target(const RationalMatrix3& a, const MapGerm3& m) {
  std::array<Jet, 3> out{Jet(m.order()), Jet(m.order()), Jet(m.order())};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] = add(out[i], scale(m.component(k), Rational(a(i, k))));
  return MapGerm3(out[0], out[1], out[2]);
}

PedalGerm::PedalGerm(Jet n, Jet p) : n_(std::move(n)), p_(std::move(p)) {
  detail::require_same_order(n_, p_);
  require(is_zero(value_at_origin(n_)), ErrorCode::InvariantViolation, "n(0,0) != 0");
  require(!is_zero(partial_at_origin(n_, 1, 0)), ErrorCode::InvariantViolation, "dn/dx(0,0) = 0");
  require(!p_.is_zero(), ErrorCode::InvariantViolation, "p is the zero jet");
  require(is_zero(value_at_origin(p_)), ErrorCode::InvariantViolation, "p(0,0) != 0");
}

MapGerm3 NormalizedLegendrianGerm::as_map() const {
  return MapGerm3(phi1_, phi2_, Jet::y(order()));
}

NormalizedLegendrianGerm NormalizedLegendrianGerm::from_witness(Jet phi1, Jet phi2, Jet pedal_n) {
  detail::require_same_order(phi1, phi2);
  detail::require_same_order(phi1, pedal_n);
  require(is_zero(value_at_origin(phi1)) && is_zero(value_at_origin(phi2)), ErrorCode::NotAGerm,
          "phi1 and phi2 must vanish at the origin");
  require(is_zero(partial_at_origin(phi2, 1, 0)), ErrorCode::ConditionBViolated,
          "dphi2/dx(0,0) != 0");
  Jet p = d_dx(phi2);
  require(agree(mul(pedal_n, p), d_dx(phi1)), ErrorCode::NotLegendrianAtJetOrder,
          "witness does not satisfy dphi1/dx = n dphi2/dx");
  require(is_zero(value_at_origin(pedal_n)), ErrorCode::ConditionCViolated,
          "n(0,0) != 0: the normal at the origin is not +-d/dX");
  require(!is_zero(partial_at_origin(pedal_n, 1, 0)), ErrorCode::KernelFieldDegenerate,
          "dn/dx(0,0) = 0, which no normalized Legendrian germ admits");
  return NormalizedLegendrianGerm(std::move(phi1), std::move(phi2), std::move(pedal_n));
}

MapGerm3 assemble_pedal(const Jet& n, const Jet& p) {
  return MapGerm3(mul(n, p), p, Jet::y(n.order()));
}

MapGerm3 assemble_pedal(const PedalGerm& g) { return assemble_pedal(g.n(), g.p()); }

PedalGerm decompose_pedal(const MapGerm3& m) {
  require(m.c3() == Jet::y(m.order()), ErrorCode::ThirdComponentNotY,
          "third component is " + to_string(m.c3()));
  require(!m.c2().is_zero(), ErrorCode::InvariantViolation, "p is the zero jet");
  Quotient<Rational> q = divide(m.c1(), m.c2());
  return PedalGerm(q.value, m.c2());
}

NormalizedLegendrianGerm validate_normalized(const Jet& phi1, const Jet& phi2) {
  detail::require_same_order(phi1, phi2);
  require(is_zero(value_at_origin(phi1)) && is_zero(value_at_origin(phi2)), ErrorCode::NotAGerm,
          "phi1 and phi2 must vanish at the origin");
  require(is_zero(partial_at_origin(phi2, 1, 0)), ErrorCode::ConditionBViolated,
          "dphi2/dx(0,0) != 0");
  Jet n(phi1.order());
  try {
    n = divide(d_dx(phi1), d_dx(phi2)).value;
  } catch (const GermError& e) {
    if (e.code() != ErrorCode::NotDivisible && e.code() != ErrorCode::ZeroDivisor) throw;
    throw GermError(ErrorCode::NotLegendrianAtJetOrder,
                    std::string("no smooth normal with n1 != 0 (") + e.what() + ")");
  }
  return NormalizedLegendrianGerm::from_witness(phi1, phi2, n);
}

LocalAlgebra local_algebra(const Jet& p) {
  if (!is_zero(partial_at_origin(p, 1, 0))) return LocalAlgebra::Regular;
  if (!is_zero(partial_at_origin(p, 2, 0))) return LocalAlgebra::Fold;
  return LocalAlgebra::Degenerate;
}

std::string to_string(LocalAlgebra a) {
  switch (a) {
    case LocalAlgebra::Regular: return "Q(x,y)";
    case LocalAlgebra::Fold: return "Q(x^2,y)";
    case LocalAlgebra::Degenerate: return "degenerate";
  }
  return "degenerate";
}

}  // namespace germ
