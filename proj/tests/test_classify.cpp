#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "germ/classify.hpp"
#include "germ/legendrian.hpp"
#include "germ/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace germ;

namespace {

Jet J(const char* s) { return parse_expr(s, kDefaultOrder); }

double diag(const Classification& c, const char* name) {
  const Rational* v = c.find(name);
  REQUIRE(v != nullptr);
  return v->get_d();
}

// Sign of det(m_y, m_xx, m_xy) at the origin from finite differences.
int fd_whitney_sign(const MapGerm3& m) {
  using testing::fd_partial;
  Eigen::Matrix3d a;
  for (int k = 0; k < 3; ++k) {
    a(0, k) = fd_partial(m.component(k), 0, 1);
    a(1, k) = fd_partial(m.component(k), 2, 0);
    a(2, k) = fd_partial(m.component(k), 1, 1);
  }
  const double d = a.determinant();
  if (std::abs(d) < 1e-3) return 0;
  return d > 0 ? 1 : -1;
}

Jet scaled(const Jet& f, const Rational& a, const Rational& b, const Rational& t) {
  return scale(compose2(f, scale(Jet::x(), a), scale(Jet::y(), b)), t);
}

}  // namespace

TEST_CASE("pedal classification fixtures") {
  Classification w = classify_pedal(PedalGerm(J("-x"), J("-x^2 - y")));
  CHECK(w.tag == Tag::WhitneyUmbrella);
  CHECK(diag(w, "p_xx(0,0)") == -2);
  CHECK(diag(w, "p_y(0,0)") == -1);
  CHECK(w.diagnostics.size() == 5);

  Classification ns = classify_pedal(PedalGerm(J("x"), J("x")));
  CHECK(ns.tag == Tag::NonSingular);
  CHECK(diag(ns, "p_x(0,0)") == 1);

  CHECK(classify_pedal(PedalGerm(J("x"), J("x^3 + y"))).tag == Tag::Unrecognized);
  CHECK(classify_pedal(PedalGerm(J("x"), J("x^2 + y^2"))).tag == Tag::Unrecognized);
  CHECK(to_string(Tag::WhitneyUmbrella) == "WhitneyUmbrella");
}

TEST_CASE("cross-cap criterion") {
  CHECK(whitney_criterion(MapGerm3(J("x*y"), J("x^2"), J("y"))));
  CHECK(whitney_criterion(MapGerm3(J("x^3 + x*y"), J("-x^2 - y"), J("y"))));
  CHECK_FALSE(whitney_criterion(MapGerm3(J("x^3"), J("x^2"), J("y"))));
  try {
    (void)whitney_criterion(MapGerm3(J("x^2"), J("x"), J("y")));
    FAIL("expected KernelNotX");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::KernelNotX);
  }
}

TEST_CASE("Legendrian classification fixtures") {
  NormalizedLegendrianGerm st = validate_normalized(J("1/4*x^4 + 1/2*x^2*y"), J("-1/3*x^3 - x*y"));
  Classification c = classify_legendrian(st);
  CHECK(c.tag == Tag::Swallowtail);
  CHECK(diag(c, "det d(L,L_x)(0,0)") == -2);

  Classification c4 = classify_legendrian(validate_normalized(J("3*x^4 + x^2*y"), J("-4*x^3 - 2*x*y")));
  CHECK(c4.tag == Tag::Swallowtail);
  CHECK(diag(c4, "det d(L,L_x)(0,0)") == -48);

  CHECK(classify_legendrian(validate_normalized(J("1/3*x^3"), J("1/2*x^2"))).tag == Tag::CuspidalEdge);
  CHECK(classify_legendrian(integrate_I(PedalGerm(J("x"), J("x^3 + y")))).tag == Tag::Unrecognized);
  CHECK(classify_legendrian_jacobian(J("1 + x")).tag == Tag::Unrecognized);
  CHECK(classify_legendrian_jacobian(J("x^2 + y^2")).tag == Tag::Unrecognized);
}

TEST_CASE("diagnostics agree with finite differences") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    NormalizedLegendrianGerm g = testing::random_normalized(rng);
    Jet L = lj_reduced(g);
    Classification c = classify_legendrian(g);
    auto close = [](double exact, double approx) { return std::abs(exact - approx) < 1e-3 * (1 + std::abs(exact)); };
    CHECK(close(diag(c, "L_x(0,0)"), testing::fd_partial(L, 1, 0)));
    if (c.find("L_xx(0,0)")) {
      CHECK(close(diag(c, "L_xx(0,0)"), testing::fd_partial(L, 2, 0)));
      CHECK(close(diag(c, "L_y(0,0)"), testing::fd_partial(L, 0, 1)));
      CHECK(close(diag(c, "L_xy(0,0)"), testing::fd_partial(L, 1, 1)));
    }
  }
}

TEST_CASE("property: integration maps pedal classes to Legendrian classes") {
  std::mt19937 rng(62);
  int whitney = 0, nonsingular = 0;
  for (int trial = 0; trial < 500; ++trial) {
    PedalGerm g = testing::random_pedal(rng);
    CorrespondenceReport r = correspondence_check(g);
    CHECK(r.consistent);
    CHECK(r.legendrian.tag == integrated_tag(r.pedal.tag));
    whitney += r.pedal.tag == Tag::WhitneyUmbrella;
    nonsingular += r.pedal.tag == Tag::NonSingular;
  }
  CHECK(whitney > 50);
  CHECK(nonsingular > 25);
}

TEST_CASE("property: cross-cap criterion matches the pedal test and a float oracle") {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    PedalGerm g = testing::random_pedal(rng);
    MapGerm3 m = assemble_pedal(g);
    if (!is_zero(partial_at_origin(g.p(), 1, 0))) continue;
    const bool expected = classify_pedal(g).tag == Tag::WhitneyUmbrella;
    CHECK(whitney_criterion(m) == expected);
    // det = -n_x p_y p_xx at the origin.
    Rational det = -partial_at_origin(g.n(), 1, 0) * partial_at_origin(g.p(), 0, 1) *
                   partial_at_origin(g.p(), 2, 0);
    CHECK(fd_whitney_sign(m) == sgn(det));
  }
}

TEST_CASE("property: positive units do not change the Legendrian class") {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    NormalizedLegendrianGerm g = testing::random_normalized(rng);
    Jet L = lj_reduced(g);
    Jet u = testing::random_unit(rng);
    CHECK(classify_legendrian_jacobian(mul(L, u)).tag == classify_legendrian(g).tag);
    NormalField f = normal_field(g);
    CHECK(classify_legendrian_jacobian(lj_det(g, f)).tag == classify_legendrian(g).tag);
  }
}

TEST_CASE("property: diagonal source and target scalings keep the class") {
  std::mt19937 rng(65);
  std::uniform_int_distribution<int> pick(1, 4);
  std::uniform_int_distribution<int> sign(0, 1);
  auto rnd = [&] { return make_rational(pick(rng) * (sign(rng) ? 1 : -1), pick(rng)); };
  for (int trial = 0; trial < 200; ++trial) {
    PedalGerm g = testing::random_pedal(rng);
    const Rational a = rnd(), b = rnd(), t1 = rnd(), t2 = rnd();

    // (n p, p, y) -> (t1 n p, t2 p, y / b) o (a x, b y) is again a pedal germ.
    PedalGerm h(scaled(g.n(), a, b, t1 / t2), scaled(g.p(), a, b, t2));
    CHECK(classify_pedal(h).tag == classify_pedal(g).tag);

    NormalizedLegendrianGerm P = integrate_I(g);
    NormalizedLegendrianGerm Q = validate_normalized(scaled(P.phi1(), a, b, t1), scaled(P.phi2(), a, b, t2));
    CHECK(classify_legendrian(Q).tag == classify_legendrian(P).tag);
  }
}
