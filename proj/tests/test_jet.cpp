#include <doctest.h>

#include <random>

#include "germ/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace germ;
using germ::testing::brute_eval;
using germ::testing::brute_mul;
using germ::testing::random_jet;

namespace {

Jet J(const char* s, int order = kDefaultOrder) { return parse_expr(s, order); }
Rational Q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("add / sub / scale") {
  CHECK((J("x^2 + y") + J("-x^2 - y")).is_zero());
  CHECK(J("x^3 + x*y") + Jet(kDefaultOrder) == J("x^3 + x*y"));

  // Coefficient-wise sum, computed by hand on the dense arrays.
  Jet sum = J("3*x^4 + x^2*y") + J("-4*x^3 - 2*x*y");
  CHECK(sum.coeff(4, 0) == 3);
  CHECK(sum.coeff(3, 0) == -4);
  CHECK(sum.coeff(2, 1) == 1);
  CHECK(sum.coeff(1, 1) == -2);
  CHECK(sum.terms().size() == 4);
  CHECK(to_string(sum) == "3*x^4 - 4*x^3 + x^2*y - 2*x*y");

  CHECK(scale(J("x + 2*y"), Q(1, 2)) == J("1/2*x + y"));
  CHECK(scale(J("x + 2*y"), Q(0)).is_zero());
  CHECK(J("x") - J("x") == Jet(kDefaultOrder));
}

TEST_CASE("sparse canonical form never stores zeros") {
  Jet::Terms t;
  t[Monomial{1, 0}] = Q(0);
  t[Monomial{0, 1}] = Q(2);
  Jet j(4, t);
  CHECK(j.terms().size() == 1);
  CHECK(j.lowest_degree() == 1);
  CHECK(Jet(4).lowest_degree() == 5);
  CHECK(Jet(4).degree() == -1);
}

TEST_CASE("order mismatch and overflow") {
  CHECK_THROWS_AS(J("x", 4) + J("x", 5), GermError);
  try {
    (void)mul(J("x", 4), J("x", 5));
    FAIL("expected OrderMismatch");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }
  try {
    (void)Jet::monomial(Q(1), 3, 3, 5);
    FAIL("expected DegreeOverflow");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::DegreeOverflow);
  }
}

TEST_CASE("mul") {
  CHECK(J("-x") * J("-x^2 - y") == J("x^3 + x*y"));
  CHECK(J("x^3 + x*y") * Jet::constant(Q(1)) == J("x^3 + x*y"));
  CHECK(J("x + y") * J("x - y") == J("x^2 - y^2"));

  // Truncation drops degree > N.
  CHECK(J("x^3", 4) * J("x^2 + 1", 4) == J("x^3", 4));
  CHECK_THROWS_AS(mul_exact(J("x^3", 4), J("x^2 + 1", 4)), GermError);
}

TEST_CASE("d_dx / d_dy") {
  CHECK(d_dx(J("1/4*x^4 + 1/2*x^2*y")) == J("x^3 + x*y"));
  CHECK(d_dx(J("7")).is_zero());
  CHECK(d_dy(J("-1/3*x^3 - x*y")) == J("-x"));
  CHECK(d_dx(J("x")).valid_degree() == kDefaultOrder - 1);
  CHECK(d_dy(d_dx(J("x"))).valid_degree() == kDefaultOrder - 2);
}

TEST_CASE("int0_x") {
  CHECK(int0_x(J("x^3 + x*y")) == J("1/4*x^4 + 1/2*x^2*y"));
  CHECK(int0_x(Jet(kDefaultOrder)).is_zero());
  CHECK(d_dx(int0_x(J("-x^2 - y"))) == J("-x^2 - y"));
  CHECK(restrict_x0(int0_x(J("x^2 + y^3 + 1"))).is_zero());

  try {
    (void)int0_x(J("x^7*y"));
    FAIL("expected DegreeOverflow");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::DegreeOverflow);
  }
}

TEST_CASE("compose2") {
  CHECK(compose2(J("x^2"), J("x"), J("x^2 + y")) == J("x^2"));
  CHECK(compose2(J("y"), J("x"), J("1/6*y")) == J("1/6*y"));
  // (x y, x^2, y) under (x, x^2 + y): second slot of h_t gives -(x^2 + y).
  Jet third = compose2(J("y"), J("x"), J("x^2 + y"));
  Jet second = compose2(J("x^2"), J("x"), J("x^2 + y"));
  CHECK(second - third == J("-y"));
  CHECK(-third == J("-x^2 - y"));
  // Substitution truncates at the order.
  CHECK(compose2(J("x^3", 4), J("x + x^2", 4), J("y", 4)) == J("x^3 + 3*x^4", 4));

  try {
    (void)compose2(J("x"), J("x + 1"), J("y"));
    FAIL("expected NotAGerm");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::NotAGerm);
  }
}

TEST_CASE("divide") {
  Quotient<Rational> q = divide(J("x^3 + x*y"), J("-x^2 - y"));
  CHECK(q.value == J("-x"));
  CHECK(q.unique);
  CHECK(q.value * J("-x^2 - y") == J("x^3 + x*y"));
  CHECK(q.value.valid_degree() == kDefaultOrder - 1);

  CHECK(divide(J("x^3 + 2*y"), Jet::constant(Q(1))).value == J("x^3 + 2*y"));

  // Power series division by a unit.
  Jet inv = divide(Jet::constant(Q(1), 4), J("1 - x", 4)).value;
  CHECK(inv == J("1 + x + x^2 + x^3 + x^4", 4));

  try {
    (void)divide(J("x*y"), J("x^2"));
    FAIL("expected NotDivisible");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
  try {
    (void)divide(J("x"), Jet(kDefaultOrder));
    FAIL("expected ZeroDivisor");
  } catch (const GermError& e) {
    CHECK(e.code() == ErrorCode::ZeroDivisor);
  }
  // Dividend with a term below the divisor's order.
  CHECK_THROWS_AS(divide(J("y + x^3"), J("x^2")), GermError);
}

TEST_CASE("eval") {
  CHECK(eval(J("x^2 + y"), 2.0, 1.0) == doctest::Approx(5.0));
  CHECK(std::abs(eval(J("-1/3*x^3 - x*y"), 1.0, 1.0) - (-4.0 / 3.0)) < 1e-12);
  CHECK(eval(Jet(kDefaultOrder), 0.3, -0.7) == 0.0);
}

TEST_CASE("jets are templated on the scalar") {
  using DJet = Jet2<double>;
  DJet a = DJet::x(4) + DJet::constant(2.0, 4);
  DJet b = mul(a, a);
  CHECK(b.coeff(0, 0) == 4.0);
  CHECK(b.coeff(1, 0) == 4.0);
  CHECK(eval(b, 1.0, 0.0) == doctest::Approx(9.0));
  CHECK(d_dx(b).coeff(0, 0) == 4.0);
}

TEST_CASE("property: ring axioms and brute-force product") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> ord(1, 8);
    const int n = ord(rng);
    Jet a = random_jet(rng, n, 0, n, 6, 9);
    Jet b = random_jet(rng, n, 0, n, 6, 9);
    Jet c = random_jet(rng, n, 0, n, 6, 9);
    CHECK(a * b == brute_mul(a, b));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("property: Leibniz and the fundamental theorem") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Jet f = random_jet(rng, 8, 0, 8, 6, 9);
    Jet g = random_jet(rng, 8, 0, 8, 6, 9);
    CHECK(agree(d_dx(f * g), d_dx(f) * g + f * d_dx(g)));
    CHECK(agree(d_dy(f * g), d_dy(f) * g + f * d_dy(g)));

    Jet h = random_jet(rng, 8, 0, 7, 6, 9);
    CHECK(d_dx(int0_x(h)) == h);
    CHECK(int0_x(d_dx(f)) == f - restrict_x0(f));
  }
}

TEST_CASE("property: divide then multiply") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Jet p = random_jet(rng, 8, 0, 4, 5, 9);
    if (p.is_zero()) continue;
    Jet n = random_jet(rng, 8, 0, 4, 5, 9);
    Jet q = n * p;
    Quotient<Rational> r = divide(q, p);
    REQUIRE(r.unique);
    CHECK(agree(r.value * p, q));
    CHECK(r.value.valid_degree() == 8 - p.lowest_degree());
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("property: eval is a ring homomorphism") {
  std::mt19937 rng(14);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    // Degrees kept so that the product is not truncated.
    Jet f = random_jet(rng, 8, 0, 4, 6, 9);
    Jet g = random_jet(rng, 8, 0, 4, 6, 9);
    const double x = u(rng), y = u(rng);
    CHECK(std::abs(eval(f * g, x, y) - eval(f, x, y) * eval(g, x, y)) <= 1e-9);
    CHECK(std::abs(eval(f, x, y) - brute_eval(f, x, y)) <= 1e-9);
  }
}
