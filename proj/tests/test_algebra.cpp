#include "support.hpp"

#include "dirac/poly.hpp"
#include "dirac/scalar.hpp"
#include "dirac/spoly.hpp"

#include <doctest.h>

using namespace dirac;
using namespace dirac::testing;

namespace {

const MultiPoly p1 = MultiPoly::variable(Var::p1);
const MultiPoly p2 = MultiPoly::variable(Var::p2);
const MultiPoly p3 = MultiPoly::variable(Var::p3);
const MultiPoly m = MultiPoly::variable(Var::m);

Point point(long a, long b, long c, long d) {
  return {ComplexRational(a), ComplexRational(b), ComplexRational(c), ComplexRational(d)};
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-0")) == "0");

  for (const char* bad : {"1.5", "", "-", "1/0", "1/-2", "+1", " 1", "1/", "/2", "1/02", "1e3", "0x10"})
    CHECK_THROWS_AS(parse_rational(bad), RationalSyntaxError);
}

TEST_CASE("complex rational arithmetic") {
  const ComplexRational a(Rational(1, 2), Rational(-1, 3));
  const ComplexRational b(2L, 1L);
  CHECK(a.conj().conj() == a);
  CHECK(a.norm2() == Rational(1, 4) + Rational(1, 9));
  CHECK(ComplexRational().norm2() == 0);
  CHECK((a * b) / b == a);
  CHECK(ComplexRational::i() * ComplexRational::i() == ComplexRational(-1L));
  CHECK(a.to_string() == "1/2-1/3*i");
  CHECK(ComplexRational::i().to_string() == "i");
  CHECK((-ComplexRational::i()).to_string() == "-i");
  CHECK(ComplexRational(Rational(0), Rational(2, 3)).to_string() == "2/3*i");
  CHECK(ComplexRational(-3L).to_string() == "-3");
  CHECK_THROWS(ComplexRational(1L) / ComplexRational());
}

TEST_CASE("poly_arith examples") {
  CHECK(poly_arith(p1, p1, ArithOp::mul) == MultiPoly::term(1L, Monomial::of(Var::p1, 2)));
  CHECK(poly_arith(p1 + m, p1 - m, ArithOp::mul) == p1 * p1 - m * m);
  CHECK(poly_arith(p1 * p1, p1 * p1, ArithOp::sub).terms().empty());
  CHECK(poly_arith(p1, m, ArithOp::add) == p1 + m);
}

TEST_CASE("polynomial rendering follows graded-lex order") {
  CHECK(energy_squared().to_string() == "p1^2 + p2^2 + p3^2 + m^2");
  CHECK(MultiPoly().to_string() == "0");
  CHECK((p1 - ComplexRational::i() * p2).to_string() == "p1 - i*p2");
  CHECK((m * m * Rational(-2) + p1 * p2 + 3L).to_string() == "3 + p1*p2 - 2*m^2");
  CHECK((ComplexRational(Rational(1, 2), Rational(1)) * p3).to_string() == "(1/2+i)*p3");
  CHECK(Monomial::of(Var::p1) < Monomial::of(Var::m));
  CHECK(Monomial::of(Var::m) < Monomial::of(Var::p1, 2));
}

TEST_CASE("evaluate examples") {
  CHECK((p1 * p1 + m * m).evaluate(point(2, 0, 0, 3)) == ComplexRational(13L));
  CHECK(MultiPoly().evaluate(point(1, 2, 3, 4)).is_zero());
  CHECK((p1 * p2 - p2 * p1).evaluate(point(5, 7, 0, 0)).is_zero());
}

TEST_CASE("formal derivative examples") {
  CHECK(formal_derivative(EPoly::e_power(4)) == EPoly(MultiPoly(4L)) * EPoly::e_power(3));
  const MultiPoly c = p1 + m;
  const MultiPoly d = p2 * p3;
  const EPoly q = EPoly::e_power(2) + EPoly(c) * EPoly::e_power(1) + EPoly(d);
  CHECK(formal_derivative(q) == EPoly(MultiPoly(2L)) * EPoly::e_power(1) + EPoly(c));
  CHECK(formal_derivative(EPoly(p1 * m)).is_zero());
}

TEST_CASE("reduce_at_dispersion examples") {
  CHECK(reduce_at_dispersion(EPoly::e_power(2)) == ReducedPair{energy_squared(), MultiPoly()});
  CHECK(reduce_at_dispersion(EPoly(MultiPoly(2L)) * EPoly::e_power(1)) == ReducedPair{MultiPoly(), MultiPoly(2L)});
  CHECK(reduce_at_dispersion(EPoly::e_power(3)) == ReducedPair{MultiPoly(), energy_squared()});
}

TEST_CASE("E^3 reduction against hand long division") {
  // E^3 = E * (E^2 - s) + s*E, so quotient E and remainder (0, s).
  const DispersionDivision div = divide_by_dispersion(EPoly::e_power(3));
  CHECK(div.quotient == EPoly::e_power(1));
  CHECK(div.remainder.even_part.is_zero());
  CHECK(div.remainder.odd_part == p1 * p1 + p2 * p2 + p3 * p3 + m * m);
}

TEST_CASE("reduction agrees with evaluation where E_p is rational") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const EPoly q = random_epoly(rng, 6);
    const ReducedPair r = reduce_at_dispersion(q);
    for (const auto& pt : rational_energy_points()) {
      const ComplexRational e(pt.energy);
      CHECK(evaluate_epoly(q, pt.point, e) == r.even_part.evaluate(pt.point) + e * r.odd_part.evaluate(pt.point));
    }
  }
}

TEST_CASE("property: ring axioms") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * MultiPoly(1L) == a);
  }
}

TEST_CASE("property: division by the dispersion modulus reconstructs the input") {
  Rng rng(2);
  const EPoly modulus = EPoly::e_power(2) - EPoly(energy_squared());
  for (int trial = 0; trial < 200; ++trial) {
    const EPoly q = random_epoly(rng, 6);
    const DispersionDivision div = divide_by_dispersion(q);
    const EPoly rebuilt = EPoly(div.remainder.even_part) + EPoly::e_power(1) * EPoly(div.remainder.odd_part) +
                          modulus * div.quotient;
    CHECK(rebuilt == q);
    CHECK(div.remainder == reduce_at_dispersion(q));
  }
}

TEST_CASE("property: homogeneity is preserved by products") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t d1 = static_cast<std::uint32_t>(trial % 4), d2 = static_cast<std::uint32_t>(trial % 3 + 1);
    const MultiPoly a = random_homogeneous(rng, d1), b = random_homogeneous(rng, d2);
    REQUIRE(a.is_homogeneous());
    REQUIRE(b.is_homogeneous());
    const MultiPoly prod = poly_arith(a, b, ArithOp::mul);
    CHECK(prod.is_homogeneous());
    if (!prod.is_zero()) CHECK(prod.degree() == static_cast<int>(d1 + d2));
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng);
    const Point pt = random_point(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("substitute freezes a variable") {
  const MultiPoly q = p1 * m + m * m + p2;
  CHECK(q.substitute(Var::m, ComplexRational()) == p2);
  CHECK(q.substitute(Var::m, ComplexRational(2L)) == p1 * MultiPoly(2L) + MultiPoly(4L) + p2);
}

TEST_CASE("univariate s-polynomials") {
  const SPoly s = SPoly::monomial(1, 1);
  CHECK((s * s).to_string() == "s^2");
  CHECK((SPoly(-2) * s).to_string() == "-2*s");
  CHECK((SPoly(2) * s - SPoly(1)).to_string() == "2*s - 1");
  CHECK(SPoly().to_string() == "0");
  const auto [q, r] = divmod(s * s - SPoly(1), s - SPoly(1));
  CHECK(q == s + SPoly(1));
  CHECK(r.is_zero());
  CHECK(gcd(s * s - SPoly(1), s * s + SPoly(2) * s + SPoly(1)) == s + SPoly(1));
  CHECK_THROWS_AS(divmod(s, SPoly()), std::domain_error);
  CHECK((s * s).to_multipoly() == energy_squared() * energy_squared());

  const RatFunc f(s * s - SPoly(1), SPoly(2) * s - SPoly(2));
  CHECK(f.is_polynomial());
  CHECK(f.numerator() == SPoly(Rational(1, 2)) * (s + SPoly(1)));
  const RatFunc g(SPoly(1), s);
  CHECK(!g.is_polynomial());
  CHECK((g * RatFunc(s)).is_polynomial());
  CHECK(g.to_string() == "(1)/(s)");
}
