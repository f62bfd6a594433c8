#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "uqgl/coeff.hpp"
#include "uqgl/rings.hpp"

using namespace uqgl;
using Catch::Approx;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int terms, bool with_p) {
  std::uniform_int_distribution<int> exp(-4, 4), pexp(0, 2), coef(-5, 5);
  LaurentPoly r;
  for (int k = 0; k < terms; ++k) {
    const int c = coef(rng);
    if (c == 0) continue;
    r.add_term({exp(rng), with_p ? exp(rng) / 2 : 0, with_p ? pexp(rng) : 0}, Rational(c, 1 + (k % 3)));
  }
  return r;
}

double q_bracket(double q, double x) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q); }

}  // namespace

TEST_CASE("Laurent arithmetic matches numeric evaluation", "[coeff]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng, 5, true), b = random_poly(rng, 4, true);
    const double q = 1.37, p = 2.5, P = std::pow(q, p);
    CHECK((a + b).eval(q, P, p) == Approx(a.eval(q, P, p) + b.eval(q, P, p)).margin(1e-9));
    CHECK((a * b).eval(q, P, p) == Approx(a.eval(q, P, p) * b.eval(q, P, p)).margin(1e-9));
    CHECK((a - a).is_zero());
    CHECK(a * b == b * a);
  }
}

TEST_CASE("try_divide recovers the cofactor of a product", "[coeff]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng, 4, trial % 2 == 0), b = random_poly(rng, 3, trial % 2 == 0);
    if (b.is_zero()) continue;
    const auto quot = try_divide(a * b, b);
    REQUIRE(quot.has_value());
    CHECK(*quot == a);
  }
}

TEST_CASE("try_divide rejects non-divisible pairs", "[coeff]") {
  const LaurentPoly x = LaurentPoly::q_pow(2) + LaurentPoly(1);
  const LaurentPoly y = LaurentPoly::q_pow(1) + LaurentPoly(1);
  CHECK_FALSE(try_divide(x, y).has_value());
  CHECK_THROWS_AS(try_divide(x, LaurentPoly{}), DivisionByZero);
  CHECK(try_divide(LaurentPoly{}, y)->is_zero());
}

TEST_CASE("q-integers", "[coeff]") {
  CHECK(bracket_int(0).is_zero());
  CHECK(bracket_int(1) == CoeffExact(1));
  CHECK(bracket_int(2).str() == "1*q^-1 + 1*q^1");
  CHECK(bracket_int(-3) == -bracket_int(3));
  for (long x = -6; x <= 6; ++x) CHECK(bracket_recurrence_check(x));
  for (long x = -5; x <= 5; ++x)
    for (double q : {0.5, 0.9, 1.3, 2.0}) CHECK(eval_numeric(bracket_int(x), q, 0) == Approx(q_bracket(q, double(x))));
}

TEST_CASE("formal p brackets specialize to integer brackets", "[coeff]") {
  for (long p = 0; p <= 4; ++p)
    for (long k = -3; k <= 3; ++k) {
      const CoeffExact formal = bracket_affine(k, 1, 0);
      const CoeffExact special(formal.num().specialize_p(p), formal.den().specialize_p(p));
      CHECK(special == bracket_int(k + p));
      CHECK(eval_numeric(formal, 1.3, double(p)) == Approx(q_bracket(1.3, double(k + p))).margin(1e-12));
    }
}

TEST_CASE("CoeffExact field operations", "[coeff]") {
  const CoeffExact a = bracket_affine(0, 1, 0), b = bracket_int(3);
  CHECK((a / b) * b == a);
  CHECK(a - a == CoeffExact{});
  CHECK((a + b) - b == a);
  CHECK_THROWS_AS(a / CoeffExact{}, DivisionByZero);
  CHECK_THROWS_AS(CoeffExact(LaurentPoly(1), LaurentPoly{}), DivisionByZero);
}

TEST_CASE("normalization cancels the q-difference", "[coeff]") {
  const CoeffExact br = bracket_affine(2, 0, 0);  // [2] as a plain Laurent polynomial
  const CoeffExact wrapped(br.num() * q_difference(), q_difference());
  CHECK(wrapped == br);
  const CoeffExact n = wrapped.normalized();
  CHECK(n.den().is_one());
  CHECK(n.str() == br.str());
}

TEST_CASE("canonical coefficient strings", "[coeff]") {
  CHECK(CoeffExact{}.str() == "0");
  CHECK(CoeffExact(3).str() == "3*q^0");
  CHECK(q_power(-1, 1).str() == "1*q^-1*P^1");
  CHECK(affine_value(2, -1).str() == "2*q^0 + -1*q^0*p^1");
  const CoeffExact frac = bracket_affine(0, 1, 0);
  CHECK(frac.str() == "(-1*q^0*P^-1 + 1*q^0*P^1)/(-1*q^-1 + 1*q^1)");
}

TEST_CASE("shortest round-trip decimals", "[coeff]") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 500; ++k) {
    const double v = u(rng);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.3) == "1.3");
  CHECK(format_double(-0.0) == "0");
}

TEST_CASE("numeric ring brackets and the classical special case", "[coeff][rings]") {
  NumericRing<double> r(1.3, 2.0);
  CHECK(r.bracket(1, 1) == Approx(q_bracket(1.3, 3.0)));
  CHECK(r.bracket_ratio(2) == Approx(q_bracket(1.3, 2.0) / 2.0));
  CHECK(r.angle(3) * r.angle(3) == Approx(r.bracket_ratio(3)).epsilon(1e-14));
  CHECK_THROWS_AS(r.sqrt_bracket(-3, 0), NegativeRadicand);
  NumericRing<std::complex<double>> rc(1.3, 2.0);
  CHECK(rc.sqrt_bracket(-3, 0).imag() == Approx(std::sqrt(q_bracket(1.3, 3.0))));
  NumericRing<double> one(1.0, 2.0);
  CHECK(one.bracket(3, 0) == 3.0);
  CHECK(one.real_bracket(-2.5) == -2.5);
  CHECK_THROWS_AS(NumericRing<double>(0.0, 1.0), InvalidArgument);
}

TEST_CASE("exact and classical rings", "[coeff][rings]") {
  ExactRing formal;
  CHECK(formal.bracket(0, 1) == bracket_affine(0, 1, 0));
  ExactRing two(2L);
  CHECK(two.bracket(1, 1) == bracket_int(3));
  CHECK(two.q_power(0, 1) == q_power(2, 0));
  CHECK(two.sqrt_count(4) == CoeffExact(2));
  CHECK_THROWS_AS(two.sqrt_count(2), Unsupported);
  CHECK_THROWS_AS(formal.bracket_ratio(0), DivisionByZero);
  ClassicalRing cl;
  CHECK(cl.bracket(2, 1) == affine_value(2, 1));
  CHECK(cl.from_exact(bracket_int(5)) == CoeffExact(5));
  CHECK_THROWS_AS(cl.from_exact(bracket_affine(1, 1, 0)), DivisionByZero);  // 0/0 at q = 1
}
