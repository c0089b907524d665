#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bubble/laurent.hpp"
#include "bubble/number_field.hpp"
#include "bubble/params.hpp"

using namespace bubble;

namespace {

Laurent random_laurent(std::mt19937& rng, int vars) {
  std::uniform_int_distribution<int> terms(0, 3), coeff(-5, 5), exp(-2, 2);
  Laurent p(vars);
  const int k = terms(rng);
  for (int t = 0; t <= k; ++t) {
    std::vector<long> e(vars);
    for (int j = 0; j < vars; ++j) e[j] = exp(rng);
    p += Laurent::monomial(vars, e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent ring operations") {
  const Laurent d0 = Laurent::variable(2, 0);
  const Laurent d1 = Laurent::variable(2, 1);

  CHECK(d0 * d0 == Laurent::variable(2, 0, 2));
  CHECK((d0 + d1) + (-d1) == d0);
  CHECK(Laurent::variable(2, 0, 1) * Laurent::variable(2, 0, -1) ==
        Laurent::one(2));

  CHECK_THROWS_AS(d0 + Laurent::variable(3, 0), std::invalid_argument);
}

TEST_CASE("laurent canonical printing") {
  const Laurent d0 = Laurent::variable(2, 0);
  const Laurent d1 = Laurent::variable(2, 1);
  CHECK(Laurent(2).str() == "0");
  CHECK(Laurent::one(2).str() == "1");
  CHECK((d0 * d0).str() == "d0^2");
  CHECK((d0 + d1).str() == "d0 + d1");
  CHECK((d0 * d1 - Laurent::constant(2, 3)).str() == "d0*d1 - 3");
  CHECK(Laurent::variable(2, 1, -2).str() == "d1^-2");
  CHECK((Laurent::constant(2, -2) * d0).str() == "-2*d0");
}

TEST_CASE("laurent ring axioms hold on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Laurent a = random_laurent(rng, 2);
    const Laurent b = random_laurent(rng, 2);
    const Laurent c = random_laurent(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("laurent exact division") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Laurent a = random_laurent(rng, 2);
    Laurent b = random_laurent(rng, 2);
    if (b.is_zero()) b = Laurent::one(2);
    const Laurent prod = a * b;
    CHECK(prod.exact_div(b) == a);
  }
  const Laurent d0 = Laurent::variable(1, 0);
  CHECK_THROWS_AS((d0 + Laurent::one(1)).exact_div(d0 - Laurent::one(1)),
                  std::domain_error);
}

TEST_CASE("minimal polynomials of 2cos(pi/l)") {
  CHECK(ipoly_str(minpoly_for_order(2), "x") == "x");
  CHECK(ipoly_str(minpoly_for_order(3), "x") == "x - 1");
  CHECK(ipoly_str(minpoly_for_order(4), "x") == "x^2 - 2");
  CHECK(ipoly_str(minpoly_for_order(6), "x") == "x^2 - 3");

  for (long l = 2; l <= 12; ++l) {
    const double root = 2.0 * std::cos(M_PI / static_cast<double>(l));
    CHECK(std::abs(ipoly_eval(minpoly_for_order(l), root)) < 1e-9);
    // degree phi(2l)/2
    long phi = 0;
    for (long k = 1; k <= 2 * l; ++k)
      if (std::gcd(k, 2 * l) == 1) ++phi;
    CHECK(static_cast<long>(minpoly_for_order(l).size()) - 1 == phi / 2);
  }

  CHECK_THROWS_AS(minpoly_for_order(1), std::invalid_argument);
  CHECK_THROWS_AS(minpoly_for_order(0), std::invalid_argument);
}

TEST_CASE("evaluation at specialized parameters") {
  const auto point = ParameterSpec::parse({"0", "root:4"});
  const Evaluator eval(point);
  const Laurent d0 = Laurent::variable(2, 0);
  const Laurent d1 = Laurent::variable(2, 1);

  CHECK(eval(d0 * d1).is_zero());
  CHECK(eval(d1 * d1) == Algebraic::from_rational(eval.field(), Rat(2)));
  CHECK(eval(d0 + Laurent::constant(2, 3)) ==
        Algebraic::from_rational(eval.field(), Rat(3)));

  // negative exponent at a zero value
  CHECK_THROWS_AS(eval(Laurent::variable(2, 0, -1)), std::domain_error);

  // generic entries are rejected
  CHECK_THROWS_AS(Evaluator(ParameterSpec::generic(2)), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(13);
  const auto point = ParameterSpec::parse({"2/3", "root:4"});
  const Evaluator eval(point);
  for (int i = 0; i < 300; ++i) {
    // nonnegative exponents keep zero-value colours out of trouble
    Laurent a(2), b(2);
    std::uniform_int_distribution<int> coeff(-5, 5), exp(0, 3), terms(0, 3);
    for (int t = 0; t <= terms(rng); ++t)
      a += Laurent::monomial(2, {exp(rng), exp(rng)}, coeff(rng));
    for (int t = 0; t <= terms(rng); ++t)
      b += Laurent::monomial(2, {exp(rng), exp(rng)}, coeff(rng));
    CHECK(eval(a * b) == eval(a) * eval(b));
    CHECK(eval(a + b) == eval(a) + eval(b));
  }
}

TEST_CASE("field inverses") {
  const FieldPtr f = NumberField::cosine(4);  // Q(sqrt 2)
  const Algebraic sqrt2 = Algebraic::generator(f);

  const Algebraic inv = sqrt2.inverse();
  CHECK(inv == Algebraic(f, {Rat(0), Rat(1, 2)}));
  CHECK(inv * sqrt2 == Algebraic::from_rational(f, Rat(1)));

  const Algebraic three = Algebraic::from_rational(f, Rat(3));
  CHECK(three.inverse() == Algebraic::from_rational(f, Rat(1, 3)));

  const Algebraic one_plus = Algebraic::from_rational(f, Rat(1)) + sqrt2;
  CHECK(one_plus.inverse() == sqrt2 - Algebraic::from_rational(f, Rat(1)));

  CHECK_THROWS_AS(Algebraic::from_rational(f, Rat(0)).inverse(),
                  std::domain_error);
}

TEST_CASE("random field inverses multiply back to one") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (long l : {4L, 5L, 12L}) {
    const FieldPtr f = NumberField::cosine(l);
    int tested = 0;
    while (tested < 100) {
      std::vector<Rat> c(f->degree());
      bool zero = true;
      for (auto& q : c) {
        q = Rat(coeff(rng), 1 + std::abs(coeff(rng)));
        q.canonicalize();
        if (q != 0) zero = false;
      }
      if (zero) continue;
      const Algebraic a(f, c);
      CHECK(a * a.inverse() == Algebraic::from_rational(f, Rat(1)));
      ++tested;
    }
  }
}

TEST_CASE("algebraic powers and printing") {
  const FieldPtr f = NumberField::cosine(4);
  const Algebraic sqrt2 = Algebraic::generator(f);
  CHECK(sqrt2.pow(2) == Algebraic::from_rational(f, Rat(2)));
  CHECK(sqrt2.pow(-2) == Algebraic::from_rational(f, Rat(1, 2)));
  CHECK(sqrt2.str() == "a");
  CHECK((sqrt2 + Algebraic::from_rational(f, Rat(1, 2))).str() == "a + 1/2");
  CHECK(f->minpoly_str() == "a^2 - 2");
}

TEST_CASE("parameter grammar") {
  const auto p = ParameterSpec::parse({"0", "root:4", "generic", "-3/2"});
  CHECK(p.m() == 4);
  CHECK(p.is_zero(0));
  CHECK(p.order(0) == 2);    // Niven: rational 0 is the order-2 value
  CHECK(p.order(1) == 4);
  CHECK(!p.order(3).has_value());  // |delta| > 2-ish rationals are generic
  CHECK(p.is_generic(2));
  CHECK(p.token(1) == "root:4");

  CHECK(ParameterSpec::parse({"1"}).order(0) == 3);
  CHECK(ParameterSpec::parse({"-1"}).order(0) == 3);
  CHECK_THROWS_AS(ParameterSpec::parse({"root:1"}), std::invalid_argument);
  CHECK_THROWS_AS(ParameterSpec::parse({"2"}).order(0), std::invalid_argument);
  CHECK_THROWS_AS(ParameterSpec::parse({"x7"}), std::invalid_argument);
}

TEST_CASE("composite evaluation field uses the lcm of the orders") {
  const auto point = ParameterSpec::parse({"root:3", "root:4"});
  const Evaluator eval(point);
  CHECK(eval.field()->degree() == 4);  // phi(24)/2
  // delta_0 = 2cos(pi/3) = 1 lands exactly on a rational in the big field
  CHECK(eval.value(0) == Algebraic::from_rational(eval.field(), Rat(1)));
  // delta_1^2 = 2
  CHECK(eval.value(1) * eval.value(1) ==
        Algebraic::from_rational(eval.field(), Rat(2)));
}
