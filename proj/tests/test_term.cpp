#include "oracles.hpp"

#include "skm/term.hpp"

#include <doctest.h>

#include <algorithm>

using namespace skm;

namespace {

std::string norm(std::string_view s) { return print(print_canonical(normalize(parse(s)))); }

std::size_t error_offset(std::string_view s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parser precedence") {
  CHECK(parse("1+1*0") == Term::add(Term::one(), Term::mul(Term::one(), Term::zero())));
  CHECK(parse("1-1-1") == Term::sub(Term::sub(Term::one(), Term::one()), Term::one()));
  CHECK(parse("-1*0") == Term::mul(Term::neg(Term::one()), Term::zero()));
  CHECK(parse("--1") == Term::neg(Term::neg(Term::one())));
  CHECK(parse("1^-1^-1") == Term::inv(Term::inv(Term::one())));
  CHECK(parse("-1^-1") == Term::neg(Term::inv(Term::one())));
  CHECK(parse("inv(1 + 1)") == Term::inv(Term::add(Term::one(), Term::one())));
  CHECK(parse("unit(z(i))") == Term::local_unit(Term::z_of(Term::constant_i())));
  CHECK(parse("c(j)*k") == Term::mul(Term::conj(Term::constant_j()), Term::constant_k()));
  CHECK(parse("12").kind() == Term::Kind::Numeral);
  CHECK(parse("12").numeral_value() == 12);
  CHECK(parse(" ( 0 ) ") == Term::zero());
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("1+") == 2);
  CHECK(error_offset("inv 1") == 4);
  CHECK(error_offset("(1") == 2);
  CHECK(error_offset("1 1") == 2);
  CHECK(error_offset("x") == 0);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("1^2") == 2);
  CHECK(error_offset(std::string(5000, '(')) != std::string::npos);
  try {
    parse("1*");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::find(e.expected().begin(), e.expected().end(), "'inv'") != e.expected().end());
  }
}

TEST_CASE("printer round trips") {
  for (const char* s : {"1+1*0", "-(1+1)", "inv(1)*inv(1+1)", "1-(1-1)", "-1*0", "c(i)*j+k", "unit(1)-z(0)",
                        "(1+1)*(1+1)", "1^-1", "7*inv(3)", "--1", "-(-1)"}) {
    const Term t = parse(s);
    CHECK_MESSAGE(desugar(parse(print(t))) == desugar(t), s);
  }
  CHECK(print(parse("1+(1+1)")) == "1+(1+1)");
  CHECK(print(parse("(1+1)+1")) == "1+1+1");
  CHECK(print(parse("-(1*inv(1))")) == "-(1*inv(1))");
}

TEST_CASE("desugar") {
  CHECK(desugar(parse("1-0")) == Term::add(Term::one(), Term::neg(Term::zero())));
  CHECK(desugar(parse("unit(1)")) == Term::mul(Term::one(), Term::inv(Term::one())));
  CHECK(desugar(Term::numeral(1)) == Term::one());
  CHECK(desugar(Term::numeral(0)) == Term::zero());
  CHECK(desugar(parse("5")).kind() == Term::Kind::Numeral);
  CHECK(is_pure(parse("inv(1)-z(0)")));
  CHECK_FALSE(is_pure(parse("c(1)")));
}

TEST_CASE("evaluation") {
  CHECK(eval(parse("inv(1+1+1)"), RationalField()) == Value(Rational(1, 3)));
  CHECK(eval(parse("i*j"), QuaternionField()) == Value(QuaternionRational::k()));
  CHECK(eval(parse("inv(1+1)"), PrimeField(7)) == Value(PrimeFieldElement{4, 7}));
  CHECK(eval(parse("c(1+i)*(1+i)"), ComplexField()) == Value(ComplexRational{Rational(2), Rational(0)}));
  CHECK(eval(parse("1000000"), PrimeField(7)) == Value(PrimeFieldElement{1000000 % 7, 7}));
  CHECK_THROWS_AS(eval(parse("j"), ComplexField()), UnsupportedSymbol);
  CHECK_THROWS_AS(eval(parse("c(1)"), RationalField()), UnsupportedSymbol);
}

TEST_CASE("normalizer goldens") {
  CHECK(norm("inv(0)") == "0");
  CHECK(norm("(1+1)*inv(1+1+1)") == "2*inv(3)");
  CHECK(norm("2*inv(4)+1*inv(4)") == "3*inv(4)");
  CHECK(norm("0 - 1") == "-(1*inv(1))");
  CHECK(norm("1") == "1*inv(1)");
  CHECK(norm("z(0)") == "1*inv(1)");
  CHECK(norm("-6*inv(4)") == "-(3*inv(2))");
  CHECK_THROWS_AS(normalize(parse("i")), UnsupportedSymbol);
}

TEST_CASE("canonical rational") {
  const auto c = CanonicalRational::from(Rational(-6, 4));
  CHECK(c.sign == -1);
  CHECK(c.k == 3);
  CHECK(c.l == 2);
  CHECK(c.value() == Rational(-3, 2));
  CHECK(CanonicalRational::from(Rational(0)) == CanonicalRational{});
  CHECK(equiv(parse("inv(inv(1+1))"), parse("1+1")));
  CHECK_FALSE(equiv(parse("1"), parse("0")));
}

TEST_CASE("normalizer property on random terms") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 2000; ++n) {
    const Term t = oracle::random_term(rng, 8);
    const auto c = normalize(t);
    const mpq_class expect = oracle::eval_q(t);
    CHECK(c.value().raw() == expect);
    CHECK(gcd(c.k, c.l) == 1);
    CHECK((c.sign == 0) == (expect == 0));
    CHECK(normalize(parse(print(print_canonical(c)))) == c);
  }
}

TEST_CASE("rational identities need not hold in finite fields") {
  const Term lhs = parse("(1+1)*inv(1+1)");
  CHECK(equiv(lhs, Term::one()));
  CHECK(eval(lhs, PrimeField(3)) == eval(Term::one(), PrimeField(3)));
  CHECK(eval(lhs, PrimeField(2)) == eval(Term::zero(), PrimeField(2)));
}

TEST_CASE("skew-meadow rewrites preserve value in every model") {
  std::mt19937_64 rng(5);
  const PrimeField f2(2), f5(5);
  const QuaternionField h;
  for (int n = 0; n < 500; ++n) {
    const Term t = oracle::random_term(rng, 6);
    const Term u = oracle::skmd_rewrite(oracle::skmd_rewrite(t, rng), rng);
    CHECK(equiv(t, u));
    CHECK(eval(t, f2) == eval(u, f2));
    CHECK(eval(t, f5) == eval(u, f5));
    CHECK(eval(t, h) == eval(u, h));
  }
}
