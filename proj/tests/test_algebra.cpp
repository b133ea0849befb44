#include "oracles.hpp"

#include "skm/laws.hpp"
#include "skm/structure.hpp"

#include <doctest.h>

#include <set>

using namespace skm;

TEST_CASE("rational canonical form and total inverse") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0).inverse() == Rational(0));
  CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic against raw GMP") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (b == 0) b = 1;
    if (e == 0) e = 1;
    mpq_class x(a, b), y(c, e);
    x.canonicalize();
    y.canonicalize();
    const Rational rx(a, b), ry(c, e);
    CHECK((rx + ry).raw() == mpq_class(x + y));
    CHECK((rx * ry).raw() == mpq_class(x * y));
    CHECK((rx - ry).raw() == mpq_class(x - y));
    CHECK(rx.inverse().raw() == oracle::qinv(x));
  }
}

TEST_CASE("prime field inverse") {
  CHECK(inv_prime_field({2, 5}).residue == 3);
  CHECK(inv_prime_field({6, 7}).residue == 6);
  CHECK(inv_prime_field({0, 7}).residue == 0);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 101, 65521})
    for (std::uint64_t x = 0; x < std::min<std::uint64_t>(p, 200); ++x)
      CHECK(inv_prime_field({x, p}).residue == oracle::fermat_inverse(x, p));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4294967311ULL), std::invalid_argument);
}

TEST_CASE("complex rationals") {
  const ComplexRational z{Rational(1), Rational(1)};
  CHECK(inv_complex(z) == ComplexRational{Rational(1, 2), Rational(-1, 2)});
  CHECK(conjugate(inv_complex(z)) == inv_complex(conjugate(z)));
  CHECK(inv_complex(ComplexRational{}) == ComplexRational{});
  CHECK(ComplexRational::i() * ComplexRational::i() == ComplexRational{Rational(-1), Rational(0)});
  CHECK(z.to_string() == "1+i");
  CHECK(ComplexRational{Rational(0), Rational(-2, 3)}.to_string() == "-2/3i");
  CHECK(ComplexRational{}.to_string() == "0");
}

TEST_CASE("quaternion product agrees with unit table") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int n = 0; n < 300; ++n) {
    QuaternionRational a{Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng), 3)};
    QuaternionRational b{Rational(d(rng), 2), Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
    const oracle::Quat oa{{a.w.raw(), a.x.raw(), a.y.raw(), a.z.raw()}};
    const oracle::Quat ob{{b.w.raw(), b.x.raw(), b.y.raw(), b.z.raw()}};
    const auto r = oracle::quat_mul(oa, ob);
    const auto p = a * b;
    CHECK(p.w.raw() == r.c[0]);
    CHECK(p.x.raw() == r.c[1]);
    CHECK(p.y.raw() == r.c[2]);
    CHECK(p.z.raw() == r.c[3]);
    if (!a.is_zero()) CHECK(a * inv_quaternion(a) == QuaternionRational{Rational(1), 0, 0, 0});
  }
  CHECK(inv_quaternion(QuaternionRational{}) == QuaternionRational{});
}

TEST_CASE("quaternion rendering") {
  CHECK(QuaternionRational::k().to_string() == "k");
  CHECK((-QuaternionRational::k()).to_string() == "-k");
  CHECK(QuaternionRational{Rational(1), Rational(-1), Rational(0), Rational(1, 2)}.to_string() == "1-i+1/2k");
  CHECK(QuaternionRational{}.to_string() == "0");
}

TEST_CASE("derived operators") {
  const RationalField q;
  CHECK(local_unit(q, Rational(5)) == Value(Rational(1)));
  CHECK(local_unit(q, Rational(0)) == Value(Rational(0)));
  CHECK(z_of(q, Rational(0)) == Value(Rational(1)));
  CHECK(z_of(q, Rational(-3)) == Value(Rational(0)));
  CHECK(div(q, Rational(3), Rational(4)) == Value(Rational(3, 4)));
  CHECK(div(q, Rational(3), Rational(0)) == Value(Rational(0)));
  CHECK(numeral(q, 1000) == Value(Rational(1000)));
  CHECK(numeral(PrimeField(7), 1000) == Value(PrimeFieldElement{1000 % 7, 7}));

  const auto [y, y2] = unit_regular_witness(q, Rational(0));
  CHECK(y == Value(Rational(1)));
  CHECK(y2 == Value(Rational(1)));
}

TEST_CASE("symbol support") {
  CHECK_THROWS_AS(RationalField().constant(Symbol::I), UnsupportedSymbol);
  CHECK_THROWS_AS(ComplexField().constant(Symbol::J), UnsupportedSymbol);
  CHECK(ComplexField().supports(Symbol::Conj));
  CHECK(QuaternionField().constant(Symbol::K) == Value(QuaternionRational::k()));
  const ProductStructure mixed({std::make_shared<ComplexField>(), std::make_shared<QuaternionField>()});
  CHECK(mixed.supports(Symbol::I));
  CHECK_FALSE(mixed.supports(Symbol::J));
  try {
    RationalField().conj(Rational(1));
    FAIL("expected UnsupportedSymbol");
  } catch (const UnsupportedSymbol& e) {
    CHECK(e.structure() == "q0");
    CHECK(e.symbol() == "c");
  }
}

TEST_CASE("product structure") {
  const ProductStructure p({std::make_shared<PrimeField>(2), std::make_shared<PrimeField>(3)});
  CHECK(p.name() == "prod:fp:2,fp:3");
  const auto c = p.carrier();
  REQUIRE(c);
  CHECK(c->size() == 6);
  CHECK(p.render((*c)[1]) == "(0, 1)");
  CHECK(p.render((*c)[5]) == "(1, 2)");
  const Value x = p.make({PrimeFieldElement{1, 2}, PrimeFieldElement{2, 3}});
  CHECK(p.inv(x) == x);
  CHECK(p.mul(x, x) == p.make({PrimeFieldElement{1, 2}, PrimeFieldElement{1, 3}}));
  CHECK_THROWS_AS(ProductStructure({}), std::invalid_argument);
}

TEST_CASE("sampler determinism and coverage") {
  const RationalField q;
  CHECK(sample_stream(q, 42, 10, 200) == sample_stream(q, 42, 10, 200));
  CHECK(sample_stream(q, 42, 10, 200) != sample_stream(q, 43, 10, 200));
  for (const auto& v : sample_stream(q, 42, 10, 500)) {
    const auto& r = v.as<Rational>();
    CHECK(abs(r.num()) <= 10);
    CHECK(r.den() <= 10);
  }

  const auto f5 = sample_stream(PrimeField(5), 0, 100, 5);
  std::set<std::uint64_t> seen;
  for (const auto& v : f5) seen.insert(v.as<PrimeFieldElement>().residue);
  CHECK(seen == std::set<std::uint64_t>{0, 1, 2, 3, 4});

  std::set<SingularityClass> classes;
  for (const auto& v : sample_stream(MatrixRing(), 0, 2, 11)) classes.insert(classify(v.as<Matrix2>()));
  CHECK(classes.size() == 11);

  const auto h = sample_stream(QuaternionField(), 3, 5, 100);
  CHECK(h == sample_stream(QuaternionField(), 3, 5, 100));
}

TEST_CASE("grids") {
  CHECK(grid_entries(2).size() == 7);
  CHECK(RationalField().grid(2).size() == 7);
  CHECK(MatrixRing().grid(2).size() == 2401);
  CHECK(ComplexField().grid(1).size() == 25);
  CHECK(PrimeField(5).grid(9).size() == 5);
}
