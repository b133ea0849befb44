#include "skm/laws.hpp"
#include "skm/matrix.hpp"
#include "skm/structure.hpp"

#include <doctest.h>

#include <set>

using namespace skm;

namespace {

Matrix2 m(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }
Rational h(long n, long d) { return Rational(n, d); }

// Adjugate over determinant, computed without the library's inverse.
Matrix2 adjugate_inverse(const Matrix2& x) {
  const Rational d = x.x11 * x.x22 - x.x12 * x.x21;
  const Rational s = d.inverse();
  return {x.x22 * s, -x.x12 * s, -x.x21 * s, x.x11 * s};
}

}  // namespace

TEST_CASE("regular inverse") {
  const auto x = m(1, 2, 3, 4);
  CHECK(det(x) == Rational(-2));
  CHECK(inv_matrix(x) == m(-2, 1, h(3, 2), h(-1, 2)));
  for (const auto& v : MatrixRing().grid(2)) {
    const auto& a = v.as<Matrix2>();
    if (classify(a) != SingularityClass::Regular) continue;
    CHECK(inv_matrix(a) == adjugate_inverse(a));
    CHECK(a * inv_matrix(a) == Matrix2::identity());
  }
}

TEST_CASE("singular cases") {
  CHECK(inv_matrix(Matrix2::zero()) == Matrix2::zero());
  CHECK(inv_matrix(m(3, 0, 0, 0)) == m(h(1, 3), 0, 0, 0));
  CHECK(inv_matrix(m(0, 0, 0, -2)) == m(0, 0, 0, h(-1, 2)));
  CHECK(inv_matrix(m(0, 0, 5, 0)) == m(0, h(1, 5), 0, 0));
  CHECK(inv_matrix(m(0, 5, 0, 0)) == m(0, 0, h(1, 5), 0));
  CHECK(inv_matrix(m(2, 3, 0, 0)) == m(h(1, 4), 0, h(1, 6), 0));
  CHECK(inv_matrix(m(2, 0, 3, 0)) == m(h(1, 4), h(1, 6), 0, 0));
  CHECK(inv_matrix(m(0, 0, 2, 3)) == m(0, h(1, 4), 0, h(1, 6)));
  CHECK(inv_matrix(m(0, 2, 0, 3)) == m(0, 0, h(1, 4), h(1, 6)));
  // [[x, xy], [xz, xyz]] with x = 1, y = 2, z = 3
  CHECK(inv_matrix(m(1, 2, 3, 6)) == m(h(1, 4), h(1, 12), h(1, 8), h(1, 24)));
  CHECK(inv_matrix(m(1, 0, 1, 0)) == m(h(1, 2), h(1, 2), 0, 0));
}

TEST_CASE("classification") {
  CHECK(classify(m(1, 2, 3, 4)) == SingularityClass::Regular);
  CHECK(classify(m(0, 0, 1, 0)) == SingularityClass::ThreeZeroLowerLeft);
  CHECK(classify(m(1, 2, 2, 4)) == SingularityClass::NoZeroSingular);
  CHECK(classify(m(0, 1, 0, 1)) == SingularityClass::TwoZeroLeftColumn);
  CHECK(to_string(SingularityClass::AllZero) == "AllZero");
  std::set<SingularityClass> seen;
  for (const auto& v : MatrixRing().grid(2)) seen.insert(classify(v.as<Matrix2>()));
  CHECK(seen.size() == 11);
}

TEST_CASE("text round trip") {
  const auto x = m(h(-1, 2), 0, 7, h(3, 4));
  CHECK(x.to_string() == "[[-1/2,0],[7,3/4]]");
  CHECK(Matrix2::parse(x.to_string()) == x);
  CHECK(Matrix2::parse(" [[1, 2], [3, 4]] ") == m(1, 2, 3, 4));
  CHECK_THROWS_AS(Matrix2::parse("[[1,2],[3]]"), std::invalid_argument);
}

TEST_CASE("inversion ring laws on the grid and across samples") {
  const MatrixRing r;
  for (const auto& v : r.grid(2)) {
    const auto& x = v.as<Matrix2>();
    const auto xi = inv_matrix(x);
    CHECK(inv_matrix(xi) == x);
    CHECK(x * (xi * x) == x);
    CHECK(inv_matrix(-x) == -xi);
  }
  for (const auto& v : sample_stream(r, 5, 20, 2000)) {
    const auto& x = v.as<Matrix2>();
    CHECK(inv_matrix(inv_matrix(x)) == x);
    CHECK(x * (inv_matrix(x) * x) == x);
  }
}

TEST_CASE("counterexample P") {
  const auto p = m(1, 0, 1, 0);
  const auto pi = inv_matrix(p);
  CHECK(p * p == p);
  CHECK(pi == m(h(1, 2), h(1, 2), 0, 0));
  CHECK(pi * pi != pi);
  CHECK(inv_matrix(p * p) != pi * pi);

  const auto e21 = m(0, 0, 1, 0);
  CHECK(e21 * (e21 * inv_matrix(e21)) != e21);
  // e12·e21 ≠ e21·e12
  CHECK(m(0, 0, 1, 0) * m(0, 1, 0, 0) != m(0, 1, 0, 0) * m(0, 0, 1, 0));
}
