#include "oracles.hpp"

#include "skm/finite.hpp"
#include "skm/laws.hpp"

#include <doctest.h>

#include <sstream>

using namespace skm;

namespace {

FiniteInversionStructure meadow(std::uint32_t m) { return expand_strongly_regular(zmod(m)); }

}  // namespace

TEST_CASE("generators") {
  const auto z6 = zmod(6);
  CHECK(z6.order() == 6);
  CHECK(z6.mul(5, 5) == 1);
  CHECK(z6.neg(2) == 4);

  const auto p = zmod_product({2, 3});
  CHECK(p.order() == 6);
  CHECK(p.mul(1, 5) == 5);
  CHECK(p.mul(5, 1) == 5);

  const auto m2 = matrix_ring_mod(2);
  CHECK(m2.order() == 16);
  CHECK(check_regularity(m2).regular);
  CHECK_FALSE(check_regularity(m2).commutative);
  CHECK(zmod(1).order() == 1);
}

TEST_CASE("ring validation rejects corrupted tables with witness") {
  auto t = zmod(6).tables();
  t.mul[2 * 6 + 3] = 1;  // 2·3 := 1
  const auto v = find_ring_violation(t, Exec::Serial);
  REQUIRE(v);
  CHECK(v->law == "MulAssoc");
  CHECK(v == find_ring_violation(t, Exec::Parallel));
  CHECK_THROWS_AS(FiniteRing{t}, TableError);

  auto bad = zmod(3).tables();
  bad.add[0] = 7;
  CHECK_THROWS_AS(FiniteRing{bad}, TableError);
}

TEST_CASE("regularity predicates") {
  const auto f4 = check_regularity(zmod(4));
  CHECK_FALSE(f4.regular);
  CHECK(f4.regular_witness == Index{2});
  CHECK(f4.strongly_regular_witness == Index{2});
  CHECK(f4.reduced_witness == Index{2});

  const auto f6 = check_regularity(zmod(6));
  CHECK(f6.regular);
  CHECK(f6.strongly_regular);
  CHECK(f6.distinctly_regular);
  CHECK(f6.unit_regular);
  CHECK(f6.reduced);
  CHECK(f6.idempotents_central);
  CHECK(f6.commutative);

  const auto fm = check_regularity(matrix_ring_mod(2));
  CHECK(fm.unit_regular);
  CHECK_FALSE(fm.strongly_regular);
  CHECK_FALSE(fm.idempotents_central);
  CHECK_FALSE(fm.idempotents_commute);
  CHECK_FALSE(fm.distinctly_regular);
  CHECK_FALSE(fm.reduced);

  CHECK(pseudoinverses(zmod(6), 2) == std::vector<Index>{2, 5});
  CHECK(pseudoinverses(zmod(6), 0).size() == 6);
}

TEST_CASE("strong expansion matches CRT oracle") {
  CHECK(meadow(7).inv_table() == std::vector<Index>{0, 1, 4, 5, 2, 3, 6});
  CHECK(meadow(6).inv_table() == std::vector<Index>{0, 1, 2, 3, 4, 5});
  CHECK(meadow(1).inv_table() == std::vector<Index>{0});
  for (std::uint32_t m : {2U, 10U, 15U, 30U, 42U}) {
    const auto fs = meadow(m);
    const auto expect = oracle::crt_inverse_table(m);
    CHECK(std::vector<std::uint32_t>(fs.inv_table().begin(), fs.inv_table().end()) == expect);
    CHECK(fs.satisfies_skmd());
    CHECK(fs.satisfies_ir());
  }
  try {
    meadow(12);
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.kind() == PreconditionFailed::Kind::NotStronglyRegular);
    CHECK(e.witness() == 2);
  }
  CHECK_THROWS_AS(expand_strongly_regular(matrix_ring_mod(2)), PreconditionFailed);
}

TEST_CASE("distinct expansion") {
  const auto fs = expand_distinctly_regular(zmod(10));
  CHECK(fs.inv_table() == meadow(10).inv_table());
  try {
    expand_distinctly_regular(matrix_ring_mod(2));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.kind() == PreconditionFailed::Kind::NotDistinctlyRegular);
  }
  CHECK_THROWS_AS(expand_distinctly_regular(zmod(4)), PreconditionFailed);
}

TEST_CASE("uniqueness and its negative control") {
  const auto fs = meadow(7);
  const auto good = verify_unique_inverse(fs);
  CHECK(good.pass);
  CHECK(good.pairs_checked == 49);

  auto inv = fs.inv_table();
  std::swap(inv[2], inv[3]);
  const FiniteInversionStructure bad(fs.ring(), inv);
  CHECK_FALSE(bad.satisfies_skmd());
  const auto r = verify_unique_inverse(bad, Exec::Serial);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::pair<Index, Index>{2, 4});
  CHECK(r.pairs_checked == 2 * 7 + 4 + 1);
  const auto rp = verify_unique_inverse(bad, Exec::Parallel);
  CHECK(rp.witness == r.witness);
  CHECK(rp.pairs_checked == r.pairs_checked);
}

TEST_CASE("decomposition of Z/6") {
  const auto d = decompose(meadow(6));
  CHECK(d.factor_orders() == std::vector<std::size_t>{2, 3});
  CHECK(d.atoms == std::vector<Index>{3, 4});
  CHECK(d.embedding[5] == std::vector<Index>{1, 2});
  CHECK(d.injective);
  CHECK(d.preserves_operations);
  CHECK(d.factor_is_field == std::vector<bool>{true, true});
  CHECK(d.factor_elements[1] == std::vector<Index>{0, 4, 2});
}

TEST_CASE("decomposition orders follow the factorization") {
  CHECK(decompose(meadow(7)).factor_orders() == std::vector<std::size_t>{7});
  CHECK(decompose(expand_strongly_regular(zmod_product({2, 2}))).factor_orders() ==
        std::vector<std::size_t>{2, 2});
  auto orders = decompose(meadow(30)).factor_orders();
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{2, 3, 5});
  CHECK_THROWS_AS(decompose(meadow(1)), PreconditionFailed);

  auto inv = meadow(7).inv_table();
  std::swap(inv[2], inv[3]);
  CHECK_THROWS_AS(decompose(FiniteInversionStructure(zmod(7), inv)), PreconditionFailed);
}

TEST_CASE("inversion-compatibility search on M2(Z/2)") {
  const auto r = matrix_ring_mod(2);
  const auto inv = search_inversion_expansion(r, 1'000'000);
  REQUIRE(inv);
  const FiniteInversionStructure s(r, *inv);
  CHECK(s.satisfies_ir());
  CHECK_FALSE(s.satisfies_skmd());

  const auto rep = check_semigroup_props(s);
  CHECK(rep.regular);
  CHECK_FALSE(rep.idempotents_commute);
  CHECK_FALSE(rep.distinctly_regular);
  CHECK(rep.all_implications_hold());

  CHECK_FALSE(search_inversion_expansion(zmod(4), 1'000'000));
  CHECK_FALSE(search_inversion_expansion(r, 1));
}

TEST_CASE("semigroup properties of meadows") {
  for (std::uint32_t m : {6U, 7U, 30U}) {
    const auto rep = check_semigroup_props(meadow(m));
    CHECK(rep.distinctly_regular);
    CHECK(rep.pseudo_commutative);
    CHECK(rep.idempotents_self_inverse);
    CHECK(rep.products_of_idempotents_idempotent);
    CHECK(rep.all_implications_hold());
  }
}

TEST_CASE("finite skew meadows are commutative") {
  for (std::uint32_t m = 1; m <= 40; ++m) {
    if (!oracle::square_free(m)) continue;
    CHECK(check_regularity(meadow(m).ring()).commutative);
  }
  CHECK(check_regularity(expand_strongly_regular(zmod_product({2, 3, 5})).ring()).commutative);
}

TEST_CASE("table text format") {
  const auto fs = meadow(3);
  std::stringstream ss;
  write_table(ss, fs);
  CHECK(ss.str() == "ring 3\nneg 0 2 1\nadd 0 1 2\nadd 1 2 0\nadd 2 0 1\nmul 0 0 0\nmul 0 1 2\nmul 0 2 1\ninv 0 1 2\n");
  const auto lt = read_table(ss);
  CHECK(lt.tables.mul == fs.ring().tables().mul);
  CHECK(lt.inv == fs.inv_table());

  auto fails = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_table(in), TableError);
  };
  fails("");
  fails("ring 0\n");
  fails("ring 2\nneg 0 1\nadd 0 1\n");
  fails("ring 1\nneg 0\nadd 0\nmul x\n");
  fails("ring 1\nneg 0\nadd 0\nmul 0\ninv 0\nextra\n");
  fails("ring 1\nneg 0\nadd 0\nmul 0 0\n");
  fails("ring 2\nneg 0 1\nadd 0 1\nadd 1 0\nmul 0 0\nmul 0 5\n");
}

TEST_CASE("table structure adapter") {
  const TableStructure ts(meadow(5));
  CHECK(ts.carrier()->size() == 5);
  CHECK(ts.render(ts.inv(TableIndex{2})) == "3");
  const TableStructure bare("bare", zmod(5).tables());
  CHECK_FALSE(bare.supports(Symbol::Inv));
  CHECK_THROWS_AS(bare.inv(TableIndex{1}), UnsupportedSymbol);
}

TEST_CASE("serial and parallel kernels agree") {
  for (std::uint32_t m : {12U, 30U, 49U}) {
    const auto r = zmod(m);
    const auto a = check_regularity(r, Exec::Serial);
    const auto b = check_regularity(r, Exec::Parallel);
    CHECK(a.regular_witness == b.regular_witness);
    CHECK(a.strongly_regular_witness == b.strongly_regular_witness);
    CHECK(a.distinctly_regular_witness == b.distinctly_regular_witness);
    CHECK(a.reduced_witness == b.reduced_witness);
    CHECK(a.unit_regular == b.unit_regular);
  }
}
