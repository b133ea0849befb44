#include "oracles.hpp"

#include "skm/finite.hpp"
#include "skm/laws.hpp"
#include "skm/matrix.hpp"
#include "skm/term.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace skm;

namespace {

constexpr double kFiniteSuitesSeconds = 10.0;
constexpr double kMatrixSeconds = 5.0;
constexpr double kDecomposeSeconds = 30.0;
constexpr std::uint64_t kRandomSamples = 10000;
constexpr std::int64_t kRandomBound = 100;
constexpr std::uint32_t kModulusLimit = 100;
constexpr int kNormalizerTerms = 10000;
constexpr int kNormalizerDepth = 12;
constexpr int kEquations = 1000;
constexpr int kEquationDepth = 6;
constexpr int kRewritesPerEquation = 4;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

StructurePtr fp(std::uint64_t p) { return std::make_shared<PrimeField>(p); }

StructurePtr product(std::initializer_list<std::uint64_t> ps) {
  std::vector<StructurePtr> fs;
  for (auto p : ps) fs.push_back(fp(p));
  return std::make_shared<ProductStructure>(std::move(fs));
}

std::vector<StructurePtr> finite_models() {
  std::vector<StructurePtr> out;
  for (std::uint64_t p : {2, 3, 5, 7, 11}) out.push_back(fp(p));
  out.push_back(product({2, 3}));
  out.push_back(product({2, 2, 2}));
  out.push_back(product({3, 5, 7}));
  return out;
}

void expect_pass(Verdict& v, const LawReport& rep) {
  for (const auto& o : rep.outcomes)
    if (!o.pass) v.fail(rep.suite + "." + o.name + " on " + rep.structure + " at " + o.rendered_witness);
}

Verdict finite_suites() {
  Verdict v;
  std::uint64_t cases = 0;
  for (const auto& s : finite_models()) {
    for (const auto& suite_ : {suite(SuiteId::SkMd), derived_props_catalog()}) {
      const auto rep = run_suite(suite_, *s, Mode::exhaustive());
      if (suite_.laws.size() != (suite_.id == SuiteId::SkMd ? 2U : 12U)) v.fail("catalog size");
      for (const auto& o : rep.outcomes)
        if (o.sampled) v.fail(o.name + " was sampled on " + rep.structure);
      expect_pass(v, rep);
      cases += rep.total_cases;
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " cases";
  return v;
}

Verdict random_suites() {
  Verdict v;
  const Mode mode = Mode::random(0, kRandomSamples, kRandomBound);
  const std::vector<std::pair<StructurePtr, SuiteId>> models = {
      {std::make_shared<RationalField>(), SuiteId::QSpec},
      {std::make_shared<ComplexField>(), SuiteId::CSpec},
      {std::make_shared<QuaternionField>(), SuiteId::HSpec}};
  std::uint64_t cases = 0;
  for (const auto& [s, spec] : models) {
    for (const auto id : {SuiteId::SkMd, SuiteId::DerivedProps, spec}) {
      const auto laws = suite(id);
      const auto rep = run_suite(laws, *s, mode);
      for (std::size_t i = 0; i < laws.laws.size(); ++i)
        if (laws.laws[i].arity > 0 && rep.outcomes[i].cases != kRandomSamples)
          v.fail(laws.laws[i].name + " ran " + std::to_string(rep.outcomes[i].cases) + " samples");
      expect_pass(v, rep);
      cases += rep.total_cases;
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " cases";
  return v;
}

Verdict matrix_ring() {
  Verdict v;
  const MatrixRing m;
  const auto grid = m.grid(2);
  if (grid.size() != 2401) v.fail("grid has " + std::to_string(grid.size()) + " matrices");

  expect_pass(v, run_suite(suite(SuiteId::IR), m, Mode::grid_of(2)));

  const Matrix2 e21{Rational(0), Rational(0), Rational(1), Rational(0)};
  std::size_t ril_failures = 0;
  bool e21_fails = false;
  for (const auto& x : grid) {
    const auto& a = x.as<Matrix2>();
    if (a * (a * inv_matrix(a)) != a) {
      ++ril_failures;
      e21_fails = e21_fails || a == e21;
    }
  }
  if (ril_failures == 0 || !e21_fails) v.fail("Ril witness set misses e21");
  const auto skmd = run_suite(suite(SuiteId::SkMd), m, Mode::grid_of(2));
  if (skmd.find("Ril")->pass) v.fail("Ril passes on the grid");

  const Matrix2 p{Rational(1), Rational(0), Rational(1), Rational(0)};
  const Matrix2 pi = inv_matrix(p);
  if (p * p != p) v.fail("P is not idempotent");
  if (pi != Matrix2{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}) v.fail("inv(P) = " + pi.to_string());
  if (pi * pi == pi) v.fail("inv(P) is idempotent");
  if (inv_matrix(p * p) == pi * pi) v.fail("(P·P)⁻¹ = P⁻¹·P⁻¹");
  if (run_suite(suite(SuiteId::PCIR), m, Mode::grid_of(2)).find("InvAntiHom")->pass)
    v.fail("pseudo-commutativity holds on the grid");
  if (v.pass) v.detail = std::to_string(ril_failures) + " Ril failures";
  return v;
}

Verdict expansion() {
  Verdict v;
  int ok = 0;
  for (std::uint32_t m = 1; m <= kModulusLimit; ++m) {
    const bool sf = oracle::square_free(m);
    try {
      const auto fs = expand_strongly_regular(zmod(m));
      if (!sf) v.fail("expanded non-square-free " + std::to_string(m));
      const auto expect = oracle::crt_inverse_table(m);
      if (std::vector<std::uint32_t>(fs.inv_table().begin(), fs.inv_table().end()) != expect)
        v.fail("inverse table of Z/" + std::to_string(m) + " differs from CRT");
      expect_pass(v, run_suite(suite(SuiteId::SkMd), TableStructure(fs), Mode::exhaustive()));
      ++ok;
    } catch (const PreconditionFailed& e) {
      if (sf) v.fail("square-free " + std::to_string(m) + " rejected");
      const Index w = e.witness();
      const auto r = zmod(m);
      for (Index y = 0; y < m; ++y)
        if (r.mul(r.mul(w, w), y) == w) v.fail("witness " + std::to_string(w) + " of Z/" + std::to_string(m));
    }
  }
  if (v.pass) v.detail = std::to_string(ok) + " square-free moduli";
  return v;
}

Verdict uniqueness() {
  Verdict v;
  std::uint64_t pairs = 0;
  for (std::uint32_t m = 1; m <= kModulusLimit; ++m) {
    if (!oracle::square_free(m)) continue;
    const auto r = verify_unique_inverse(expand_strongly_regular(zmod(m)));
    if (!r.pass) v.fail("Z/" + std::to_string(m));
    if (r.pairs_checked != std::uint64_t{m} * m) v.fail("Z/" + std::to_string(m) + " not exhaustive");
    pairs += r.pairs_checked;
  }
  auto inv = expand_strongly_regular(zmod(7)).inv_table();
  std::swap(inv[2], inv[3]);
  const auto bad = verify_unique_inverse(FiniteInversionStructure(zmod(7), inv));
  if (bad.pass || !bad.witness) v.fail("corrupted table accepted");
  if (v.pass) {
    std::ostringstream d;
    d << pairs << " pairs; control fails at (" << bad.witness->first << ", " << bad.witness->second << ")";
    v.detail = d.str();
  }
  return v;
}

Verdict decomposition() {
  Verdict v;
  int count = 0;
  for (std::uint32_t m = 2; m <= kModulusLimit; ++m) {
    if (!oracle::square_free(m)) continue;
    const auto d = decompose(expand_strongly_regular(zmod(m)));
    auto orders = d.factor_orders();
    std::sort(orders.begin(), orders.end());
    const auto primes = oracle::prime_factors(m);
    if (!std::equal(orders.begin(), orders.end(), primes.begin(), primes.end()))
      v.fail("factor orders of Z/" + std::to_string(m));
    if (!std::all_of(d.factor_is_field.begin(), d.factor_is_field.end(), [](bool b) { return b; }))
      v.fail("non-field factor of Z/" + std::to_string(m));
    if (!d.injective || !d.preserves_operations) v.fail("embedding of Z/" + std::to_string(m));
    ++count;
  }
  if (v.pass) v.detail = std::to_string(count) + " moduli";
  return v;
}

Verdict normalizer() {
  Verdict v;
  if (print(print_canonical(normalize(parse("inv(0)")))) != "0") v.fail("inv(0)");
  if (print(print_canonical(normalize(parse("(1+1)*inv(1+1+1)")))) != "2*inv(3)") v.fail("(1+1)*inv(1+1+1)");
  std::mt19937_64 rng(0);
  for (int n = 0; n < kNormalizerTerms && v.pass; ++n) {
    const Term t = oracle::random_term(rng, kNormalizerDepth);
    const auto c = normalize(t);
    const mpq_class q = oracle::eval_q(t);
    if (c.value().raw() != q) v.fail("value of " + print(t));
    if (gcd(c.k, c.l) != 1) v.fail("gcd of " + print(t));
    if ((c.sign == 0) != (q == 0)) v.fail("sign of " + print(t));
    if (normalize(parse(print(print_canonical(c)))) != c) v.fail("round trip of " + print(t));
  }
  if (v.pass) v.detail = std::to_string(kNormalizerTerms) + " terms";
  return v;
}

Verdict quaternions() {
  Verdict v;
  const QuaternionField h;
  const Value minus_one = QuaternionRational{Rational(-1), Rational(0), Rational(0), Rational(0)};
  const std::pair<const char*, Value> facts[] = {
      {"i*j", QuaternionRational::k()},
      {"j*k", QuaternionRational::i()},
      {"k*i", QuaternionRational::j()},
      {"j*i", -QuaternionRational::k()},
      {"k*j", -QuaternionRational::i()},
      {"i*k", -QuaternionRational::j()},
      {"i*i", minus_one},
      {"j*j", minus_one},
      {"k*k", minus_one},
      {"i*j*k", minus_one},
      {"inv(i)", -QuaternionRational::i()},
      {"inv(j)", -QuaternionRational::j()},
      {"inv(k)", -QuaternionRational::k()},
  };
  int checked = 0;
  for (const auto& [expr, expect] : facts) {
    if (eval(parse(expr), h) != expect) v.fail(expr);
    ++checked;
  }
  for (const auto& x : h.grid(1))
    if (h.conj(h.neg(x)) != h.neg(h.conj(x))) v.fail("c(-x) at " + h.render(x));
  ++checked;
  if (v.pass) v.detail = std::to_string(checked) + " facts";
  return v;
}

Verdict cross_structure() {
  Verdict v;
  const auto models = finite_models();
  std::mt19937_64 rng(0);
  int checked = 0;
  for (int n = 0; n < kEquations && v.pass; ++n) {
    const Term lhs = oracle::random_term(rng, kEquationDepth);
    Term rhs = lhs;
    for (int r = 0; r < kRewritesPerEquation; ++r) rhs = oracle::skmd_rewrite(rhs, rng);
    if (normalize(lhs) != normalize(rhs)) {
      v.fail("not a rational identity: " + print(lhs) + " = " + print(rhs));
      break;
    }
    for (const auto& s : models)
      if (eval(lhs, *s) != eval(rhs, *s)) v.fail(print(lhs) + " = " + print(rhs) + " diverges on " + s->name());
    ++checked;
  }
  if (v.pass) v.detail = std::to_string(checked) + " equations in " + std::to_string(models.size()) + " models";
  return v;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
  double limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "axiom suites exhaustive on finite models", finite_suites, kFiniteSuitesSeconds},
      {2, "randomized suites on infinite models", random_suites, 0},
      {3, "matrix inversion ring", matrix_ring, kMatrixSeconds},
      {4, "strong expansion of Z/m", expansion, 0},
      {5, "unique inverse", uniqueness, 0},
      {6, "decomposition into fields", decomposition, kDecomposeSeconds},
      {7, "normalizer", normalizer, 0},
      {8, "quaternion table", quaternions, 0},
      {9, "cross-structure equation agreement", cross_structure, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      std::ostringstream d;
      d << "over " << c.limit_seconds << " s";
      v.fail(d.str());
    }
    if (!v.pass) ++failures;
    std::printf("%s %d %s (%.2f s) %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, secs, v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
